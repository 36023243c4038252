#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace bnsum {

struct Token {
    std::string surface;
    std::string stem;  // always a non-empty prefix of surface
    bool is_stopword = false;

    friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
    std::size_t index = 0;   // 1-based position in the document
    std::size_t offset = 0;  // byte offset of raw_span within Document::text
    std::string raw_span;
    std::vector<Token> tokens;
    std::size_t length_words = 0;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// A segmented document. `text` is the source exactly as given; every
/// sentence's raw_span is the slice text[offset, offset + raw_span.size()) and
/// the bytes between consecutive spans are whitespace only.
struct Document {
    std::string doc_id;
    std::string text;
    std::vector<Sentence> sentences;

    bool empty() const noexcept { return sentences.empty(); }
    std::size_t word_count() const noexcept;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Exact-match stop-word set. Entries and probes are compared after ASCII
/// lowercasing and whitespace trimming.
class StopwordList {
public:
    StopwordList() = default;
    explicit StopwordList(const std::vector<std::string>& entries);

    bool contains(std::string_view surface) const;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::unordered_set<std::string>& entries() const noexcept { return entries_; }

private:
    std::unordered_set<std::string> entries_;
};

/// Suffix inventory for the longest-match stemmer. Duplicates collapse.
class SuffixList {
public:
    SuffixList() = default;
    explicit SuffixList(const std::vector<std::string>& suffixes);

    /// Suffixes ordered by byte length, longest first.
    const std::vector<std::string>& by_length() const noexcept { return suffixes_; }
    std::size_t size() const noexcept { return suffixes_.size(); }
    bool empty() const noexcept { return suffixes_.empty(); }

private:
    std::vector<std::string> suffixes_;
};

using StemFunction = std::function<std::string(std::string_view)>;

/// Line-oriented list format shared by stop-word and suffix files: one entry
/// per line, trimmed; blank lines and lines starting with '#' are skipped.
std::vector<std::string> parse_list(std::string_view content);

StopwordList load_stopwords(const std::filesystem::path& path);
SuffixList load_suffixes(const std::filesystem::path& path);

/// Built-in Bengali lists, identical to data/bengali_stopwords.txt and
/// data/bengali_suffixes.txt.
const StopwordList& default_stopwords();
const SuffixList& default_suffixes();

/// Splits text after each run of sentence terminators (danda, '.', '?', '!'),
/// also absorbing closing quotes/brackets that immediately follow the run.
/// Spans are trimmed of surrounding whitespace and point into `text`.
std::vector<std::string_view> segment_sentences(std::string_view text);

/// Maximal runs of non-separator characters. Separators are whitespace,
/// terminators and the punctuation set , ; : " ' “ ” ‘ ’ ( ) [ ] { }.
/// A run made only of dashes is dropped (free-standing hyphen), while
/// intra-word hyphens stay part of the token.
std::vector<std::string> tokenize(std::string_view span);

/// Whitespace-delimited words, as views into `text`.
std::vector<std::string_view> split_words(std::string_view text);
std::size_t count_words(std::string_view text);

/// Removes the single longest suffix that matches the end of `word` and
/// leaves a non-empty remainder. The result is a prefix view of `word`.
std::string_view stem(std::string_view word, const SuffixList& suffixes);

/// segment -> tokenize -> stop-word flag (on the surface form) -> stem.
/// Throws InvalidEncoding if text is not valid UTF-8.
Document preprocess(std::string_view text, const StopwordList& stopwords,
                    const SuffixList& suffixes, std::string doc_id);

/// Same pipeline with a caller-supplied stemmer, applied exactly once per token.
Document preprocess(std::string_view text, const StopwordList& stopwords,
                    const StemFunction& stemmer, std::string doc_id);

}  // namespace bnsum
