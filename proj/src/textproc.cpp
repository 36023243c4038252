#include "bnsum/textproc.hpp"

#include <algorithm>

#include "bnsum/error.hpp"
#include "bnsum/io.hpp"
#include "bnsum/utf8.hpp"

namespace bnsum {

namespace {

constexpr char32_t kDanda = 0x0964;

bool is_terminator(char32_t c) noexcept {
    return c == kDanda || c == U'.' || c == U'?' || c == U'!';
}

// Characters that may trail a terminator and still belong to its sentence.
bool is_closer(char32_t c) noexcept {
    switch (c) {
        case U'"': case U'\'': case U')': case U']': case U'}':
        case 0x201D: case 0x2019: case 0x00BB:
            return true;
        default:
            return false;
    }
}

bool is_punctuation(char32_t c) noexcept {
    switch (c) {
        case U',': case U';': case U':': case U'"': case U'\'':
        case U'(': case U')': case U'[': case U']': case U'{': case U'}':
        case 0x201C: case 0x201D: case 0x2018: case 0x2019:
            return true;
        default:
            return false;
    }
}

bool is_dash(char32_t c) noexcept {
    return c == U'-' || c == 0x2010 || c == 0x2013 || c == 0x2014;
}

bool is_separator(char32_t c) noexcept {
    return utf8::is_space(c) || is_terminator(c) || is_punctuation(c);
}

// Decodes at `i`, treating a malformed byte as a one-byte opaque character.
utf8::CodePoint next(std::string_view text, std::size_t i) noexcept {
    if (auto cp = utf8::decode(text, i)) return *cp;
    return {0xFFFD, i, 1};
}

std::string_view trim(std::string_view text) noexcept {
    std::size_t begin = 0;
    while (begin < text.size()) {
        const auto cp = next(text, begin);
        if (!utf8::is_space(cp.value)) break;
        begin += cp.length;
    }
    std::size_t end = begin;
    std::size_t last_content_end = begin;
    while (end < text.size()) {
        const auto cp = next(text, end);
        end += cp.length;
        if (!utf8::is_space(cp.value)) last_content_end = end;
    }
    return text.substr(begin, last_content_end - begin);
}

std::string normalize_entry(std::string_view entry) { return utf8::ascii_lower(trim(entry)); }

}  // namespace

std::size_t Document::word_count() const noexcept {
    std::size_t total = 0;
    for (const auto& s : sentences) total += s.length_words;
    return total;
}

StopwordList::StopwordList(const std::vector<std::string>& entries) {
    for (const auto& e : entries) {
        auto normalized = normalize_entry(e);
        if (!normalized.empty()) entries_.insert(std::move(normalized));
    }
}

bool StopwordList::contains(std::string_view surface) const {
    if (entries_.empty()) return false;
    return entries_.contains(normalize_entry(surface));
}

SuffixList::SuffixList(const std::vector<std::string>& suffixes) {
    for (const auto& s : suffixes) {
        if (!s.empty()) suffixes_.push_back(s);
    }
    std::sort(suffixes_.begin(), suffixes_.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    suffixes_.erase(std::unique(suffixes_.begin(), suffixes_.end()), suffixes_.end());
}

std::vector<std::string> parse_list(std::string_view content) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        auto eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        const auto line = trim(content.substr(pos, eol - pos));
        if (!line.empty() && line.front() != '#') out.emplace_back(line);
        pos = eol + 1;
    }
    return out;
}

StopwordList load_stopwords(const std::filesystem::path& path) {
    return StopwordList(parse_list(read_utf8_file(path)));
}

SuffixList load_suffixes(const std::filesystem::path& path) {
    return SuffixList(parse_list(read_utf8_file(path)));
}

std::vector<std::string_view> segment_sentences(std::string_view text) {
    std::vector<std::string_view> spans;
    constexpr auto npos = std::string_view::npos;
    std::size_t start = npos;
    std::size_t i = 0;

    const auto emit = [&](std::size_t end) {
        const auto span = trim(text.substr(start, end - start));
        if (!span.empty()) spans.push_back(span);
        start = npos;
    };

    while (i < text.size()) {
        auto cp = next(text, i);
        if (start == npos) {
            if (utf8::is_space(cp.value)) {
                i += cp.length;
                continue;
            }
            start = i;
        }
        i += cp.length;
        if (!is_terminator(cp.value)) continue;

        while (i < text.size() && is_terminator((cp = next(text, i)).value)) i += cp.length;
        while (i < text.size() && is_closer((cp = next(text, i)).value)) i += cp.length;
        emit(i);
    }
    if (start != npos) emit(text.size());
    return spans;
}

std::vector<std::string> tokenize(std::string_view span) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < span.size()) {
        auto cp = next(span, i);
        if (is_separator(cp.value)) {
            i += cp.length;
            continue;
        }
        const std::size_t begin = i;
        bool dashes_only = true;
        while (i < span.size()) {
            cp = next(span, i);
            if (is_separator(cp.value)) break;
            dashes_only = dashes_only && is_dash(cp.value);
            i += cp.length;
        }
        if (!dashes_only) tokens.emplace_back(span.substr(begin, i - begin));
    }
    return tokens;
}

std::vector<std::string_view> split_words(std::string_view text) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < text.size()) {
        auto cp = next(text, i);
        if (utf8::is_space(cp.value)) {
            i += cp.length;
            continue;
        }
        const std::size_t begin = i;
        while (i < text.size() && !utf8::is_space((cp = next(text, i)).value)) i += cp.length;
        words.push_back(text.substr(begin, i - begin));
    }
    return words;
}

std::size_t count_words(std::string_view text) { return split_words(text).size(); }

std::string_view stem(std::string_view word, const SuffixList& suffixes) {
    for (const auto& suffix : suffixes.by_length()) {
        if (suffix.size() < word.size() && word.ends_with(suffix)) {
            return word.substr(0, word.size() - suffix.size());
        }
    }
    return word;
}

Document preprocess(std::string_view text, const StopwordList& stopwords,
                    const StemFunction& stemmer, std::string doc_id) {
    utf8::require_valid(text, doc_id.empty() ? std::string_view("input") : doc_id);

    Document doc{std::move(doc_id), std::string(text), {}};
    const auto spans = segment_sentences(doc.text);
    doc.sentences.reserve(spans.size());
    for (const auto span : spans) {
        Sentence sentence;
        sentence.index = doc.sentences.size() + 1;
        sentence.offset = static_cast<std::size_t>(span.data() - doc.text.data());
        sentence.raw_span = std::string(span);
        sentence.length_words = count_words(span);
        for (auto& surface : tokenize(span)) {
            Token token;
            token.is_stopword = stopwords.contains(surface);
            token.stem = stemmer(surface);
            if (token.stem.empty() || !surface.starts_with(token.stem)) {
                throw DomainError("stemmer returned '" + token.stem +
                                  "', which is not a non-empty prefix of '" + surface + "'");
            }
            token.surface = std::move(surface);
            sentence.tokens.push_back(std::move(token));
        }
        doc.sentences.push_back(std::move(sentence));
    }
    return doc;
}

Document preprocess(std::string_view text, const StopwordList& stopwords,
                    const SuffixList& suffixes, std::string doc_id) {
    const StemFunction stemmer = [&suffixes](std::string_view w) {
        return std::string(stem(w, suffixes));
    };
    return preprocess(text, stopwords, stemmer, std::move(doc_id));
}

}  // namespace bnsum
