#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bnsum/ranker.hpp"
#include "bnsum/textproc.hpp"

namespace bnsum {

struct Budget {
    enum class Kind { words, sentences };

    Kind kind = Kind::words;
    std::size_t n = 1;

    static Budget words(std::size_t n);
    static Budget sentences(std::size_t n);
};

struct Summary {
    std::string doc_id;
    std::vector<std::size_t> selected;  // strictly ascending sentence indices
    std::string text;
    std::size_t word_count = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

/// Picks sentences in ranked order (ungated before gated) until the budget is
/// met and re-orders them by position. Under a words budget a sentence that
/// would overflow is skipped; if nothing fits, the top sentence is cut to n
/// words. Throws EmptyDocument for a document without sentences.
Summary summarize(const Document& doc, std::span<const RankedSentence> ranked,
                  const Budget& budget);

/// The first n words of the document, cutting mid-sentence when needed.
Summary lead_baseline(const Document& doc, std::size_t n_words);

/// Sidecar lines "k\tscore" for each selected sentence.
std::string format_sidecar(const Summary& summary, std::span<const RankedSentence> ranked);

}  // namespace bnsum
