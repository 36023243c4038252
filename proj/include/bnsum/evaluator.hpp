#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bnsum {

/// Clipped unigram overlap divided by the number of reference tokens. Both
/// sides are tokenized with bnsum::tokenize, no stemming or stop-word removal.
/// Throws EmptyReference when the reference has no tokens.
double unigram_recall(std::string_view system, std::string_view reference);

struct EvalPair {
    std::string system;
    std::string reference;
    std::string doc_id;
};

struct EvalReport {
    std::vector<std::pair<std::string, double>> per_doc;  // input order
    double average = 0.0;
    /// doc_ids whose system summary has more words than its reference.
    std::vector<std::string> overlength;
};

/// Throws EmptyReference listing every pair with an empty reference, and
/// InvalidParams on an empty list or duplicate doc_id.
EvalReport evaluate_corpus(const std::vector<EvalPair>& pairs);

/// "doc_id\trecall" lines then "AVERAGE\tvalue", 4 decimals.
std::string format_report(const EvalReport& report);

}  // namespace bnsum
