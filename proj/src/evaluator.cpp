#include "bnsum/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <unordered_map>

#include "bnsum/error.hpp"
#include "bnsum/textproc.hpp"

namespace bnsum {

double unigram_recall(std::string_view system, std::string_view reference) {
    const auto ref_tokens = tokenize(reference);
    if (ref_tokens.empty()) throw EmptyReference({});

    std::unordered_map<std::string, std::size_t> ref_counts;
    for (const auto& t : ref_tokens) ++ref_counts[t];

    std::size_t overlap = 0;
    for (auto& t : tokenize(system)) {
        auto it = ref_counts.find(t);
        // Consuming reference counts clips each unigram at min(count_S, count_R).
        if (it != ref_counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    return static_cast<double>(overlap) / static_cast<double>(ref_tokens.size());
}

EvalReport evaluate_corpus(const std::vector<EvalPair>& pairs) {
    if (pairs.empty()) throw InvalidParams("evaluation needs at least one pair");

    std::vector<std::string> empty_refs;
    std::set<std::string_view> ids;
    for (const auto& pair : pairs) {
        if (!ids.insert(pair.doc_id).second) {
            throw InvalidParams("duplicate doc_id '" + pair.doc_id + "' in evaluation pairs");
        }
        if (tokenize(pair.reference).empty()) empty_refs.push_back(pair.doc_id);
    }
    if (!empty_refs.empty()) throw EmptyReference(std::move(empty_refs));

    EvalReport report;
    double sum = 0.0;
    for (const auto& pair : pairs) {
        const double recall = unigram_recall(pair.system, pair.reference);
        report.per_doc.emplace_back(pair.doc_id, recall);
        sum += recall;
        if (count_words(pair.system) > count_words(pair.reference)) {
            report.overlength.push_back(pair.doc_id);
        }
    }
    report.average = sum / static_cast<double>(pairs.size());
    return report;
}

std::string format_report(const EvalReport& report) {
    std::string out;
    char buf[32];
    for (const auto& [doc_id, recall] : report.per_doc) {
        std::snprintf(buf, sizeof buf, "%.4f", recall);
        out += doc_id + '\t' + buf + '\n';
    }
    std::snprintf(buf, sizeof buf, "%.4f", report.average);
    out += std::string("AVERAGE\t") + buf + '\n';
    return out;
}

}  // namespace bnsum
