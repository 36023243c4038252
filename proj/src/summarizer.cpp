#include "bnsum/summarizer.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "bnsum/error.hpp"

namespace bnsum {

namespace {

void require_sentences(const Document& doc) {
    if (doc.empty()) throw EmptyDocument("document '" + doc.doc_id + "' has no sentences");
}

// Raw text up to and including the n-th whitespace-delimited word.
std::string_view word_prefix(std::string_view text, std::size_t n) {
    const auto words = split_words(text);
    if (n >= words.size()) return text;
    const auto last = words[n - 1];
    return text.substr(0, static_cast<std::size_t>(last.data() + last.size() - text.data()));
}

}  // namespace

Budget Budget::words(std::size_t n) {
    if (n < 1) throw InvalidParams("word budget must be >= 1");
    return {Kind::words, n};
}

Budget Budget::sentences(std::size_t n) {
    if (n < 1) throw InvalidParams("sentence budget must be >= 1");
    return {Kind::sentences, n};
}

Summary summarize(const Document& doc, std::span<const RankedSentence> ranked,
                  const Budget& budget) {
    require_sentences(doc);
    if (budget.n < 1) throw InvalidParams("budget must be >= 1");

    std::vector<const RankedSentence*> order;
    order.reserve(ranked.size());
    for (const auto& r : ranked) {
        if (r.index < 1 || r.index > doc.sentences.size()) {
            throw DomainError("ranked sentence index " + std::to_string(r.index) +
                              " is outside document '" + doc.doc_id + "'");
        }
        if (!r.gated) order.push_back(&r);
    }
    for (const auto& r : ranked) {
        if (r.gated) order.push_back(&r);
    }

    // index -> text contributed to the summary
    std::map<std::size_t, std::string_view> chosen;
    std::size_t total = 0;
    for (const auto* r : order) {
        const auto& sentence = doc.sentences[r->index - 1];
        if (budget.kind == Budget::Kind::sentences) {
            if (chosen.size() >= budget.n) break;
            chosen.emplace(r->index, sentence.raw_span);
            total += sentence.length_words;
            continue;
        }
        if (total >= budget.n) break;
        if (total + sentence.length_words <= budget.n) {
            chosen.emplace(r->index, sentence.raw_span);
            total += sentence.length_words;
        } else if (chosen.empty()) {
            chosen.emplace(r->index, word_prefix(sentence.raw_span, budget.n));
            total = budget.n;
            break;
        }
    }

    Summary summary;
    summary.doc_id = doc.doc_id;
    summary.word_count = total;
    for (const auto& [index, text] : chosen) {
        if (!summary.text.empty()) summary.text += ' ';
        summary.text += text;
        summary.selected.push_back(index);
    }
    return summary;
}

Summary lead_baseline(const Document& doc, std::size_t n_words) {
    require_sentences(doc);
    if (n_words < 1) throw InvalidParams("LEAD word count must be >= 1");

    const auto words = split_words(doc.text);
    const std::size_t take = std::min(n_words, words.size());

    Summary summary;
    summary.doc_id = doc.doc_id;
    summary.word_count = take;
    for (std::size_t i = 0; i < take; ++i) {
        if (i > 0) summary.text += ' ';
        summary.text += words[i];
    }
    if (take > 0) {
        const auto& last = words[take - 1];
        const auto end = static_cast<std::size_t>(last.data() - doc.text.data()) + last.size();
        for (const auto& sentence : doc.sentences) {
            if (sentence.offset < end) summary.selected.push_back(sentence.index);
        }
    }
    return summary;
}

std::string format_sidecar(const Summary& summary, std::span<const RankedSentence> ranked) {
    std::string out;
    for (const auto k : summary.selected) {
        const auto it = std::find_if(ranked.begin(), ranked.end(),
                                     [k](const RankedSentence& r) { return r.index == k; });
        if (it == ranked.end()) continue;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu\t%.6f\n", k, it->score);
        out += buf;
    }
    return out;
}

}  // namespace bnsum
