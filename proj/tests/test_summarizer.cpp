#include <doctest.h>

#include <random>

#include "bnsum/bnsum.hpp"

using namespace bnsum;

namespace {

IdfTable fixture_idf() {
    return IdfTable(4, {{"alpha", 1}, {"beta", 2}, {"gamma", 4}, {"delta", 1}, {"eps", 3}});
}

// Ranked order under (1, 0.1, 0, 3, 23) is 2, 4, 1, 3, 5; sentence 5 is gated.
// Lengths: 4, 5, 4, 6, 2.
Document fixture_doc() {
    return preprocess(
        "alpha beta the gamma. alpha alpha delta zeta omega. beta gamma the the. "
        "delta eps eps alpha beta gamma. gamma gamma.",
        StopwordList({"the"}), SuffixList{}, "fixture");
}

const ScoreParams kFixtureParams{1.0, 0.1, 0.0, 3, 23};

std::string join_words(std::string_view text) {
    std::string out;
    for (const auto w : split_words(text)) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

}  // namespace

TEST_CASE("Budget requires n >= 1") {
    CHECK_THROWS_AS(Budget::words(0), InvalidParams);
    CHECK_THROWS_AS(Budget::sentences(0), InvalidParams);
    CHECK(Budget::sentences(2).kind == Budget::Kind::sentences);
}

TEST_CASE("summarize with a sentence budget") {
    const auto doc = fixture_doc();
    const auto ranked = rank(doc, fixture_idf(), kFixtureParams);

    const auto two = summarize(doc, ranked, Budget::sentences(2));
    CHECK(two.selected == std::vector<std::size_t>{2, 4});
    CHECK(two.text == "alpha alpha delta zeta omega. delta eps eps alpha beta gamma.");
    CHECK(two.word_count == 11);
    CHECK(two.doc_id == "fixture");

    const auto all = summarize(doc, ranked, Budget::sentences(10));
    CHECK(all.selected == std::vector<std::size_t>{1, 2, 3, 4, 5});

    const auto one = preprocess("Only one sentence here.", StopwordList{}, SuffixList{}, "one");
    const auto s = summarize(one, rank(one, fixture_idf(), kFixtureParams), Budget::sentences(1));
    CHECK(s.text == "Only one sentence here.");
}

TEST_CASE("summarize with a word budget follows the greedy walk") {
    const auto doc = fixture_doc();
    const auto ranked = rank(doc, fixture_idf(), kFixtureParams);

    // 2 (5 words) fits, 4 (6) fits -> 11, 1 and 3 (4 each) overflow, gated 5 (2) overflows
    const auto s12 = summarize(doc, ranked, Budget::words(12));
    CHECK(s12.selected == std::vector<std::size_t>{2, 4});
    CHECK(s12.word_count == 11);

    // with one more word the gated sentence fills the gap
    const auto s13 = summarize(doc, ranked, Budget::words(13));
    CHECK(s13.selected == std::vector<std::size_t>{2, 4, 5});
    CHECK(s13.word_count == 13);
    CHECK(s13.text ==
          "alpha alpha delta zeta omega. delta eps eps alpha beta gamma. gamma gamma.");

    // nothing fits: the top sentence is cut at the budget
    const auto s3 = summarize(doc, ranked, Budget::words(3));
    CHECK(s3.selected == std::vector<std::size_t>{2});
    CHECK(s3.text == "alpha alpha delta");
    CHECK(s3.word_count == 3);

    const auto full = summarize(doc, ranked, Budget::words(doc.word_count()));
    CHECK(full.selected == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(full.text == join_words(doc.text));
    CHECK(summarize(doc, ranked, Budget::words(1000)).text == full.text);
}

TEST_CASE("gated sentences come after every ungated one") {
    // alpha = beta = 0 gives every sentence score 0; sentence 1 is too short
    const auto doc = preprocess("a b. c d e f. g h i j.", StopwordList{}, SuffixList{}, "d");
    const auto ranked = rank(doc, fixture_idf(), ScoreParams{0.0, 0.0, 0.0, 2, 23});
    CHECK(ranked.front().index == 1);
    CHECK(summarize(doc, ranked, Budget::sentences(1)).selected == std::vector<std::size_t>{2});
    CHECK(summarize(doc, ranked, Budget::sentences(2)).selected ==
          std::vector<std::size_t>{2, 3});
    CHECK(summarize(doc, ranked, Budget::words(10)).selected ==
          std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("summarize and lead reject empty documents") {
    const auto empty = preprocess("", StopwordList{}, SuffixList{}, "e");
    CHECK_THROWS_AS(summarize(empty, {}, Budget::words(3)), EmptyDocument);
    CHECK_THROWS_AS(lead_baseline(empty, 3), EmptyDocument);
}

TEST_CASE("lead_baseline") {
    const auto doc = preprocess("a b c d e.", StopwordList{}, SuffixList{}, "d");
    const auto three = lead_baseline(doc, 3);
    CHECK(three.text == "a b c");
    CHECK(three.word_count == 3);
    CHECK(three.selected == std::vector<std::size_t>{1});
    CHECK(lead_baseline(doc, 50).text == "a b c d e.");
    CHECK(lead_baseline(doc, 50).word_count == 5);

    const auto two_sent = preprocess("a b.\n\n c  d.", StopwordList{}, SuffixList{}, "d");
    const auto cut = lead_baseline(two_sent, 3);
    CHECK(cut.text == "a b. c");
    CHECK(cut.selected == std::vector<std::size_t>{1, 2});
}

TEST_CASE("lead_baseline on the bundled article") {
    const auto text = read_utf8_file(std::string(BNSUM_TEST_DATA) + "/article.txt");
    const auto doc = preprocess(text, default_stopwords(), default_suffixes(), "article");
    // hand count of the first ten whitespace words
    const auto lead = lead_baseline(doc, 10);
    CHECK(lead.text == "আর রক্তপাত চান না বলেই আলোচনায় । ৫ ফেব্রুয়ারি :");
    CHECK(lead.selected == std::vector<std::size_t>{1, 2});
}

TEST_CASE("sidecar lists selected indices with scores") {
    const auto doc = fixture_doc();
    const auto ranked = rank(doc, fixture_idf(), kFixtureParams);
    const auto s = summarize(doc, ranked, Budget::sentences(2));
    CHECK(format_sidecar(s, ranked) == "2\t1.070711\n4\t0.535840\n");
}

TEST_CASE("summary properties on random documents") {
    std::mt19937 rng(11);
    const IdfTable idf(5, {{"w2", 1}, {"w3", 2}, {"w4", 5}, {"w5", 3}});
    std::uniform_int_distribution<std::size_t> n_sent(1, 10), n_words(1, 12), word(0, 9),
        budget(1, 60);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        for (std::size_t s = 0, ns = n_sent(rng); s < ns; ++s) {
            for (std::size_t w = 0, nw = n_words(rng); w < nw; ++w) {
                text += (w ? "  w" : "w") + std::to_string(word(rng));
            }
            text += trial % 2 ? "।\n" : ". ";
        }
        const auto doc = preprocess(text, StopwordList({"w0"}), SuffixList{}, "r");
        const auto ranked = rank(doc, idf, ScoreParams{unit(rng), unit(rng), unit(rng), 2, 10});
        const auto n = budget(rng);

        for (const auto& b : {Budget::words(n), Budget::sentences(1 + n % 5)}) {
            const auto s = summarize(doc, ranked, b);
            REQUIRE_FALSE(s.selected.empty());
            for (std::size_t i = 1; i < s.selected.size(); ++i) {
                CHECK(s.selected[i - 1] < s.selected[i]);
            }
            CHECK(s.selected.back() <= doc.sentences.size());
            CHECK(count_words(s.text) == s.word_count);
            if (b.kind == Budget::Kind::words) {
                CHECK(s.word_count <= n);
            } else {
                CHECK(s.selected.size() == std::min(b.n, doc.sentences.size()));
            }
            std::string joined;
            for (const auto k : s.selected) {
                if (!joined.empty()) joined += ' ';
                joined += doc.sentences[k - 1].raw_span;
            }
            if (s.selected.size() > 1 || s.word_count == doc.sentences[s.selected[0] - 1].length_words) {
                CHECK(s.text == joined);
            } else {
                CHECK(joined.starts_with(s.text));
            }
        }

        const auto lead = lead_baseline(doc, n);
        CHECK(join_words(doc.text).starts_with(lead.text));
        CHECK(lead.word_count == std::min(n, doc.word_count()));
    }
}
