#include <doctest.h>

#include <set>

#include "bnsum/bnsum.hpp"
#include "oracle.hpp"

using namespace bnsum;

namespace {

const std::set<std::string> kStop{"w0", "w1"};

std::vector<TrainingPair> to_training(const std::vector<oracle::Pair>& pairs) {
    std::vector<TrainingPair> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out.push_back({preprocess(pairs[i].doc.text(), StopwordList({"w0", "w1"}), SuffixList{},
                                  "doc" + std::to_string(i)),
                       pairs[i].reference_text()});
    }
    return out;
}

IdfTable to_table(const oracle::Corpus& c) {
    IdfTable::DfMap df(c.df.begin(), c.df.end());
    return IdfTable(c.n_docs, df);
}

double oracle_average(const std::vector<oracle::Pair>& pairs, const oracle::Corpus& corpus,
                      const oracle::Params& p) {
    double sum = 0.0;
    for (const auto& pair : pairs) {
        const auto sc = oracle::scores(pair.doc, kStop, [&](const std::string& w) { return corpus.idf(w); }, p);
        sum += oracle::recall(oracle::extract(pair.doc, sc, p, pair.reference.size()), pair.reference);
    }
    return sum / double(pairs.size());
}

// Four five-word sentences. Sentence 1 carries a mid-weight term, sentence 4
// the heaviest; only beta = 1 lifts sentence 1 above sentence 4.
TrainingPair position_pair(int i) {
    const auto w = [i](const char* stem) { return std::string(stem) + std::to_string(i); };
    const std::string s1 = "mid " + w("a") + " " + w("b") + " " + w("c") + " " + w("d");
    const std::string text = s1 + ". " + w("e") + " " + w("f") + " " + w("g") + " " + w("h") +
                             " " + w("i") + ". " + w("j") + " " + w("k") + " " + w("l") + " " +
                             w("m") + " " + w("n") + ". top " + w("o") + " " + w("p") + " " +
                             w("q") + " " + w("r") + ".";
    return {preprocess(text, StopwordList{}, SuffixList{}, "pos" + std::to_string(i)), s1};
}

IdfTable position_idf(int n_docs) {
    // mid: ln(100/9), top: ln(100); every filler word has df = N
    IdfTable::DfMap df{{"mid", 9}, {"top", 1}};
    for (int i = 0; i < n_docs; ++i) {
        for (char c = 'a'; c <= 'r'; ++c) df[std::string(1, c) + std::to_string(i)] = 100;
    }
    return IdfTable(100, df);
}

}  // namespace

TEST_CASE("arithmetic_grid") {
    const auto beta = arithmetic_grid(0.0, 1.0, 0.1);
    REQUIRE(beta.size() == 11);
    CHECK(beta[3] == 0.3);
    CHECK(beta[7] == 0.7);
    CHECK(beta.back() == 1.0);
    const auto theta = arithmetic_grid(0.0, 6.0, 0.2);
    REQUIRE(theta.size() == 31);
    CHECK(theta[19] == 3.8);
    CHECK(theta.back() == 6.0);
    CHECK(arithmetic_grid(2, 5, 1) == std::vector<double>{2, 3, 4, 5});
    CHECK_THROWS_AS(arithmetic_grid(1, 0, 0.1), InvalidParams);
    CHECK_THROWS_AS(arithmetic_grid(0, 1, 0), InvalidParams);
}

TEST_CASE("default calibration grids") {
    const CalibrationGrids g;
    CHECK(g.beta.size() == 11);
    CHECK(g.theta.size() == 31);
    CHECK(g.l_upper == std::vector<double>{25, 24, 23, 22});
    CHECK(g.l_lower == std::vector<double>{2, 3, 4, 5});
}

TEST_CASE("SweepSpec validation and substitution") {
    CHECK_THROWS_AS((SweepSpec{TunedParameter::beta, {}, {}}.validate()), InvalidParams);
    CHECK_THROWS_AS((SweepSpec{TunedParameter::beta, {0.1, 0.3, 0.2}, {}}.validate()), InvalidParams);
    CHECK_THROWS_AS((SweepSpec{TunedParameter::beta, {0.1, 0.1}, {}}.validate()), InvalidParams);
    CHECK_NOTHROW((SweepSpec{TunedParameter::l_upper, {25, 24, 23}, {}}.validate()));

    CHECK(with_value({}, TunedParameter::theta, 4.2).theta == 4.2);
    CHECK(with_value({}, TunedParameter::l_lower, 5).l_lower == 5);
    CHECK_THROWS_AS(with_value({}, TunedParameter::l_upper, 22.5), InvalidParams);
}

TEST_CASE("sweep picks the smallest value on a plateau") {
    const auto pairs = to_training(oracle::synthetic_training(5, 4));
    std::vector<oracle::Doc> docs;
    const auto raw = oracle::synthetic_training(5, 4);
    for (const auto& p : raw) docs.push_back(p.doc);
    const auto idf = to_table(oracle::count_corpus(docs, kStop));

    SUBCASE("single grid value") {
        const auto r = sweep({TunedParameter::beta, {0.4}, {}}, pairs, idf);
        REQUIRE(r.points.size() == 1);
        CHECK(r.best_value == 0.4);
    }
    SUBCASE("descending grid with every point tied") {
        // no synthetic sentence exceeds 26 words, so upper cutoffs of 30+ never gate
        const auto r = sweep({TunedParameter::l_upper, {33, 32, 31, 30}, {}}, pairs, idf);
        CHECK(r.points[0].average_recall == r.points[3].average_recall);
        CHECK(r.best_value == 30);
        CHECK(r.points.front().value == 33);
    }
    SUBCASE("points agree with the oracle") {
        const auto r = sweep({TunedParameter::beta, arithmetic_grid(0, 1, 0.25), {1.0, 0.1, 0.0, 3, 23}},
                             pairs, idf);
        const auto corpus = oracle::count_corpus(docs, kStop);
        for (const auto& pt : r.points) {
            CHECK(pt.average_recall == oracle_average(raw, corpus, {1.0, pt.value, 0.0, 3, 23}));
        }
        CHECK(sweep({TunedParameter::beta, arithmetic_grid(0, 1, 0.25), {1.0, 0.1, 0.0, 3, 23}},
                    pairs, idf)
                  .points == r.points);
    }
}

TEST_CASE("beta sweep is won by pure position when references are leads") {
    std::vector<TrainingPair> training;
    for (int i = 0; i < 4; ++i) training.push_back(position_pair(i));
    const auto idf = position_idf(4);
    const auto r = sweep({TunedParameter::beta, arithmetic_grid(0, 1, 0.1), {1.0, 0.1, 0.0, 3, 23}},
                         training, idf);
    // exhaustive check: sentence 1 wins iff 0.5229 + beta > 1 + beta / 2, i.e. beta > 0.954
    for (const auto& pt : r.points) {
        CHECK(pt.average_recall == (pt.value == 1.0 ? 1.0 : 0.0));
    }
    CHECK(r.best_value == 1.0);
}

TEST_CASE("upper cutoff reproduces a plateau-then-drop curve") {
    // Sentence 1 has 22 words and holds the only thematic term; the reference
    // is sentence 1, so gating it at l_upper = 22 loses the whole reference.
    std::vector<TrainingPair> training;
    IdfTable::DfMap df{{"rare", 1}};
    for (int d = 0; d < 3; ++d) {
        std::string s1 = "rare rare rare";
        for (int i = 0; i < 19; ++i) {
            const auto w = "f" + std::to_string(d) + "_" + std::to_string(i);
            s1 += " " + w;
            df[w] = 50;
        }
        std::string s2;
        for (int i = 0; i < 5; ++i) {
            const auto w = "g" + std::to_string(d) + "_" + std::to_string(i);
            s2 += (i ? " " : "") + w;
            df[w] = 50;
        }
        training.push_back({preprocess(s1 + ". " + s2 + ".", StopwordList{}, SuffixList{},
                                       "lu" + std::to_string(d)),
                            s1});
    }
    const IdfTable idf(50, df);
    const auto r = sweep({TunedParameter::l_upper, {25, 24, 23, 22}, ScoreParams{}}, training, idf);
    CHECK(r.points[0].average_recall == 1.0);
    CHECK(r.points[1].average_recall == 1.0);
    CHECK(r.points[2].average_recall == 1.0);
    CHECK(r.points[3].average_recall < 1.0);
    CHECK(r.best_value == 23);
    CHECK(format_sweep(r) == "25\t1.0000\n24\t1.0000\n23\t1.0000\n22\t0.0000\n");
}

TEST_CASE("calibrate on documents that are their own references") {
    std::vector<TrainingPair> training;
    std::vector<Document> docs;
    for (int i = 0; i < 3; ++i) {
        const std::string text = "alpha beta gamma delta" + std::to_string(i) +
                                 ". epsilon zeta eta theta iota. kappa lambda mu nu.";
        training.push_back({preprocess(text, StopwordList{}, SuffixList{}, "d" + std::to_string(i)), text});
        docs.push_back(training.back().doc);
    }
    const auto result = calibrate(training, build_idf(docs));
    CHECK(result.params.beta == 0.0);
    CHECK(result.params.alpha == 1.0);
    REQUIRE(result.sweeps.size() == 4);
    for (const auto& s : result.sweeps) {
        for (const auto& pt : s.points) CHECK(pt.average_recall == 1.0);
    }
    CHECK(result.params.theta == 0.0);
    CHECK(result.params.l_upper == 22);
    CHECK(result.params.l_lower == 2);
}

TEST_CASE("calibrate never ends below its starting point") {
    const auto raw = oracle::synthetic_training(17, 10);
    std::vector<oracle::Doc> docs;
    for (const auto& p : raw) docs.push_back(p.doc);
    const auto idf = to_table(oracle::count_corpus(docs, kStop));
    const auto training = to_training(raw);

    const auto result = calibrate(training, idf);
    const ScoreParams stage_start{1.0, 0.1, 0.0, 3, 23};
    CHECK(average_recall(training, idf, result.params) >= average_recall(training, idf, stage_start));
    // each stage starts from the previous winner, so the curve maxima never fall
    for (std::size_t i = 1; i < result.sweeps.size(); ++i) {
        double prev = 0.0, cur = 0.0;
        for (const auto& pt : result.sweeps[i - 1].points) prev = std::max(prev, pt.average_recall);
        for (const auto& pt : result.sweeps[i].points) cur = std::max(cur, pt.average_recall);
        CHECK(cur >= prev);
    }
    const auto again = calibrate(training, idf);
    CHECK(again.params == result.params);
    for (std::size_t i = 0; i < 4; ++i) CHECK(again.sweeps[i].points == result.sweeps[i].points);
}

TEST_CASE("sample_indices") {
    CHECK(sample_indices(5, 10, 1) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    const auto a = sample_indices(38, 10, 7);
    CHECK(a.size() == 10);
    CHECK(std::set<std::size_t>(a.begin(), a.end()).size() == 10);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(a.back() < 38);
    CHECK(sample_indices(38, 10, 7) == a);
    CHECK(sample_indices(38, 10, 8) != a);
}
