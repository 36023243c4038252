#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bnsum/corpus.hpp"
#include "bnsum/textproc.hpp"

namespace bnsum {

/// Weights and cutoffs of the sentence score
///   score_k = alpha * s_norm_k + beta * 1/sqrt(k)
/// with score_k forced to 0 when length_k <= l_lower or length_k >= l_upper.
struct ScoreParams {
    double alpha = 1.0;
    double beta = 0.10;
    double theta = 3.8;  // tuned against natural-log idf
    std::int64_t l_lower = 3;
    std::int64_t l_upper = 23;

    /// Throws InvalidParams if any constraint is violated.
    void validate() const;

    friend bool operator==(const ScoreParams&, const ScoreParams&) = default;
};

struct RankedSentence {
    std::size_t index = 0;
    double s_raw = 0.0;
    double s_norm = 0.0;
    double p = 0.0;
    double score = 0.0;
    bool gated = false;

    friend bool operator==(const RankedSentence&, const RankedSentence&) = default;
};

/// Source of per-stem idf weights. Lets callers rescale or substitute the
/// corpus statistics without touching the ranking code.
using IdfFunction = std::function<double(std::string_view)>;

IdfFunction idf_function(const IdfTable& table);

/// Stems whose document-level tf * idf strictly exceeds theta.
std::set<std::string, std::less<>> thematic_terms(const Document& doc, const IdfFunction& idf,
                                                 double theta);
std::set<std::string, std::less<>> thematic_terms(const Document& doc, const IdfTable& idf,
                                                 double theta);

/// Sum over distinct thematic stems w present in the sentence of
/// tf_sentence(w) * idf(w). Stop-word tokens never contribute.
double thematic_score(const Sentence& sentence,
                      const std::set<std::string, std::less<>>& thematic,
                      const IdfFunction& idf);

/// 1 / sqrt(k). Throws DomainError for k < 1.
double positional_value(std::int64_t k);

bool is_gated(std::size_t length_words, const ScoreParams& params) noexcept;

/// Scores every sentence and returns them ordered by (score desc, index asc).
std::vector<RankedSentence> rank(const Document& doc, const IdfFunction& idf,
                                 const ScoreParams& params);
std::vector<RankedSentence> rank(const Document& doc, const IdfTable& idf,
                                 const ScoreParams& params);

/// Flat key=value format: alpha, beta, theta, l_lower, l_upper. Missing keys
/// keep their defaults; unknown keys and malformed values raise FormatError.
ScoreParams parse_params(std::string_view content);
std::string format_params(const ScoreParams& params);
ScoreParams load_params(const std::filesystem::path& path);
void save_params(const ScoreParams& params, const std::filesystem::path& path);

}  // namespace bnsum
