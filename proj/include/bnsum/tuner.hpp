#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bnsum/corpus.hpp"
#include "bnsum/ranker.hpp"
#include "bnsum/textproc.hpp"

namespace bnsum {

enum class TunedParameter { beta, theta, l_upper, l_lower };

std::string_view to_string(TunedParameter p) noexcept;

struct SweepSpec {
    TunedParameter parameter = TunedParameter::beta;
    std::vector<double> values;  // strictly increasing or strictly decreasing
    ScoreParams fixed;

    void validate() const;
};

struct SweepPoint {
    double value = 0.0;
    double average_recall = 0.0;

    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepResult {
    TunedParameter parameter = TunedParameter::beta;
    std::vector<SweepPoint> points;  // grid order
    double best_value = 0.0;         // smallest value reaching the maximum
};

struct TrainingPair {
    Document doc;
    std::string reference;
};

/// Returns `params` with the swept parameter set to `value`.
ScoreParams with_value(ScoreParams params, TunedParameter parameter, double value);

/// Average recall of the ranked extract (words budget = reference length)
/// over all training pairs.
double average_recall(const std::vector<TrainingPair>& training, const IdfTable& idf,
                      const ScoreParams& params);

SweepResult sweep(const SweepSpec& spec, const std::vector<TrainingPair>& training,
                  const IdfTable& idf);

/// Inclusive arithmetic grid lo, lo+step, ..., hi with values rounded to 9
/// decimals so that e.g. 0.3 is the literal 0.3.
std::vector<double> arithmetic_grid(double lo, double hi, double step);

struct CalibrationGrids {
    std::vector<double> beta = arithmetic_grid(0.0, 1.0, 0.1);
    std::vector<double> theta = arithmetic_grid(0.0, 6.0, 0.2);
    std::vector<double> l_upper = {25, 24, 23, 22};
    std::vector<double> l_lower = {2, 3, 4, 5};
};

struct CalibrationResult {
    ScoreParams params;
    std::vector<SweepResult> sweeps;  // beta, theta, l_upper, l_lower
};

/// Staged search: beta (theta = 0, alpha = 1), then theta, then l_upper, then
/// l_lower, each stage keeping the earlier winners. `start` supplies the
/// remaining values; its theta is overridden to 0 and alpha to 1.
CalibrationResult calibrate(const std::vector<TrainingPair>& training, const IdfTable& idf,
                            const CalibrationGrids& grids = {},
                            const ScoreParams& start = {});

/// "value\tavg_recall" per grid point.
std::string format_sweep(const SweepResult& result);

/// Seeded choice of `k` indices out of `n` (all of them when k >= n), returned
/// ascending. Uses mt19937_64 and rejection sampling so that the selection is
/// identical across standard library implementations.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace bnsum
