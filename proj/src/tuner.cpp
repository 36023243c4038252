#include "bnsum/tuner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "bnsum/error.hpp"
#include "bnsum/evaluator.hpp"
#include "bnsum/summarizer.hpp"

namespace bnsum {

namespace {

std::int64_t as_length(TunedParameter parameter, double value) {
    if (!std::isfinite(value) || std::floor(value) != value) {
        throw InvalidParams(std::string(to_string(parameter)) + " grid value " +
                            std::to_string(value) + " is not an integer");
    }
    return static_cast<std::int64_t>(value);
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = gen();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

std::string_view to_string(TunedParameter p) noexcept {
    switch (p) {
        case TunedParameter::beta: return "beta";
        case TunedParameter::theta: return "theta";
        case TunedParameter::l_upper: return "l_upper";
        case TunedParameter::l_lower: return "l_lower";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (values.empty()) throw InvalidParams("sweep grid is empty");
    if (values.size() > 1) {
        const bool up = values[1] > values[0];
        for (std::size_t i = 1; i < values.size(); ++i) {
            const bool ok = up ? values[i] > values[i - 1] : values[i] < values[i - 1];
            if (!ok) throw InvalidParams("sweep grid must be strictly monotone");
        }
    }
}

ScoreParams with_value(ScoreParams params, TunedParameter parameter, double value) {
    switch (parameter) {
        case TunedParameter::beta: params.beta = value; break;
        case TunedParameter::theta: params.theta = value; break;
        case TunedParameter::l_upper: params.l_upper = as_length(parameter, value); break;
        case TunedParameter::l_lower: params.l_lower = as_length(parameter, value); break;
    }
    return params;
}

double average_recall(const std::vector<TrainingPair>& training, const IdfTable& idf,
                      const ScoreParams& params) {
    if (training.empty()) throw InvalidParams("training set is empty");
    const auto weights = idf_function(idf);
    double sum = 0.0;
    for (const auto& pair : training) {
        const auto budget = count_words(pair.reference);
        if (budget == 0) throw EmptyReference({pair.doc.doc_id});
        const auto ranked = rank(pair.doc, weights, params);
        const auto summary = summarize(pair.doc, ranked, Budget::words(budget));
        sum += unigram_recall(summary.text, pair.reference);
    }
    return sum / static_cast<double>(training.size());
}

SweepResult sweep(const SweepSpec& spec, const std::vector<TrainingPair>& training,
                  const IdfTable& idf) {
    spec.validate();
    SweepResult result;
    result.parameter = spec.parameter;
    result.points.reserve(spec.values.size());
    for (const double value : spec.values) {
        const auto params = with_value(spec.fixed, spec.parameter, value);
        result.points.push_back({value, average_recall(training, idf, params)});
    }

    double best_recall = result.points.front().average_recall;
    for (const auto& pt : result.points) best_recall = std::max(best_recall, pt.average_recall);
    bool found = false;
    for (const auto& pt : result.points) {
        if (pt.average_recall == best_recall && (!found || pt.value < result.best_value)) {
            result.best_value = pt.value;
            found = true;
        }
    }
    return result;
}

std::vector<double> arithmetic_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidParams("grid needs lo <= hi and step > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
    }
    return grid;
}

CalibrationResult calibrate(const std::vector<TrainingPair>& training, const IdfTable& idf,
                            const CalibrationGrids& grids, const ScoreParams& start) {
    CalibrationResult result;
    result.params = start;
    result.params.alpha = 1.0;
    result.params.theta = 0.0;

    const std::pair<TunedParameter, const std::vector<double>*> stages[] = {
        {TunedParameter::beta, &grids.beta},
        {TunedParameter::theta, &grids.theta},
        {TunedParameter::l_upper, &grids.l_upper},
        {TunedParameter::l_lower, &grids.l_lower},
    };
    for (const auto& [parameter, grid] : stages) {
        auto stage = sweep(SweepSpec{parameter, *grid, result.params}, training, idf);
        result.params = with_value(result.params, parameter, stage.best_value);
        result.sweeps.push_back(std::move(stage));
    }
    return result;
}

std::string format_sweep(const SweepResult& result) {
    std::string out;
    for (const auto& pt : result.points) {
        char value[64];
        const auto end = std::to_chars(value, value + sizeof value, pt.value).ptr;
        char recall[32];
        std::snprintf(recall, sizeof recall, "%.4f", pt.average_recall);
        out.append(value, end);
        out += '\t';
        out += recall;
        out += '\n';
    }
    return out;
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (k >= n) return idx;
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_below(gen, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace bnsum
