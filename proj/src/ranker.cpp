#include "bnsum/ranker.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "bnsum/error.hpp"
#include "bnsum/io.hpp"

namespace bnsum {

namespace {

using StemSet = std::set<std::string, std::less<>>;

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string_view trim_ascii(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw FormatError("params: bad value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

}  // namespace

void ScoreParams::validate() const {
    const auto fail = [](const std::string& what) { throw InvalidParams("score params: " + what); };
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) fail("alpha must lie in [0, 1]");
    if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0) fail("beta must lie in [0, 1]");
    if (!std::isfinite(theta) || theta < 0.0) fail("theta must be non-negative");
    if (l_lower < 1 || l_upper < 1) fail("length cutoffs must be positive");
    if (l_lower >= l_upper) fail("l_lower must be smaller than l_upper");
}

IdfFunction idf_function(const IdfTable& table) {
    return [&table](std::string_view stem) { return table.idf(stem); };
}

StemSet thematic_terms(const Document& doc, const IdfFunction& idf, double theta) {
    std::map<std::string_view, std::size_t> tf;
    for (const auto& sentence : doc.sentences) {
        for (const auto& token : sentence.tokens) {
            if (!token.is_stopword) ++tf[token.stem];
        }
    }
    StemSet thematic;
    for (const auto& [stem, count] : tf) {
        if (static_cast<double>(count) * idf(stem) > theta) thematic.emplace(stem);
    }
    return thematic;
}

StemSet thematic_terms(const Document& doc, const IdfTable& idf, double theta) {
    return thematic_terms(doc, idf_function(idf), theta);
}

double thematic_score(const Sentence& sentence, const StemSet& thematic, const IdfFunction& idf) {
    std::map<std::string_view, std::size_t> tf;
    for (const auto& token : sentence.tokens) {
        if (!token.is_stopword && thematic.contains(token.stem)) ++tf[token.stem];
    }
    double score = 0.0;
    for (const auto& [stem, count] : tf) score += static_cast<double>(count) * idf(stem);
    return score;
}

double positional_value(std::int64_t k) {
    if (k < 1) throw DomainError("sentence position must be >= 1, got " + std::to_string(k));
    return 1.0 / std::sqrt(static_cast<double>(k));
}

bool is_gated(std::size_t length_words, const ScoreParams& params) noexcept {
    const auto len = static_cast<std::int64_t>(length_words);
    return len <= params.l_lower || len >= params.l_upper;
}

std::vector<RankedSentence> rank(const Document& doc, const IdfFunction& idf,
                                 const ScoreParams& params) {
    params.validate();
    const auto thematic = thematic_terms(doc, idf, params.theta);

    std::vector<RankedSentence> ranked;
    ranked.reserve(doc.sentences.size());
    double max_raw = 0.0;
    for (const auto& sentence : doc.sentences) {
        RankedSentence r;
        r.index = sentence.index;
        r.s_raw = thematic_score(sentence, thematic, idf);
        r.p = positional_value(static_cast<std::int64_t>(sentence.index));
        r.gated = is_gated(sentence.length_words, params);
        max_raw = std::max(max_raw, r.s_raw);
        ranked.push_back(r);
    }
    for (auto& r : ranked) {
        r.s_norm = max_raw > 0.0 ? r.s_raw / max_raw : 0.0;
        r.score = r.gated ? 0.0 : params.alpha * r.s_norm + params.beta * r.p;
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedSentence& a, const RankedSentence& b) {
        return a.score != b.score ? a.score > b.score : a.index < b.index;
    });
    return ranked;
}

std::vector<RankedSentence> rank(const Document& doc, const IdfTable& idf,
                                 const ScoreParams& params) {
    return rank(doc, idf_function(idf), params);
}

ScoreParams parse_params(std::string_view content) {
    ScoreParams params;
    std::set<std::string, std::less<>> seen;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < content.size()) {
        ++line_no;
        auto eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        const auto line = trim_ascii(content.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("params line " + std::to_string(line_no) + ": expected key=value");
        }
        const auto key = trim_ascii(line.substr(0, eq));
        const auto value = trim_ascii(line.substr(eq + 1));
        if (!seen.emplace(key).second) {
            throw FormatError("params line " + std::to_string(line_no) + ": duplicate key '" +
                              std::string(key) + "'");
        }
        if (key == "alpha") {
            params.alpha = parse_number<double>(key, value);
        } else if (key == "beta") {
            params.beta = parse_number<double>(key, value);
        } else if (key == "theta") {
            params.theta = parse_number<double>(key, value);
        } else if (key == "l_lower") {
            params.l_lower = parse_number<std::int64_t>(key, value);
        } else if (key == "l_upper") {
            params.l_upper = parse_number<std::int64_t>(key, value);
        } else {
            throw FormatError("params line " + std::to_string(line_no) + ": unknown key '" +
                              std::string(key) + "'");
        }
    }
    params.validate();
    return params;
}

std::string format_params(const ScoreParams& params) {
    std::string out;
    out += "alpha=" + format_double(params.alpha) + '\n';
    out += "beta=" + format_double(params.beta) + '\n';
    out += "theta=" + format_double(params.theta) + '\n';
    out += "l_lower=" + std::to_string(params.l_lower) + '\n';
    out += "l_upper=" + std::to_string(params.l_upper) + '\n';
    return out;
}

ScoreParams load_params(const std::filesystem::path& path) {
    return parse_params(read_utf8_file(path));
}

void save_params(const ScoreParams& params, const std::filesystem::path& path) {
    write_file(path, format_params(params));
}

}  // namespace bnsum
