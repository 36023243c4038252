#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bnsum/bnsum.hpp"

namespace bnsum::cli {

namespace fs = std::filesystem;

namespace {

struct Resources {
    std::string stopwords_path;
    std::string suffixes_path;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--stopwords", stopwords_path, "Stop-word list (default: built-in)")
            ->check(CLI::ExistingFile);
        cmd.add_option("--suffixes", suffixes_path, "Suffix list (default: built-in)")
            ->check(CLI::ExistingFile);
    }

    StopwordList stopwords() const {
        return stopwords_path.empty() ? default_stopwords() : load_stopwords(stopwords_path);
    }
    SuffixList suffixes() const {
        return suffixes_path.empty() ? default_suffixes() : load_suffixes(suffixes_path);
    }
};

struct ParamOptions {
    std::string params_path;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> theta;
    std::optional<std::int64_t> l_lower;
    std::optional<std::int64_t> l_upper;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--params", params_path, "key=value parameter file")
            ->check(CLI::ExistingFile);
        cmd.add_option("--alpha", alpha, "Weight of the thematic score");
        cmd.add_option("--beta", beta, "Weight of the positional score");
        cmd.add_option("--theta", theta, "TFIDF threshold for thematic terms");
        cmd.add_option("--l-lower", l_lower, "Lower sentence length cutoff");
        cmd.add_option("--l-upper", l_upper, "Upper sentence length cutoff");
    }

    ScoreParams resolve() const {
        ScoreParams p = params_path.empty() ? ScoreParams{} : load_params(params_path);
        if (alpha) p.alpha = *alpha;
        if (beta) p.beta = *beta;
        if (theta) p.theta = *theta;
        if (l_lower) p.l_lower = *l_lower;
        if (l_upper) p.l_upper = *l_upper;
        p.validate();
        return p;
    }
};

void emit(const std::string& out_path, std::string_view content, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_file(out_path, content);
    }
}

struct ManifestRow {
    std::size_t line_no;
    std::vector<std::string> fields;
};

// Tab-separated rows; blank lines and '#' comments are skipped. Relative paths
// are resolved against the manifest's directory by the callers.
std::vector<ManifestRow> read_manifest(const fs::path& path, std::size_t n_fields,
                                       std::vector<std::string>& problems) {
    const auto content = read_utf8_file(path);
    std::vector<ManifestRow> rows;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        ManifestRow row{line_no, {}};
        std::size_t pos = 0;
        for (;;) {
            const auto tab = line.find('\t', pos);
            row.fields.push_back(line.substr(pos, tab - pos));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        bool ok = row.fields.size() == n_fields;
        for (const auto& f : row.fields) ok = ok && !f.empty();
        if (!ok) {
            problems.push_back(path.string() + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(n_fields) + " non-empty tab-separated fields");
            continue;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() && problems.empty()) problems.push_back(path.string() + ": no entries");
    return rows;
}

fs::path resolve(const fs::path& manifest, const std::string& entry) {
    const fs::path p(entry);
    return p.is_absolute() ? p : manifest.parent_path() / p;
}

std::vector<double> parse_grid(const std::string& text, const char* flag) {
    // lo:hi:step, or a comma-separated list
    const auto number = [flag](std::string_view s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            throw InvalidParams(std::string(flag) + ": bad number '" + std::string(s) + "'");
        }
        return v;
    };
    std::vector<std::string_view> parts;
    const char sep = text.find(':') != std::string::npos ? ':' : ',';
    std::string_view rest(text);
    for (;;) {
        const auto at = rest.find(sep);
        parts.push_back(rest.substr(0, at));
        if (at == std::string_view::npos) break;
        rest.remove_prefix(at + 1);
    }
    if (sep == ':') {
        if (parts.size() != 3) throw InvalidParams(std::string(flag) + ": expected lo:hi:step");
        return arithmetic_grid(number(parts[0]), number(parts[1]), number(parts[2]));
    }
    std::vector<double> grid;
    for (const auto p : parts) grid.push_back(number(p));
    return grid;
}

int report_problems(const std::vector<std::string>& problems, std::ostream& err) {
    for (const auto& p : problems) err << "error: " << p << '\n';
    return problems.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extractive summarizer with TFIDF thematic terms and positional scoring",
                 "bnsum"};
    app.require_subcommand(1);

    // build-idf
    auto* build_cmd = app.add_subcommand("build-idf", "Build an IDF table from a directory of .txt files");
    Resources build_res;
    std::string corpus_dir;
    std::string build_out;
    build_res.add_to(*build_cmd);
    build_cmd->add_option("corpus_dir", corpus_dir, "Directory of UTF-8 *.txt documents")->required();
    build_cmd->add_option("--out", build_out, "Output IDF file")->required();

    // summarize
    auto* sum_cmd = app.add_subcommand("summarize", "Extract a summary from one document");
    Resources sum_res;
    ParamOptions sum_params;
    std::string sum_input;
    std::string sum_idf;
    std::string sum_out;
    std::string sum_sidecar;
    std::size_t budget_words = 0;
    std::size_t budget_sentences = 0;
    sum_res.add_to(*sum_cmd);
    sum_params.add_to(*sum_cmd);
    sum_cmd->add_option("input", sum_input, "UTF-8 document")->required();
    sum_cmd->add_option("--idf", sum_idf, "IDF file from build-idf")->required();
    auto* words_opt = sum_cmd->add_option("--budget-words", budget_words, "Word budget")
                          ->check(CLI::PositiveNumber);
    auto* sents_opt = sum_cmd->add_option("--budget-sentences", budget_sentences, "Sentence budget")
                          ->check(CLI::PositiveNumber);
    words_opt->excludes(sents_opt);
    sum_cmd->add_option("--out", sum_out, "Output file (default: stdout)");
    sum_cmd->add_option("--sidecar", sum_sidecar, "Write 'k<TAB>score' lines for selected sentences");

    // lead
    auto* lead_cmd = app.add_subcommand("lead", "LEAD baseline: the first n words of a document");
    std::string lead_input;
    std::string lead_out;
    std::size_t lead_words = 0;
    lead_cmd->add_option("input", lead_input, "UTF-8 document")->required();
    lead_cmd->add_option("--budget-words,--n-words", lead_words, "Number of words")
        ->required()
        ->check(CLI::PositiveNumber);
    lead_cmd->add_option("--out", lead_out, "Output file (default: stdout)");

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Unigram recall of system summaries");
    std::string eval_manifest;
    std::string eval_out;
    eval_cmd->add_option("manifest", eval_manifest,
                         "TSV rows: system_path<TAB>reference_path<TAB>doc_id")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--out", eval_out, "Report file (default: stdout)");

    // tune
    auto* tune_cmd = app.add_subcommand("tune", "Staged grid calibration of beta, theta, l_upper, l_lower");
    Resources tune_res;
    ParamOptions tune_params;
    std::string tune_manifest;
    std::string tune_idf;
    std::string tune_out_dir;
    std::uint64_t seed = 0;
    std::size_t train_size = 10;
    std::string beta_grid = "0:1:0.1";
    std::string theta_grid = "0:6:0.2";
    std::string l_upper_grid = "25,24,23,22";
    std::string l_lower_grid = "2,3,4,5";
    tune_res.add_to(*tune_cmd);
    tune_params.add_to(*tune_cmd);
    tune_cmd->add_option("manifest", tune_manifest, "TSV rows: doc_path<TAB>reference_path")
        ->required()
        ->check(CLI::ExistingFile);
    tune_cmd->add_option("--idf", tune_idf,
                         "IDF file (default: built from every manifest document)");
    tune_cmd->add_option("--out-dir", tune_out_dir, "Directory for params.conf and sweep TSVs")
        ->required();
    tune_cmd->add_option("--seed", seed, "Seed for the training split")->capture_default_str();
    tune_cmd->add_option("--train-size", train_size, "Training pairs drawn (0 = all)")
        ->capture_default_str();
    tune_cmd->add_option("--beta-grid", beta_grid, "lo:hi:step or comma list")->capture_default_str();
    tune_cmd->add_option("--theta-grid", theta_grid, "lo:hi:step or comma list")->capture_default_str();
    tune_cmd->add_option("--l-upper-grid", l_upper_grid, "lo:hi:step or comma list")
        ->capture_default_str();
    tune_cmd->add_option("--l-lower-grid", l_lower_grid, "lo:hi:step or comma list")
        ->capture_default_str();

    // params
    auto* params_cmd = app.add_subcommand("params", "Print the effective score parameters");
    ParamOptions shown_params;
    shown_params.add_to(*params_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (build_cmd->parsed()) {
            const auto docs = load_corpus_dir(corpus_dir, build_res.stopwords(), build_res.suffixes());
            const auto table = build_idf(docs);
            save_idf(table, build_out);
            out << "documents\t" << table.n_docs() << '\n'
                << "vocabulary\t" << table.df().size() << '\n';
            return 0;
        }

        if (sum_cmd->parsed()) {
            if (words_opt->count() == 0 && sents_opt->count() == 0) {
                err << "error: summarize needs --budget-words or --budget-sentences\n";
                return 1;
            }
            const auto params = sum_params.resolve();
            const auto idf = load_idf(sum_idf);
            const auto doc = preprocess(read_utf8_file(sum_input), sum_res.stopwords(),
                                        sum_res.suffixes(), fs::path(sum_input).stem().string());
            if (doc.empty()) {
                err << "error: '" << sum_input << "' contains no sentences\n";
                return 1;
            }
            const auto ranked = rank(doc, idf, params);
            const auto budget = words_opt->count() > 0 ? Budget::words(budget_words)
                                                       : Budget::sentences(budget_sentences);
            const auto summary = summarize(doc, ranked, budget);
            emit(sum_out, summary.text + '\n', out);
            if (!sum_sidecar.empty()) write_file(sum_sidecar, format_sidecar(summary, ranked));
            return 0;
        }

        if (lead_cmd->parsed()) {
            const auto doc = preprocess(read_utf8_file(lead_input), StopwordList{}, SuffixList{},
                                        fs::path(lead_input).stem().string());
            if (doc.empty()) {
                err << "error: '" << lead_input << "' contains no sentences\n";
                return 1;
            }
            emit(lead_out, lead_baseline(doc, lead_words).text + '\n', out);
            return 0;
        }

        if (eval_cmd->parsed()) {
            std::vector<std::string> problems;
            const fs::path manifest(eval_manifest);
            const auto rows = read_manifest(manifest, 3, problems);
            std::vector<EvalPair> pairs;
            for (const auto& row : rows) {
                try {
                    pairs.push_back({read_utf8_file(resolve(manifest, row.fields[0])),
                                     read_utf8_file(resolve(manifest, row.fields[1])),
                                     row.fields[2]});
                } catch (const Error& e) {
                    problems.push_back(manifest.string() + ":" + std::to_string(row.line_no) +
                                       ": " + e.what());
                }
            }
            if (report_problems(problems, err) != 0) return 1;
            const auto report = evaluate_corpus(pairs);
            for (const auto& id : report.overlength) {
                err << "warning: system summary for '" << id << "' is longer than its reference\n";
            }
            emit(eval_out, format_report(report), out);
            return 0;
        }

        if (tune_cmd->parsed()) {
            std::vector<std::string> problems;
            const fs::path manifest(tune_manifest);
            const auto rows = read_manifest(manifest, 2, problems);
            const auto stopwords = tune_res.stopwords();
            const auto suffixes = tune_res.suffixes();
            std::vector<TrainingPair> all;
            for (const auto& row : rows) {
                try {
                    const auto doc_path = resolve(manifest, row.fields[0]);
                    all.push_back({preprocess(read_utf8_file(doc_path), stopwords, suffixes,
                                              doc_path.stem().string()),
                                   read_utf8_file(resolve(manifest, row.fields[1]))});
                    if (all.back().doc.empty()) {
                        throw EmptyDocument("document '" + doc_path.string() + "' has no sentences");
                    }
                } catch (const Error& e) {
                    problems.push_back(manifest.string() + ":" + std::to_string(row.line_no) +
                                       ": " + e.what());
                }
            }
            if (report_problems(problems, err) != 0) return 1;

            IdfTable idf;
            if (tune_idf.empty()) {
                std::vector<Document> docs;
                for (const auto& p : all) docs.push_back(p.doc);
                idf = build_idf(docs);
            } else {
                idf = load_idf(tune_idf);
            }

            const auto chosen = sample_indices(all.size(), train_size == 0 ? all.size() : train_size,
                                               seed);
            std::vector<TrainingPair> training;
            std::string training_list;
            for (const auto i : chosen) {
                training.push_back(all[i]);
                training_list += all[i].doc.doc_id + '\n';
            }

            CalibrationGrids grids;
            grids.beta = parse_grid(beta_grid, "--beta-grid");
            grids.theta = parse_grid(theta_grid, "--theta-grid");
            grids.l_upper = parse_grid(l_upper_grid, "--l-upper-grid");
            grids.l_lower = parse_grid(l_lower_grid, "--l-lower-grid");
            const auto result = calibrate(training, idf, grids, tune_params.resolve());

            const fs::path dir(tune_out_dir);
            fs::create_directories(dir);
            write_file(dir / "training.txt", training_list);
            for (const auto& s : result.sweeps) {
                write_file(dir / ("sweep_" + std::string(to_string(s.parameter)) + ".tsv"),
                           format_sweep(s));
            }
            save_params(result.params, dir / "params.conf");
            out << format_params(result.params);
            return 0;
        }

        if (params_cmd->parsed()) {
            out << format_params(shown_params.resolve());
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace bnsum::cli
