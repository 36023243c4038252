#include "bnsum/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "bnsum/error.hpp"
#include "bnsum/io.hpp"

namespace bnsum {

namespace {

constexpr std::string_view kHeaderPrefix = "IDF v1 ";

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc() || ptr != end) {
        throw FormatError("IDF line " + std::to_string(line_no) + ": bad count '" +
                          std::string(field) + "'");
    }
    return value;
}

}  // namespace

IdfTable::IdfTable(std::uint64_t n_docs, DfMap df) : n_docs_(n_docs), df_(std::move(df)) {
    if (n_docs_ == 0) throw FormatError("IDF table needs at least one document");
    for (const auto& [stem, count] : df_) {
        if (stem.empty()) throw FormatError("IDF table contains an empty stem");
        if (count < 1 || count > n_docs_) {
            throw FormatError("df of '" + stem + "' is " + std::to_string(count) +
                              ", outside [1, " + std::to_string(n_docs_) + "]");
        }
    }
}

std::uint64_t IdfTable::df(std::string_view stem) const {
    const auto it = df_.find(stem);
    return it == df_.end() ? 0 : it->second;
}

double IdfTable::idf(std::string_view stem) const {
    const auto count = df(stem);
    const double denom = count == 0 ? 0.5 : static_cast<double>(count);
    return std::log(static_cast<double>(n_docs_) / denom);
}

IdfTable build_idf(std::span<const Document> documents) {
    if (documents.empty()) throw EmptyCorpus("cannot build IDF from an empty corpus");
    IdfTable::DfMap df;
    for (const auto& doc : documents) {
        std::set<std::string_view> seen;
        for (const auto& sentence : doc.sentences) {
            for (const auto& token : sentence.tokens) {
                if (!token.is_stopword) seen.insert(token.stem);
            }
        }
        for (const auto s : seen) ++df[std::string(s)];
    }
    return IdfTable(documents.size(), std::move(df));
}

std::string format_idf(const IdfTable& table) {
    std::string out(kHeaderPrefix);
    out += std::to_string(table.n_docs());
    out += '\n';
    for (const auto& [stem, count] : table.df()) {
        out += stem;
        out += '\t';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

IdfTable parse_idf(std::string_view content) {
    auto eol = content.find('\n');
    const auto header = content.substr(0, eol);
    if (!header.starts_with(kHeaderPrefix)) {
        throw FormatError("IDF file must start with '" + std::string(kHeaderPrefix) + "<N>'");
    }
    const auto n_docs = parse_count(header.substr(kHeaderPrefix.size()), 1);

    IdfTable::DfMap df;
    std::size_t line_no = 1;
    std::size_t pos = eol == std::string_view::npos ? content.size() : eol + 1;
    while (pos < content.size()) {
        ++line_no;
        eol = content.find('\n', pos);
        if (eol == std::string_view::npos) eol = content.size();
        const auto line = content.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;

        const auto tab = line.find('\t');
        if (tab == std::string_view::npos || tab == 0) {
            throw FormatError("IDF line " + std::to_string(line_no) + ": expected '<stem>\\t<df>'");
        }
        const auto count = parse_count(line.substr(tab + 1), line_no);
        if (!df.emplace(std::string(line.substr(0, tab)), count).second) {
            throw FormatError("IDF line " + std::to_string(line_no) + ": duplicate stem '" +
                              std::string(line.substr(0, tab)) + "'");
        }
    }
    return IdfTable(n_docs, std::move(df));
}

void save_idf(const IdfTable& table, const std::filesystem::path& path) {
    write_file(path, format_idf(table));
}

IdfTable load_idf(const std::filesystem::path& path) { return parse_idf(read_utf8_file(path)); }

std::vector<Document> load_corpus_dir(const std::filesystem::path& dir,
                                      const StopwordList& stopwords,
                                      const SuffixList& suffixes) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw IoFailure("corpus directory '" + dir.string() + "' does not exist");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw EmptyCorpus("corpus directory '" + dir.string() + "' contains no .txt files");
    }
    std::sort(files.begin(), files.end());

    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& file : files) {
        docs.push_back(preprocess(read_utf8_file(file), stopwords, suffixes,
                                  file.stem().string()));
    }
    return docs;
}

}  // namespace bnsum
