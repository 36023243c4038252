#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnsum/textproc.hpp"

namespace bnsum {

/// Document-frequency statistics over a background corpus. Only integer
/// counts are stored; idf values are derived on demand with the natural log.
class IdfTable {
public:
    using DfMap = std::map<std::string, std::uint64_t, std::less<>>;

    IdfTable() = default;
    /// Throws FormatError unless n_docs >= 1 and 1 <= df <= n_docs for all stems.
    IdfTable(std::uint64_t n_docs, DfMap df);

    std::uint64_t n_docs() const noexcept { return n_docs_; }
    const DfMap& df() const noexcept { return df_; }
    /// 0 for stems never seen.
    std::uint64_t df(std::string_view stem) const;

    /// ln(N / df); unseen stems are smoothed to df = 0.5, giving ln(2N).
    double idf(std::string_view stem) const;

    friend bool operator==(const IdfTable&, const IdfTable&) = default;

private:
    std::uint64_t n_docs_ = 0;
    DfMap df_;
};

/// Counts, for every stem, the documents containing it among non-stop-word
/// tokens. Throws EmptyCorpus on an empty list.
IdfTable build_idf(std::span<const Document> documents);

inline double idf_lookup(const IdfTable& table, std::string_view stem) { return table.idf(stem); }

/// "IDF v1 <N>" header, then "<stem>\t<df>" per line sorted by stem.
std::string format_idf(const IdfTable& table);
IdfTable parse_idf(std::string_view content);

void save_idf(const IdfTable& table, const std::filesystem::path& path);
IdfTable load_idf(const std::filesystem::path& path);

/// Reads every "*.txt" file in `dir` (sorted by file name) as one document
/// whose doc_id is the file stem. Throws EmptyCorpus if none exist.
std::vector<Document> load_corpus_dir(const std::filesystem::path& dir,
                                      const StopwordList& stopwords,
                                      const SuffixList& suffixes);

}  // namespace bnsum
