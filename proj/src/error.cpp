#include "bnsum/error.hpp"

namespace bnsum {

namespace {

std::string describe(const std::vector<std::string>& ids) {
    std::string msg = "empty reference summary for";
    for (const auto& id : ids) msg += " '" + id + "'";
    return msg;
}

}  // namespace

EmptyReference::EmptyReference(std::vector<std::string> doc_ids)
    : Error(describe(doc_ids)), doc_ids_(std::move(doc_ids)) {}

}  // namespace bnsum
