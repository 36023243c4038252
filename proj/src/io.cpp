#include "bnsum/io.hpp"

#include <fstream>
#include <iterator>

#include "bnsum/error.hpp"
#include "bnsum/utf8.hpp"

namespace bnsum {

std::string read_utf8_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path.string() + "' for reading");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoFailure("error reading '" + path.string() + "'");
    if (content.starts_with("\xEF\xBB\xBF")) content.erase(0, 3);
    utf8::require_valid(content, path.string());
    return content;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoFailure("error writing '" + path.string() + "'");
}

}  // namespace bnsum
