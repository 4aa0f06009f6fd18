#include "kvalent/bfile.hpp"

#include <sstream>

namespace kvalent {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

BFile parse_bfile(std::istream& in) {
    BFile result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_tok, value_tok, extra;
        fields >> index_tok >> value_tok;
        if (value_tok.empty() || (fields >> extra))
            throw BFileParseError(line_no, "expected exactly two fields");
        if (!is_integer_token(index_tok, true))
            throw BFileParseError(line_no, "bad index '" + index_tok + "'");
        if (!is_integer_token(value_tok, true))
            throw BFileParseError(line_no, "bad value '" + value_tok + "'");

        BFileEntry entry;
        entry.index = std::stoll(index_tok);
        entry.value = BigInt(value_tok);
        if (!result.entries.empty() &&
            entry.index != result.entries.back().index + 1)
            throw BFileStructureError("index gap between " +
                                      std::to_string(result.entries.back().index) +
                                      " and " + std::to_string(entry.index));
        result.entries.push_back(std::move(entry));
    }
    return result;
}

BFile parse_bfile(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

std::string render_bfile(const BFile& b) {
    std::string out;
    for (const auto& e : b.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.value.get_str();
        out += '\n';
    }
    return out;
}

}  // namespace kvalent
