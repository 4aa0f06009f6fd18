#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kvalent/series.hpp"

namespace kvalent {

/// OEIS b-file contents: one (index, value) pair per line, indices
/// contiguous and increasing.
struct BFileEntry {
    long long index = 0;
    BigInt value;

    bool operator==(const BFileEntry&) const = default;
};

struct BFile {
    std::vector<BFileEntry> entries;

    bool operator==(const BFile&) const = default;
};

struct BFileParseError : std::runtime_error {
    BFileParseError(int line, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

struct BFileStructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lines are "<index> <value>"; '#' comment lines and blank lines are
// skipped, surrounding whitespace tolerated, values arbitrary precision.
// Throws BFileParseError on a malformed line, BFileStructureError when
// indices are not contiguous.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::string& text);

std::string render_bfile(const BFile& b);

}  // namespace kvalent
