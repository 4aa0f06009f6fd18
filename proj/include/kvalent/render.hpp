#pragma once

#include <string>

#include "kvalent/bfile.hpp"
#include "kvalent/enumerator.hpp"

namespace kvalent {

enum class SeriesSelector { Centered, Bicentered, Total, All };

// Column of the census selected by a (non-All) selector.
const BigInt& selected_count(const CensusRow& row, SeriesSelector sel);

// Plain space-separated table with header "n centered bicentered total";
// with a breakdown present, per-diameter columns d0..dD are appended.
std::string render_table(const CensusTable& table);

std::string render_csv(const CensusTable& table);

// JSON array of row objects; counts are decimal strings so values beyond
// 64 bits survive a round trip.
std::string render_json(const CensusTable& table);

// Inverse of render_json; k cannot be recovered from the row data and is
// supplied by the caller.
CensusTable parse_census_json(const std::string& text, int k);

BFile census_bfile(const CensusTable& table, SeriesSelector sel, long long offset);

}  // namespace kvalent
