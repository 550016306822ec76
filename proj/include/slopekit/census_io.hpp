#pragma once

#include <string>
#include <vector>

#include "slopekit/char_slopes.hpp"

namespace slopekit {

/// Column order shared by both formats.
inline constexpr const char* kCensusHeader = "r\ts\tp\tq\tw\tc\tcompanion_r\tcompanion_b\tverified";

/// Header line plus one line per record, newline-terminated.
std::string census_to_tsv(const std::vector<CensusRecord>& records);
/// One JSON object per line.
std::string census_to_jsonl(const std::vector<CensusRecord>& records);

/// Inverse of the writers; throw DomainError on malformed input.
std::vector<CensusRecord> census_from_tsv(const std::string& text);
std::vector<CensusRecord> census_from_jsonl(const std::string& text);

}  // namespace slopekit
