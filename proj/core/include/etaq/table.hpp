#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "etaq/eta_quotient.hpp"
#include "etaq/integer.hpp"

namespace etaq {

/// One published row: the eta-quotient plus its listed columns.
struct TableEntry {
  std::size_t id = 0;  // 1-based position in the table
  EtaQuotient entry;
  int m_r = 0;
  int k = 0;
  int delta = 0;
  Integer pi_sf;
};

/// The embedded table as TSV: header `N\tr\tm_r\tk\tdelta\tPi_sf`, one row per line.
std::string_view table_tsv();

/// FNV-1a 64 of `text`.
std::uint64_t fnv1a64(std::string_view text);

/// Checksum the embedded TSV must match.
std::uint64_t expected_table_checksum();

/// Parses TSV in the embedded format. Throws ParseError on malformed rows.
std::vector<TableEntry> parse_table(std::string_view tsv);

/// The embedded 83 rows, parsed once. Throws std::runtime_error when the
/// embedded data fails its checksum.
const std::vector<TableEntry>& load_table();

/// Index into load_table() of the row equal to `e`, if any.
std::optional<std::size_t> find_table_entry(const EtaQuotient& e);

/// Levels that occur in the table, increasing.
std::vector<std::int64_t> table_levels();

}  // namespace etaq
