#include "etaq/table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "etaq/errors.hpp"

namespace etaq {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t field_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("table line " + std::to_string(line) + ": bad integer field '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t expected_table_checksum() { return 0x8f28e25f637519a6ull; }

std::vector<TableEntry> parse_table(std::string_view tsv) {
  std::vector<TableEntry> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  for (auto line : split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "N\tr\tm_r\tk\tdelta\tPi_sf") throw ParseError("table: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    const auto f = split(line, '\t');
    if (f.size() != 6) throw ParseError("table line " + std::to_string(line_no) + ": expected 6 fields");
    const std::int64_t level = field_int(f[0], line_no);
    rows.push_back(TableEntry{
        .id = rows.size() + 1,
        .entry = EtaQuotient::parse(level, f[1]),
        .m_r = static_cast<int>(field_int(f[2], line_no)),
        .k = static_cast<int>(field_int(f[3], line_no)),
        .delta = static_cast<int>(field_int(f[4], line_no)),
        .pi_sf = Integer(field_int(f[5], line_no)),
    });
  }
  if (!header_seen) throw ParseError("table: missing header");
  return rows;
}

const std::vector<TableEntry>& load_table() {
  static const std::vector<TableEntry> rows = [] {
    if (fnv1a64(table_tsv()) != expected_table_checksum()) {
      throw std::runtime_error("embedded table failed its checksum");
    }
    auto parsed = parse_table(table_tsv());
    if (parsed.size() != 83) throw std::runtime_error("embedded table does not have 83 rows");
    return parsed;
  }();
  return rows;
}

std::optional<std::size_t> find_table_entry(const EtaQuotient& e) {
  const auto& rows = load_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].entry == e) return i;
  }
  return std::nullopt;
}

std::vector<std::int64_t> table_levels() {
  std::vector<std::int64_t> levels;
  for (const auto& row : load_table()) levels.push_back(row.entry.level());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

}  // namespace etaq
