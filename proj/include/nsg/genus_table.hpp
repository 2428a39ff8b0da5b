#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/bounds.hpp"

namespace nsg {

/// One report row: genus, the two closed-form bounds around the count, and
/// the Catalan number.  Bounds are absent below the genus where they are
/// defined; the count is absent when the caller did not enumerate that far.
struct GenusRow {
  int g = 0;
  std::optional<std::uint64_t> lower;  // 2*F_g, g >= 2
  std::optional<std::uint64_t> n;      // enumerated count
  std::optional<std::uint64_t> upper;  // 1 + 3*2^(g-3), g >= 3
  unsigned __int128 catalan = 0;

  friend bool operator==(const GenusRow& a, const GenusRow& b) {
    return a.g == b.g && a.lower == b.lower && a.n == b.n && a.upper == b.upper &&
           a.catalan == b.catalan;
  }
};

/// Builds rows for genus 0..max_g.  counts[g], when provided, fills the n
/// column.  Capped where the Catalan column stops fitting 128 bits.
inline std::vector<GenusRow> genus_table(int max_g, std::span<const std::uint64_t> counts = {}) {
  if (max_g < 0) throw std::invalid_argument("genus_table: max_g must be >= 0");
  if (max_g > kMaxCatalanGenus)
    throw std::domain_error("genus_table: capped at genus " + std::to_string(kMaxCatalanGenus));
  std::vector<GenusRow> rows;
  rows.reserve(static_cast<std::size_t>(max_g) + 1);
  for (int g = 0; g <= max_g; ++g) {
    GenusRow row;
    row.g = g;
    if (g >= 2) row.lower = lower_bound(g);
    if (static_cast<std::size_t>(g) < counts.size()) row.n = counts[static_cast<std::size_t>(g)];
    if (g >= 3) row.upper = upper_bound(g);
    row.catalan = catalan(g);
    rows.push_back(row);
  }
  return rows;
}

/// Theorem check for one row: lower <= n <= upper and n <= catalan wherever
/// the participating columns exist.  Returns a message for the first violated
/// inequality, or nothing.
inline std::optional<std::string> sandwich_violation(const GenusRow& row) {
  if (!row.n) return std::nullopt;
  if (row.lower && *row.lower > *row.n)
    return "genus " + std::to_string(row.g) + ": lower bound " + std::to_string(*row.lower) +
           " exceeds count " + std::to_string(*row.n);
  if (row.upper && *row.n > *row.upper)
    return "genus " + std::to_string(row.g) + ": count " + std::to_string(*row.n) +
           " exceeds upper bound " + std::to_string(*row.upper);
  if (static_cast<unsigned __int128>(*row.n) > row.catalan)
    return "genus " + std::to_string(row.g) + ": count " + std::to_string(*row.n) +
           " exceeds catalan " + u128_to_string(row.catalan);
  return std::nullopt;
}

inline constexpr const char* kCsvHeader = "g,lower_2Fg,n_g,upper_1p3x2gm3,catalan";

inline std::string rows_to_csv(const std::vector<GenusRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.g);
    out += ',';
    if (r.lower) out += std::to_string(*r.lower);
    out += ',';
    if (r.n) out += std::to_string(*r.n);
    out += ',';
    if (r.upper) out += std::to_string(*r.upper);
    out += ',';
    out += u128_to_string(r.catalan);
    out += '\n';
  }
  return out;
}

inline std::vector<GenusRow> rows_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::invalid_argument("rows_from_csv: bad header");
  auto parse_u128 = [](const std::string& field) {
    unsigned __int128 v = 0;
    for (char c : field) {
      if (c < '0' || c > '9') throw std::invalid_argument("rows_from_csv: bad number");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
  };
  std::vector<GenusRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    if (fields.size() != 5) throw std::invalid_argument("rows_from_csv: bad row");
    GenusRow row;
    row.g = std::stoi(fields[0]);
    if (!fields[1].empty()) row.lower = std::stoull(fields[1]);
    if (!fields[2].empty()) row.n = std::stoull(fields[2]);
    if (!fields[3].empty()) row.upper = std::stoull(fields[3]);
    row.catalan = parse_u128(fields[4]);
    rows.push_back(row);
  }
  return rows;
}

/// JSON rows use the CSV column names; absent columns are omitted.  Catalan
/// numbers above 2^64 - 1 are emitted as decimal strings.
inline nlohmann::json rows_to_json(const std::vector<GenusRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj;
    obj["g"] = r.g;
    if (r.lower) obj["lower_2Fg"] = *r.lower;
    if (r.n) obj["n_g"] = *r.n;
    if (r.upper) obj["upper_1p3x2gm3"] = *r.upper;
    if (r.catalan <= static_cast<unsigned __int128>(UINT64_MAX))
      obj["catalan"] = static_cast<std::uint64_t>(r.catalan);
    else
      obj["catalan"] = u128_to_string(r.catalan);
    out.push_back(std::move(obj));
  }
  return out;
}

/// Plain-text table.  with_ratios adds an informational n_g/n_(g-1) column
/// (four decimals); the csv/json schemas never carry it.
inline std::string render_table(const std::vector<GenusRow>& rows, bool with_ratios = false) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"g", "2F_g", "n_g", "1+3*2^(g-3)", "C_g"};
  if (with_ratios) header.push_back("n_g/n_(g-1)");
  cells.push_back(header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::vector<std::string> line;
    line.push_back(std::to_string(r.g));
    line.push_back(r.lower ? std::to_string(*r.lower) : "");
    line.push_back(r.n ? std::to_string(*r.n) : "");
    line.push_back(r.upper ? std::to_string(*r.upper) : "");
    line.push_back(u128_to_string(r.catalan));
    if (with_ratios) {
      std::string ratio;
      if (i > 0 && r.n && rows[i - 1].n && *rows[i - 1].n > 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f",
                      static_cast<double>(*r.n) / static_cast<double>(*rows[i - 1].n));
        ratio = buf;
      }
      line.push_back(ratio);
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::string out;
  for (const auto& line : cells) {
    std::string rendered;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) rendered += "  ";
      rendered += std::string(width[c] - line[c].size(), ' ');
      rendered += line[c];
    }
    while (!rendered.empty() && rendered.back() == ' ') rendered.pop_back();
    out += rendered;
    out += '\n';
  }
  return out;
}

}  // namespace nsg
