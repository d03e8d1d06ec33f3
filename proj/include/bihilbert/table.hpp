#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/monomial.hpp"

namespace bihilbert {

/// Values H(i,j) for 0 <= i <= bounds.x, 0 <= j <= bounds.y. The first index
/// labels rows.
class HilbertTable {
 public:
  using Value = std::uint64_t;

  HilbertTable() : HilbertTable(BiDegree{0, 0}) {}

  explicit HilbertTable(BiDegree bounds, Value fill = 0)
      : bounds_(bounds),
        values_(static_cast<std::size_t>(bounds.x + 1) * (bounds.y + 1), fill) {}

  /// Throws Error when the rows are empty or ragged.
  static HilbertTable from_rows(const std::vector<std::vector<Value>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error("table has no cells");
    HilbertTable t({static_cast<std::uint32_t>(rows.size() - 1),
                    static_cast<std::uint32_t>(rows.front().size() - 1)});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.front().size()) {
        throw Error("row " + std::to_string(i) + " has " +
                    std::to_string(rows[i].size()) + " entries, expected " +
                    std::to_string(rows.front().size()));
      }
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        t.at(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) = rows[i][j];
      }
    }
    return t;
  }

  /// Every cell set by f(i, j).
  template <class F>
  static HilbertTable generate(BiDegree bounds, F&& f) {
    HilbertTable t(bounds);
    for (std::uint32_t i = 0; i <= bounds.x; ++i) {
      for (std::uint32_t j = 0; j <= bounds.y; ++j) t.at(i, j) = f(i, j);
    }
    return t;
  }

  const BiDegree& bounds() const noexcept { return bounds_; }
  bool contains(std::uint32_t i, std::uint32_t j) const noexcept {
    return i <= bounds_.x && j <= bounds_.y;
  }

  Value& at(std::uint32_t i, std::uint32_t j) { return values_[index(i, j)]; }
  Value at(std::uint32_t i, std::uint32_t j) const { return values_[index(i, j)]; }
  Value at(BiDegree d) const { return at(d.x, d.y); }

  const std::vector<Value>& values() const noexcept { return values_; }

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
  friend auto operator<=>(const HilbertTable& lhs, const HilbertTable& rhs) {
    if (auto c = lhs.bounds_ <=> rhs.bounds_; c != 0) return c;
    return lhs.values_ <=> rhs.values_;
  }

 private:
  std::size_t index(std::uint32_t i, std::uint32_t j) const {
    if (!contains(i, j)) {
      throw Error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                  ") is outside the table");
    }
    return static_cast<std::size_t>(i) * (bounds_.y + 1) + j;
  }

  BiDegree bounds_;
  std::vector<Value> values_;
};

/// Dimension of R_(a,b).
inline HilbertTable::Value box_size(std::uint32_t i, std::uint32_t j) {
  return static_cast<HilbertTable::Value>(i + 1) * (j + 1);
}

/// Whitespace-separated rows, `#` starts a comment, blank lines ignored.
inline HilbertTable parse_table(std::istream& in) {
  std::vector<std::vector<HilbertTable::Value>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<HilbertTable::Value> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (detail::is_space(line[pos])) {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      if (!detail::is_digit(line[pos])) {
        throw ParseError("expected a natural number, found '" +
                             std::string(1, line[pos]) + "'",
                         lineno, pos + 1);
      }
      HilbertTable::Value v = 0;
      while (pos < line.size() && detail::is_digit(line[pos])) {
        if (v > (UINT64_MAX - 9) / 10) throw ParseError("value out of range", lineno, start + 1);
        v = v * 10 + static_cast<HilbertTable::Value>(line[pos] - '0');
        ++pos;
      }
      if (pos < line.size() && !detail::is_space(line[pos])) {
        throw ParseError("unexpected character '" + std::string(1, line[pos]) + "'",
                         lineno, pos + 1);
      }
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()),
                       lineno, 0);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("table has no rows", lineno, 0);
  return HilbertTable::from_rows(rows);
}

inline HilbertTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

inline std::string to_text(const HilbertTable& t) {
  std::string out;
  for (std::uint32_t i = 0; i <= t.bounds().x; ++i) {
    for (std::uint32_t j = 0; j <= t.bounds().y; ++j) {
      if (j) out += ' ';
      out += std::to_string(t.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace bihilbert
