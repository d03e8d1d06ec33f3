#pragma once

// Second differences of a table and the admissibility conditions that come
// from Hilbert functions of finite sets of points; every admissible table is
// a Ferrers function with an explicit witness built from column sums.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/filters.hpp"
#include "bihilbert/partition.hpp"
#include "bihilbert/table.hpp"
#include "bihilbert/witness.hpp"

namespace bihilbert {

/// c(i,j) = H(i,j) + H(i-1,j-1) - H(i-1,j) - H(i,j-1), with H = 0 at
/// negative indices.
class DeltaTable {
 public:
  explicit DeltaTable(BiDegree bounds)
      : bounds_(bounds), values_(static_cast<std::size_t>(bounds.x + 1) * (bounds.y + 1), 0) {}

  const BiDegree& bounds() const noexcept { return bounds_; }
  std::int64_t& at(std::uint32_t i, std::uint32_t j) { return values_[index(i, j)]; }
  std::int64_t at(std::uint32_t i, std::uint32_t j) const { return values_[index(i, j)]; }

  /// Sum of c(t, j) for t = 0..i.
  std::int64_t column_sum(std::uint32_t i, std::uint32_t j) const {
    std::int64_t s = 0;
    for (std::uint32_t t = 0; t <= i; ++t) s += at(t, j);
    return s;
  }

  /// Sum of c(i, t) for t = 0..j.
  std::int64_t row_sum(std::uint32_t i, std::uint32_t j) const {
    std::int64_t s = 0;
    for (std::uint32_t t = 0; t <= j; ++t) s += at(i, t);
    return s;
  }

 private:
  std::size_t index(std::uint32_t i, std::uint32_t j) const {
    if (i > bounds_.x || j > bounds_.y) throw Error("cell outside delta table");
    return static_cast<std::size_t>(i) * (bounds_.y + 1) + j;
  }

  BiDegree bounds_;
  std::vector<std::int64_t> values_;
};

inline DeltaTable delta(const HilbertTable& h) {
  DeltaTable c(h.bounds());
  auto val = [&](std::int64_t i, std::int64_t j) -> std::int64_t {
    if (i < 0 || j < 0) return 0;
    return static_cast<std::int64_t>(h.at(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
  };
  for (std::uint32_t i = 0; i <= h.bounds().x; ++i) {
    for (std::uint32_t j = 0; j <= h.bounds().y; ++j) {
      std::int64_t a = i, b = j;
      c.at(i, j) = val(a, b) + val(a - 1, b - 1) - val(a - 1, b) - val(a, b - 1);
    }
  }
  return c;
}

struct AdmissibilityOptions {
  /// Require the last row and last column of c to be <= 0, standing in for
  /// "c = 0 far out" on a finite window.
  bool require_tail = true;
};

inline CheckResult is_admissible(const HilbertTable& h, AdmissibilityOptions options = {}) {
  const auto c = delta(h);
  const BiDegree b = h.bounds();
  auto fail = [](std::uint32_t i, std::uint32_t j, std::string reason) {
    return Violation{BiDegree{i, j}, {}, std::move(reason)};
  };

  if (h.at(0, 0) != 1) return fail(0, 0, "H(0,0) must be 1");
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      if (c.at(i, j) > 1) return fail(i, j, "c = " + std::to_string(c.at(i, j)) + " exceeds 1");
    }
  }
  if (options.require_tail) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      if (c.at(b.x, j) > 0) {
        return fail(b.x, j, "c = " + std::to_string(c.at(b.x, j)) +
                                " > 0 in the last row; enlarge the window");
      }
    }
    for (std::uint32_t i = 0; i <= b.x; ++i) {
      if (c.at(i, b.y) > 0) {
        return fail(i, b.y, "c = " + std::to_string(c.at(i, b.y)) +
                                " > 0 in the last column; enlarge the window");
      }
    }
  }
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      if (c.at(i, j) > 0) continue;
      for (std::uint32_t u = i; u <= b.x; ++u) {
        for (std::uint32_t v = j; v <= b.y; ++v) {
          if (c.at(u, v) > 0) {
            return fail(u, v, "c = " + std::to_string(c.at(u, v)) + " > 0 after c" +
                                  to_string(BiDegree{i, j}) + " = " +
                                  std::to_string(c.at(i, j)));
          }
        }
      }
    }
  }
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      const auto rs = c.row_sum(i, j);
      if (rs < 0) return fail(i, j, "negative row partial sum " + std::to_string(rs));
      if (i > 0 && rs > c.row_sum(i - 1, j)) {
        return fail(i, j, "row partial sum " + std::to_string(rs) + " exceeds the previous row's " +
                              std::to_string(c.row_sum(i - 1, j)));
      }
      const auto cs = c.column_sum(i, j);
      if (cs < 0) return fail(i, j, "negative column partial sum " + std::to_string(cs));
      if (j > 0 && cs > c.column_sum(i, j - 1)) {
        return fail(i, j, "column partial sum " + std::to_string(cs) +
                              " exceeds the previous column's " +
                              std::to_string(c.column_sum(i, j - 1)));
      }
    }
  }
  return std::nullopt;
}

/// alpha(a,b) = (sum_{i<=a} c(i,0), ..., sum_{i<=a} c(i,b)). Only the local
/// conditions are needed, so the tail clause is not enforced here. Throws
/// NotAdmissible otherwise.
inline FerrersWitness admissible_to_witness(const HilbertTable& h) {
  if (auto v = is_admissible(h, {.require_tail = false})) {
    throw NotAdmissible(describe(*v));
  }
  const auto c = delta(h);
  FerrersWitness w(h.bounds());
  for (std::uint32_t a = 0; a <= h.bounds().x; ++a) {
    for (std::uint32_t b = 0; b <= h.bounds().y; ++b) {
      std::vector<SidedPartition::Entry> entries(b + 1);
      for (std::uint32_t r = 0; r <= b; ++r) {
        entries[r] = static_cast<SidedPartition::Entry>(c.column_sum(a, r));
      }
      w.set(a, b, SidedPartition::make(sides_of({a, b}), std::move(entries)));
    }
  }
  return w;
}

}  // namespace bihilbert
