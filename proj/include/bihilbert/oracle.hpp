#pragma once

// Brute-force realizability on small rectangles, used to cross-check the
// Ferrers search. Slices of an ideal are bitmasks over the monomials of each
// bidegree; closure is checked by multiplying monomials by the variables.
// Nothing here touches partition arithmetic.

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/monomial.hpp"
#include "bihilbert/table.hpp"

namespace bihilbert {

struct OracleLimits {
  std::uint32_t max_cells = 20;  // monomials per bidegree
  std::uint32_t max_bound = 3;   // largest row/column index of a table
  HilbertTable::Value max_value = 16;
};

/// Which slices the search may choose in each bidegree.
enum class SliceFamily {
  bilex,  // up-sets under the lex orders x1 > x2, y1 > y2
  any,    // every subset of monomials
};

namespace detail {

using Mask = std::uint64_t;

/// Monomials of one bidegree with a bit index each.
struct DegreeGrid {
  BiDegree degree;
  std::vector<BiMonomial> monomials;
  std::map<BiMonomial, std::uint32_t> bit;

  explicit DegreeGrid(BiDegree d) : degree(d), monomials(monomials_of_degree(d)) {
    for (std::uint32_t k = 0; k < monomials.size(); ++k) bit[monomials[k]] = k;
  }

  std::size_t size() const { return monomials.size(); }
};

inline void check_cells(BiDegree d, const OracleLimits& limits) {
  const std::uint64_t cells = static_cast<std::uint64_t>(d.x + 1) * (d.y + 1);
  if (cells > limits.max_cells || cells > 63) {
    throw LimitExceeded("bidegree " + to_string(d) + " has " + std::to_string(cells) +
                        " monomials, limit is " + std::to_string(limits.max_cells));
  }
}

/// Bilex straight from the definition: raising x1 at fixed y-part, or y1 at
/// fixed x-part, stays in the set.
inline bool mask_is_bilex(const DegreeGrid& g, Mask mask) {
  for (std::uint32_t k = 0; k < g.size(); ++k) {
    if (!(mask >> k & 1)) continue;
    const BiMonomial& m = g.monomials[k];
    for (std::uint32_t o = 0; o < g.size(); ++o) {
      const BiMonomial& other = g.monomials[o];
      bool raises_x = other.y1 == m.y1 && other.y2 == m.y2 && other.x1 > m.x1;
      bool raises_y = other.x1 == m.x1 && other.x2 == m.x2 && other.y1 > m.y1;
      if ((raises_x || raises_y) && !(mask >> o & 1)) return false;
    }
  }
  return true;
}

inline std::vector<Mask> slice_masks(const DegreeGrid& g, SliceFamily family,
                                     const OracleLimits& limits) {
  check_cells(g.degree, limits);
  std::vector<Mask> out;
  const Mask end = Mask{1} << g.size();
  for (Mask m = 0; m < end; ++m) {
    if (family == SliceFamily::any || mask_is_bilex(g, m)) out.push_back(m);
  }
  return out;
}

/// Families of slices over a rectangle, closed under the variables.
class SliceFamilySearch {
 public:
  SliceFamilySearch(BiDegree bounds, SliceFamily family, const OracleLimits& limits)
      : bounds_(bounds) {
    if (bounds.x > limits.max_bound || bounds.y > limits.max_bound) {
      throw LimitExceeded("rectangle " + to_string(bounds) + " exceeds the oracle bound " +
                          std::to_string(limits.max_bound));
    }
    for (std::uint32_t d = 0; d <= bounds.x + bounds.y; ++d) {
      for (std::uint32_t i = 0; i <= std::min(d, bounds.x); ++i) {
        if (d - i > bounds.y) continue;
        cells_.emplace_back(BiDegree{i, d - i});
      }
    }
    std::map<BiDegree, std::size_t> pos;
    for (std::size_t k = 0; k < cells_.size(); ++k) pos[cells_[k].grid.degree] = k;
    for (auto& cell : cells_) {
      const BiDegree d = cell.grid.degree;
      for (const auto& mask : slice_masks(cell.grid, family, limits)) {
        cell.by_count[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
        cell.all.push_back(mask);
      }
      if (d.x > 0) link(cell, cells_[pos[{d.x - 1, d.y}]].grid, cell.from_above, Var::x1, Var::x2);
      if (d.y > 0) link(cell, cells_[pos[{d.x, d.y - 1}]].grid, cell.from_left, Var::y1, Var::y2);
      cell.above = d.x > 0 ? static_cast<long>(pos[{d.x - 1, d.y}]) : -1;
      cell.left = d.y > 0 ? static_cast<long>(pos[{d.x, d.y - 1}]) : -1;
    }
    chosen_.assign(cells_.size(), 0);
  }

  /// True iff some closed family has |complement| = H in every cell.
  bool realizes(const HilbertTable& h) {
    target_ = &h;
    return find(0);
  }

  /// Hilbert tables of every closed family.
  std::set<HilbertTable> census() {
    std::set<HilbertTable> out;
    collect(0, out);
    return out;
  }

 private:
  struct Cell {
    explicit Cell(BiDegree d) : grid(d), by_count(grid.size() + 1) {}
    DegreeGrid grid;
    std::vector<std::vector<Mask>> by_count;
    std::vector<Mask> all;
    std::vector<Mask> from_above;  // bit k of the cell above -> image bits here
    std::vector<Mask> from_left;
    long above = -1;
    long left = -1;
  };

  static void link(const Cell& here, const DegreeGrid& source, std::vector<Mask>& images,
                   Var v1, Var v2) {
    images.assign(source.size(), 0);
    for (std::uint32_t k = 0; k < source.size(); ++k) {
      for (Var v : {v1, v2}) {
        images[k] |= Mask{1} << here.grid.bit.at(source.monomials[k].times(v));
      }
    }
  }

  Mask required(std::size_t k) const {
    const Cell& c = cells_[k];
    Mask need = 0;
    auto add = [&](long src, const std::vector<Mask>& images) {
      if (src < 0) return;
      Mask s = chosen_[static_cast<std::size_t>(src)];
      for (std::size_t b = 0; b < images.size(); ++b) {
        if (s >> b & 1) need |= images[b];
      }
    };
    add(c.above, c.from_above);
    add(c.left, c.from_left);
    return need;
  }

  bool find(std::size_t k) {
    if (k == cells_.size()) return true;
    const Cell& c = cells_[k];
    const auto value = target_->at(c.grid.degree);
    if (value > c.grid.size()) return false;
    const Mask need = required(k);
    for (Mask m : c.by_count[c.grid.size() - value]) {
      if ((m & need) != need) continue;
      chosen_[k] = m;
      if (find(k + 1)) return true;
    }
    return false;
  }

  void collect(std::size_t k, std::set<HilbertTable>& out) {
    if (k == cells_.size()) {
      HilbertTable t(bounds_);
      for (std::size_t m = 0; m < cells_.size(); ++m) {
        const auto d = cells_[m].grid.degree;
        t.at(d.x, d.y) = cells_[m].grid.size() - static_cast<std::size_t>(std::popcount(chosen_[m]));
      }
      out.insert(std::move(t));
      return;
    }
    const Mask need = required(k);
    for (Mask m : cells_[k].all) {
      if ((m & need) != need) continue;
      chosen_[k] = m;
      collect(k + 1, out);
    }
  }

  BiDegree bounds_;
  std::vector<Cell> cells_;
  std::vector<Mask> chosen_;
  const HilbertTable* target_ = nullptr;
};

}  // namespace detail

/// Every bilex subset of R_(a,b), found by testing all subsets.
inline std::vector<std::set<BiMonomial>> enumerate_bilex_sets(BiDegree at,
                                                               const OracleLimits& limits = {}) {
  detail::DegreeGrid g(at);
  std::vector<std::set<BiMonomial>> out;
  for (auto mask : detail::slice_masks(g, SliceFamily::bilex, limits)) {
    std::set<BiMonomial> s;
    for (std::uint32_t k = 0; k < g.size(); ++k) {
      if (mask >> k & 1) s.insert(g.monomials[k]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Reusable exhaustive checker for many tables sharing one rectangle.
class RealizabilityOracle {
 public:
  explicit RealizabilityOracle(BiDegree bounds, SliceFamily family = SliceFamily::bilex,
                               const OracleLimits& limits = {})
      : bounds_(bounds), limits_(limits), search_(bounds, family, limits) {}

  bool operator()(const HilbertTable& h) {
    if (h.bounds() != bounds_) throw Error("table bounds differ from the oracle's rectangle");
    for (auto v : h.values()) {
      if (v > limits_.max_value) {
        throw LimitExceeded("table value " + std::to_string(v) + " exceeds the oracle limit " +
                            std::to_string(limits_.max_value));
      }
    }
    return search_.realizes(h);
  }

 private:
  BiDegree bounds_;
  OracleLimits limits_;
  detail::SliceFamilySearch search_;
};

inline bool brute_force_realizable(const HilbertTable& h, SliceFamily family = SliceFamily::bilex,
                                   const OracleLimits& limits = {}) {
  return RealizabilityOracle(h.bounds(), family, limits)(h);
}

/// Hilbert tables of all monomial ideals whose slices come from `family`,
/// restricted to the rectangle. The unit ideal contributes the all-zero
/// table, the only one with H(0,0) = 0.
inline std::set<HilbertTable> enumerate_realizable_tables(BiDegree bounds = {2, 2},
                                                          SliceFamily family = SliceFamily::bilex,
                                                          const OracleLimits& limits = {}) {
  return detail::SliceFamilySearch(bounds, family, limits).census();
}

}  // namespace bihilbert
