#pragma once

// Deciding whether a finite table is a Ferrers function, and turning a
// witness into a monomial ideal with that Hilbert function.
//
// The search visits cells by anti-diagonal (i+j), ties broken by increasing
// i. At each cell the candidates are the partitions of H(i,j) below the cap
// lift_row(alpha(i-1,j)) meet lift_col(alpha(i,j-1)), tried in descending
// lexicographic order. The first complete assignment is the witness.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/filters.hpp"
#include "bihilbert/ideal.hpp"
#include "bihilbert/monomial.hpp"
#include "bihilbert/partition.hpp"
#include "bihilbert/table.hpp"
#include "bihilbert/witness.hpp"

namespace bihilbert {

enum class CandidatePolicy {
  maximal,  // maximal_bounded
  all,      // enumerate_bounded
};

struct SearchOptions {
  CandidatePolicy candidates = CandidatePolicy::maximal;
  bool memoize = true;
  bool prefilter = true;
  std::size_t max_dead_ends = 64;
};

/// A branch on which a cell had no candidate.
struct DeadEnd {
  SidedPartition cap;
  std::optional<SidedPartition> above;  // alpha(i-1, j)
  std::optional<SidedPartition> left;   // alpha(i, j-1)

  friend bool operator==(const DeadEnd&, const DeadEnd&) = default;
};

struct FailureCertificate {
  BiDegree cell;
  std::string reason;
  /// Cap in force the first time the cell was found empty. Absent when the
  /// table was rejected by the quick filters.
  std::optional<SidedPartition> cap;
  /// Distinct failing branches at `cell`, in discovery order.
  std::vector<DeadEnd> dead_ends;
  bool from_filters = false;
};

struct FerrersDecision {
  std::optional<FerrersWitness> witness;
  std::optional<FailureCertificate> failure;

  bool yes() const noexcept { return witness.has_value(); }
};

namespace detail {

class FerrersSearch {
 public:
  FerrersSearch(const HilbertTable& table, const SearchOptions& options)
      : table_(table), options_(options), witness_(table.bounds()) {
    const BiDegree b = table.bounds();
    for (std::uint32_t d = 0; d <= b.x + b.y; ++d) {
      for (std::uint32_t i = 0; i <= std::min(d, b.x); ++i) {
        if (d - i <= b.y) order_.push_back({i, d - i});
      }
    }
    std::map<BiDegree, std::size_t> position;
    for (std::size_t k = 0; k < order_.size(); ++k) position[order_[k]] = k;

    // live_[k]: earlier cells still referenced by some cell at index >= k.
    live_.resize(order_.size() + 1);
    std::vector<std::size_t> last_use(order_.size(), 0);
    for (std::size_t k = 0; k < order_.size(); ++k) {
      auto [i, j] = order_[k];
      if (i > 0) last_use[position[{i - 1, j}]] = k;
      if (j > 0) last_use[position[{i, j - 1}]] = k;
    }
    for (std::size_t k = 0; k <= order_.size(); ++k) {
      for (std::size_t m = 0; m < k; ++m) {
        if (last_use[m] >= k) live_[k].push_back(m);
      }
    }
    stats_.resize(order_.size());
  }

  FerrersDecision run() {
    FerrersDecision out;
    if (visit(0)) {
      out.witness = witness_;
      return out;
    }
    out.failure = certificate();
    return out;
  }

 private:
  struct CellStats {
    std::size_t reached = 0;
    std::size_t nonempty = 0;
    std::vector<DeadEnd> dead_ends;
  };

  SidedPartition cap_at(BiDegree c) const {
    auto [i, j] = c;
    if (i == 0 && j == 0) return SidedPartition::full(sides_of(c));
    if (j == 0) return lift_row(witness_.at(i - 1, j));
    if (i == 0) return lift_col(witness_.at(i, j - 1));
    return meet(lift_row(witness_.at(i - 1, j)), lift_col(witness_.at(i, j - 1)));
  }

  std::vector<std::uint32_t> key(std::size_t k) const {
    std::vector<std::uint32_t> out{static_cast<std::uint32_t>(k)};
    for (std::size_t m : live_[k]) {
      auto e = witness_.at(order_[m].x, order_[m].y).entries();
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  }

  bool visit(std::size_t k) {
    if (k == order_.size()) return true;
    std::vector<std::uint32_t> state;
    if (options_.memoize) {
      state = key(k);
      if (failed_.contains(state)) return false;
    }
    const BiDegree c = order_[k];
    const SidedPartition cap = cap_at(c);
    const auto value = table_.at(c);
    auto candidates = options_.candidates == CandidatePolicy::maximal
                          ? maximal_bounded(value, cap)
                          : enumerate_bounded(value, cap);
    auto& st = stats_[k];
    ++st.reached;
    if (candidates.empty()) {
      record_dead_end(st, c, cap);
    } else {
      ++st.nonempty;
    }
    for (auto& alpha : candidates) {
      witness_.set(c.x, c.y, std::move(alpha));
      if (visit(k + 1)) return true;
    }
    witness_.set(c.x, c.y, SidedPartition::zero(sides_of(c)));
    if (options_.memoize) failed_.insert(std::move(state));
    return false;
  }

  void record_dead_end(CellStats& st, BiDegree c, const SidedPartition& cap) {
    if (st.dead_ends.size() >= options_.max_dead_ends) return;
    DeadEnd d{cap, {}, {}};
    if (c.x > 0) d.above = witness_.at(c.x - 1, c.y);
    if (c.y > 0) d.left = witness_.at(c.x, c.y - 1);
    if (std::find(st.dead_ends.begin(), st.dead_ends.end(), d) == st.dead_ends.end()) {
      st.dead_ends.push_back(std::move(d));
    }
  }

  // First cell (visit order) that was reached and never had a candidate; if
  // every dead-end cell had candidates on some branch, the deepest one.
  FailureCertificate certificate() const {
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < order_.size() && !pick; ++k) {
      if (stats_[k].reached > 0 && stats_[k].nonempty == 0) pick = k;
    }
    if (!pick) {
      for (std::size_t k = order_.size(); k-- > 0;) {
        if (!stats_[k].dead_ends.empty()) {
          pick = k;
          break;
        }
      }
    }
    FailureCertificate out;
    if (!pick) {
      out.cell = {0, 0};
      out.reason = "search exhausted";
      return out;
    }
    const auto& st = stats_[*pick];
    out.cell = order_[*pick];
    out.dead_ends = st.dead_ends;
    if (!st.dead_ends.empty()) out.cap = st.dead_ends.front().cap;
    out.reason = "no partition of " + std::to_string(table_.at(out.cell)) +
                 " fits below the cap";
    if (out.cap) {
      out.reason += " " + to_string(*out.cap) + " (weight " +
                    std::to_string(out.cap->weight()) + ")";
    }
    if (st.nonempty == 0) {
      out.reason += " on any explored branch";
    } else {
      out.reason += " on " + std::to_string(st.reached - st.nonempty) + " of " +
                    std::to_string(st.reached) + " explored branches";
    }
    return out;
  }

  const HilbertTable& table_;
  SearchOptions options_;
  FerrersWitness witness_;
  std::vector<BiDegree> order_;
  std::vector<std::vector<std::size_t>> live_;
  std::vector<CellStats> stats_;
  std::set<std::vector<std::uint32_t>> failed_;
};

}  // namespace detail

inline FerrersDecision is_ferrers(const HilbertTable& table,
                                  const SearchOptions& options = {}) {
  if (options.prefilter) {
    if (auto v = quick_filters(table)) {
      FerrersDecision out;
      out.failure = FailureCertificate{v->cell.value_or(BiDegree{0, 0}), v->reason, {}, {}, true};
      return out;
    }
  } else if (table.at(0, 0) != 1) {
    FerrersDecision out;
    out.failure = FailureCertificate{{0, 0}, "H(0,0) must be 1", {}, {}, true};
    return out;
  }
  return detail::FerrersSearch(table, options).run();
}

/// Bidegree-wise complements of the witness diagrams, i.e. the monomials of
/// the realized ideal inside the rectangle.
inline std::map<BiDegree, std::set<BiMonomial>> ideal_slices(const FerrersWitness& w) {
  std::map<BiDegree, std::set<BiMonomial>> out;
  for (std::uint32_t i = 0; i <= w.bounds().x; ++i) {
    for (std::uint32_t j = 0; j <= w.bounds().y; ++j) {
      const auto kept = monomial_set_of(w.at(i, j));
      auto& slice = out[{i, j}];
      for (const auto& m : monomials_of_degree({i, j})) {
        if (!kept.contains(m)) slice.insert(m);
      }
    }
  }
  return out;
}

/// The bilex ideal generated, inside the rectangle, by the complements of the
/// witness diagrams. Throws InvalidWitness if `w` does not certify `table`.
inline MonomialBiIdeal realize_ideal(const HilbertTable& table, const FerrersWitness& w) {
  if (auto defect = check_witness(table, w)) {
    throw InvalidWitness("cell " + to_string(defect->cell) + ": " + defect->reason);
  }
  auto gens = minimal_generators(ideal_slices(w), table.bounds());
  return MonomialBiIdeal(std::vector<BiMonomial>(gens.begin(), gens.end()));
}

}  // namespace bihilbert
