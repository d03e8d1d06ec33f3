#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/monomial.hpp"
#include "bihilbert/partition.hpp"
#include "bihilbert/table.hpp"

namespace bihilbert {

/// One partition per cell of a rectangle; the partition at (i,j) has sides
/// (i+1, j+1).
class FerrersWitness {
 public:
  explicit FerrersWitness(BiDegree bounds = {})
      : bounds_(bounds), cells_(static_cast<std::size_t>(bounds.x + 1) * (bounds.y + 1)) {
    for (std::uint32_t i = 0; i <= bounds.x; ++i) {
      for (std::uint32_t j = 0; j <= bounds.y; ++j) {
        cells_[index(i, j)] = SidedPartition::zero(sides_of({i, j}));
      }
    }
  }

  const BiDegree& bounds() const noexcept { return bounds_; }

  const SidedPartition& at(std::uint32_t i, std::uint32_t j) const {
    return cells_[index(i, j)];
  }

  /// Throws InvalidWitness when the partition has the wrong sides.
  void set(std::uint32_t i, std::uint32_t j, SidedPartition alpha) {
    if (alpha.sides() != sides_of({i, j})) {
      throw InvalidWitness("partition " + to_string(alpha) + " cannot sit at cell " +
                           to_string(BiDegree{i, j}));
    }
    cells_[index(i, j)] = std::move(alpha);
  }

  friend bool operator==(const FerrersWitness&, const FerrersWitness&) = default;

 private:
  std::size_t index(std::uint32_t i, std::uint32_t j) const {
    if (i > bounds_.x || j > bounds_.y) {
      throw Error("cell " + to_string(BiDegree{i, j}) + " is outside the witness");
    }
    return static_cast<std::size_t>(i) * (bounds_.y + 1) + j;
  }

  BiDegree bounds_;
  std::vector<SidedPartition> cells_;
};

/// The table of weights of a witness.
inline HilbertTable weights(const FerrersWitness& w) {
  return HilbertTable::generate(w.bounds(), [&](std::uint32_t i, std::uint32_t j) {
    return w.at(i, j).weight();
  });
}

/// First cell (row-major) where `w` fails to certify `table`, with a reason.
struct WitnessDefect {
  BiDegree cell;
  std::string reason;
};

inline std::optional<WitnessDefect> check_witness(const HilbertTable& table,
                                                  const FerrersWitness& w) {
  if (table.bounds() != w.bounds()) {
    return WitnessDefect{{0, 0}, "witness bounds " + to_string(w.bounds()) +
                                     " differ from table bounds " + to_string(table.bounds())};
  }
  if (table.at(0, 0) != 1) return WitnessDefect{{0, 0}, "H(0,0) must be 1"};
  for (std::uint32_t i = 0; i <= table.bounds().x; ++i) {
    for (std::uint32_t j = 0; j <= table.bounds().y; ++j) {
      const auto& alpha = w.at(i, j);
      if (alpha.weight() != table.at(i, j)) {
        return WitnessDefect{{i, j}, "weight " + std::to_string(alpha.weight()) +
                                         " differs from H = " + std::to_string(table.at(i, j))};
      }
      if (i > 0 && !leq(alpha, lift_row(w.at(i - 1, j)))) {
        return WitnessDefect{{i, j}, to_string(alpha) + " is not below the row lift " +
                                         to_string(lift_row(w.at(i - 1, j)))};
      }
      if (j > 0 && !leq(alpha, lift_col(w.at(i, j - 1)))) {
        return WitnessDefect{{i, j}, to_string(alpha) + " is not below the column lift " +
                                         to_string(lift_col(w.at(i, j - 1)))};
      }
    }
  }
  return std::nullopt;
}

}  // namespace bihilbert
