#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/monomial.hpp"
#include "bihilbert/partition.hpp"
#include "bihilbert/table.hpp"

namespace bihilbert {

/// A monomial ideal given by generators. Bidegree slices are computed on
/// demand; the empty generator list is the zero ideal.
class MonomialBiIdeal {
 public:
  MonomialBiIdeal() = default;
  explicit MonomialBiIdeal(std::vector<BiMonomial> generators)
      : generators_(std::move(generators)) {}
  MonomialBiIdeal(std::initializer_list<BiMonomial> generators)
      : generators_(generators) {}

  const std::vector<BiMonomial>& generators() const noexcept { return generators_; }

  bool contains(const BiMonomial& m) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const BiMonomial& g) { return g.divides(m); });
  }

  /// Monomials of bidegree `at` lying in the ideal.
  std::set<BiMonomial> slice(BiDegree at) const {
    std::set<BiMonomial> out;
    for (const auto& m : monomials_of_degree(at)) {
      if (contains(m)) out.insert(m);
    }
    return out;
  }

  /// Monomials of bidegree `at` outside the ideal.
  std::set<BiMonomial> standard_monomials(BiDegree at) const {
    std::set<BiMonomial> out;
    for (const auto& m : monomials_of_degree(at)) {
      if (!contains(m)) out.insert(m);
    }
    return out;
  }

 private:
  std::vector<BiMonomial> generators_;
};

inline bool membership(const MonomialBiIdeal& ideal, const BiMonomial& m) {
  return ideal.contains(m);
}

/// Every monomial of total degree `degree` (the generators of the power of
/// the maximal ideal).
inline std::vector<BiMonomial> monomials_of_total_degree(std::uint32_t degree) {
  std::vector<BiMonomial> out;
  for (std::uint32_t a = 0; a <= degree; ++a) {
    for (std::uint32_t b = 0; a + b <= degree; ++b) {
      for (std::uint32_t c = 0; a + b + c <= degree; ++c) {
        out.push_back({a, b, c, degree - a - b - c});
      }
    }
  }
  return out;
}

inline HilbertTable::Value hilbert_value(const MonomialBiIdeal& ideal, BiDegree at) {
  HilbertTable::Value count = 0;
  for (const auto& m : monomials_of_degree(at)) {
    if (!ideal.contains(m)) ++count;
  }
  return count;
}

inline HilbertTable hilbert_table(const MonomialBiIdeal& ideal, BiDegree bounds) {
  return HilbertTable::generate(bounds, [&](std::uint32_t i, std::uint32_t j) {
    return hilbert_value(ideal, {i, j});
  });
}

/// The partition whose q-th entry is the largest p with T(p,q) outside the
/// ideal. Throws NotBilexError when the standard monomials in this bidegree
/// are not exactly the monomials under that profile.
inline SidedPartition alpha_from_ideal(const MonomialBiIdeal& ideal, BiDegree at) {
  std::vector<SidedPartition::Entry> entries(at.y + 1, 0);
  for (std::uint32_t q = 1; q <= at.y + 1; ++q) {
    for (std::uint32_t p = at.x + 1; p >= 1; --p) {
      if (!ideal.contains(*t_monomial(p, q, at))) {
        entries[q - 1] = p;
        break;
      }
    }
  }
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k] > entries[k - 1]) {
      throw NotBilexError("standard monomials in bidegree " + to_string(at) +
                          " do not form a Ferrers diagram (profile increases at position " +
                          std::to_string(k + 1) + ")");
    }
  }
  auto alpha = SidedPartition::make(sides_of(at), std::move(entries));
  if (alpha.weight() != hilbert_value(ideal, at)) {
    throw NotBilexError("standard monomials in bidegree " + to_string(at) +
                        " have gaps below their profile");
  }
  return alpha;
}

/// Reduces a bidegree-wise description of an ideal inside the rectangle
/// [0,bounds] to its minimal monomial generators. Each set must be closed
/// under multiplication by the variables as long as the product stays in the
/// rectangle; a violation throws ClosureError naming the monomial and variable.
inline std::set<BiMonomial> minimal_generators(
    const std::map<BiDegree, std::set<BiMonomial>>& by_degree, BiDegree bounds) {
  static const std::set<BiMonomial> kEmpty;
  auto slice = [&](BiDegree d) -> const std::set<BiMonomial>& {
    auto it = by_degree.find(d);
    return it == by_degree.end() ? kEmpty : it->second;
  };

  for (const auto& [deg, monomials] : by_degree) {
    if (!leq(deg, bounds)) {
      throw Error("bidegree " + to_string(deg) + " lies outside the rectangle " +
                  to_string(bounds));
    }
    for (const auto& m : monomials) {
      if (m.degree() != deg) {
        throw Error("monomial " + to_string(m) + " filed under bidegree " + to_string(deg));
      }
      for (Var v : kVariables) {
        BiMonomial up = m.times(v);
        if (!leq(up.degree(), bounds)) continue;
        if (!slice(up.degree()).contains(up)) {
          throw ClosureError("not closed: " + std::string(name(v)) + " * " + to_string(m) +
                             " = " + to_string(up) + " is missing from bidegree " +
                             to_string(up.degree()));
        }
      }
    }
  }

  std::vector<BiMonomial> all;
  for (const auto& [deg, monomials] : by_degree) all.insert(all.end(), monomials.begin(), monomials.end());
  std::set<BiMonomial> out;
  for (const auto& m : all) {
    bool minimal = std::none_of(all.begin(), all.end(), [&](const BiMonomial& d) {
      return d != m && d.divides(m);
    });
    if (minimal) out.insert(m);
  }
  return out;
}

/// One monomial per line in either text form; `#` starts a comment.
inline MonomialBiIdeal parse_ideal(std::istream& in) {
  std::vector<BiMonomial> gens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_monomial(line, lineno));
  }
  return MonomialBiIdeal(std::move(gens));
}

inline MonomialBiIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

inline std::string to_text(const MonomialBiIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) out += to_string(g) + '\n';
  return out;
}

}  // namespace bihilbert
