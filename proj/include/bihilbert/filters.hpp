#pragma once

// Necessary conditions on a table that are cheap to check before the search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihilbert/monomial.hpp"
#include "bihilbert/partition.hpp"
#include "bihilbert/table.hpp"

namespace bihilbert {

/// A failed check. `cell` is set for per-cell conditions, `degree` for
/// conditions on the anti-diagonal sums.
struct Violation {
  std::optional<BiDegree> cell;
  std::optional<std::uint32_t> degree;
  std::string reason;
};

/// Empty optional means the table passed.
using CheckResult = std::optional<Violation>;

inline std::string describe(const Violation& v) {
  std::string out;
  if (v.cell) out += "cell " + to_string(*v.cell) + ": ";
  if (v.degree) out += "degree " + std::to_string(*v.degree) + ": ";
  return out + v.reason;
}

namespace detail {

inline std::int64_t diff(HilbertTable::Value a, HilbertTable::Value b) {
  return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

}  // namespace detail

/// H(0,0) = 1, the box bound, persistence of zeros, and the growth of every
/// cell towards its right and lower neighbours bounded by some achievable
/// partition size.
inline CheckResult quick_filters(const HilbertTable& h) {
  const BiDegree b = h.bounds();
  if (h.at(0, 0) != 1) {
    return Violation{BiDegree{0, 0}, {}, "H(0,0) = " + std::to_string(h.at(0, 0)) + ", expected 1"};
  }
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      if (h.at(i, j) > box_size(i, j)) {
        return Violation{BiDegree{i, j}, {},
                         "H = " + std::to_string(h.at(i, j)) + " exceeds dim R = " +
                             std::to_string(box_size(i, j))};
      }
    }
  }
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      if (h.at(i, j) != 0) continue;
      for (std::uint32_t u = i; u <= b.x; ++u) {
        for (std::uint32_t v = j; v <= b.y; ++v) {
          if (h.at(u, v) != 0) {
            return Violation{BiDegree{u, v}, {},
                             "nonzero value after H" + to_string(BiDegree{i, j}) + " = 0"};
          }
        }
      }
    }
  }
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      const bool down = i < b.x;
      const bool right = j < b.y;
      if (!down && !right) continue;
      const auto value = h.at(i, j);
      const std::int64_t g1 = down ? detail::diff(h.at(i + 1, j), value) : 0;
      const std::int64_t g2 = right ? detail::diff(h.at(i, j + 1), value) : 0;
      const auto sizes = enumerate_sizes(value, sides_of({i, j}));
      bool ok = std::any_of(sizes.begin(), sizes.end(), [&](const PartitionSize& s) {
        return g1 <= static_cast<std::int64_t>(s.saturated) &&
               g2 <= static_cast<std::int64_t>(s.last);
      });
      if (!ok) {
        std::string pair = "(" + (down ? std::to_string(g1) : std::string("-")) + "," +
                           (right ? std::to_string(g2) : std::string("-")) + ")";
        return Violation{BiDegree{i, j}, {},
                         "growth " + pair + " is not bounded by any size in " +
                             "the sizes of partitions of " + std::to_string(value) +
                             " with sides " + to_string(BiDegree{i + 1, j + 1})};
      }
    }
  }
  return std::nullopt;
}

/// The classical bounds H(i+1,j) <= H + floor(H/(i+1)) and
/// H(i,j+1) <= H + floor(H/(j+1)).
inline CheckResult growth_bound_ok(const HilbertTable& h) {
  const BiDegree b = h.bounds();
  for (std::uint32_t i = 0; i <= b.x; ++i) {
    for (std::uint32_t j = 0; j <= b.y; ++j) {
      const auto value = h.at(i, j);
      if (i < b.x && h.at(i + 1, j) > value + value / (i + 1)) {
        return Violation{BiDegree{i, j}, {},
                         "H" + to_string(BiDegree{i + 1, j}) + " = " +
                             std::to_string(h.at(i + 1, j)) + " exceeds " +
                             std::to_string(value + value / (i + 1))};
      }
      if (j < b.y && h.at(i, j + 1) > value + value / (j + 1)) {
        return Violation{BiDegree{i, j}, {},
                         "H" + to_string(BiDegree{i, j + 1}) + " = " +
                             std::to_string(h.at(i, j + 1)) + " exceeds " +
                             std::to_string(value + value / (j + 1))};
      }
    }
  }
  return std::nullopt;
}

/// Binomial coefficient, saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

/// Terms k_t > k_{t-1} > ... > k_s >= s >= 1 of the t-th binomial
/// representation h = C(k_t,t) + ... + C(k_s,s), listed from degree t down.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> binomial_representation(
    std::uint64_t h, std::uint32_t t) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;
  for (std::uint32_t i = t; i >= 1 && h > 0; --i) {
    std::uint64_t k = i;
    while (binomial(k + 1, i) <= h) ++k;
    terms.emplace_back(k, i);
    h -= binomial(k, i);
  }
  return terms;
}

/// h^<t>: shift every top and bottom index of the t-th binomial
/// representation up by one.
inline std::uint64_t macaulay_bound(std::uint64_t h, std::uint32_t t) {
  if (t == 0) throw Error("macaulay_bound needs t >= 1");
  std::uint64_t out = 0;
  for (auto [k, i] : binomial_representation(h, t)) {
    std::uint64_t term = binomial(k + 1, i + 1);
    out = term > UINT64_MAX - out ? UINT64_MAX : out + term;
  }
  return out;
}

/// O-sequence test for s_0, s_1, ...: s_0 <= 1, s_0 = 0 forces s_1 = 0, and
/// s_{t+1} <= s_t^<t> for t >= 1. Returns the index of the first bad term.
inline std::optional<std::uint32_t> first_osequence_failure(
    const std::vector<std::uint64_t>& s) {
  if (s.empty()) return std::nullopt;
  if (s[0] > 1) return 0;
  if (s[0] == 0 && s.size() > 1 && s[1] != 0) return 1;
  for (std::size_t t = 1; t + 1 < s.size(); ++t) {
    if (s[t + 1] > macaulay_bound(s[t], static_cast<std::uint32_t>(t))) {
      return static_cast<std::uint32_t>(t + 1);
    }
  }
  return std::nullopt;
}

/// s_t = sum of H(i,j) over i+j = t, for the anti-diagonals lying entirely in
/// the rectangle.
inline std::vector<std::uint64_t> diagonal_sums(const HilbertTable& h) {
  const std::uint32_t last = std::min(h.bounds().x, h.bounds().y);
  std::vector<std::uint64_t> s(last + 1, 0);
  for (std::uint32_t t = 0; t <= last; ++t) {
    for (std::uint32_t i = 0; i <= t; ++i) s[t] += h.at(i, t - i);
  }
  return s;
}

inline CheckResult diagonal_osequence_ok(const HilbertTable& h) {
  const auto s = diagonal_sums(h);
  auto bad = first_osequence_failure(s);
  if (!bad) return std::nullopt;
  std::string reason = "diagonal sums are not an O-sequence: s_" + std::to_string(*bad) +
                       " = " + std::to_string(s[*bad]);
  if (*bad >= 2) {
    reason += " exceeds s_" + std::to_string(*bad - 1) + "^<" + std::to_string(*bad - 1) +
              "> = " + std::to_string(macaulay_bound(s[*bad - 1], *bad - 1));
  }
  return Violation{{}, *bad, reason};
}

}  // namespace bihilbert
