#pragma once

// Partitions of a number that fit in a box: a weakly decreasing tuple of
// exactly `length` entries, each at most `width`.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bihilbert/error.hpp"

namespace bihilbert {

/// Box dimensions of a partition. `width` bounds every entry, `length` is the
/// exact number of entries (trailing zeros included).
struct Sides {
  std::uint32_t width = 0;
  std::uint32_t length = 0;

  friend auto operator<=>(const Sides&, const Sides&) = default;
};

/// The pair (number of entries equal to the width, last entry).
struct PartitionSize {
  std::uint32_t saturated = 0;
  std::uint32_t last = 0;

  friend auto operator<=>(const PartitionSize&, const PartitionSize&) = default;
};

/// Componentwise order on sizes.
inline bool leq(const PartitionSize& lhs, const PartitionSize& rhs) {
  return lhs.saturated <= rhs.saturated && lhs.last <= rhs.last;
}

class SidedPartition {
 public:
  using Entry = std::uint32_t;

  /// The empty partition with sides (0,0).
  SidedPartition() = default;

  /// Validating constructor.
  static SidedPartition make(Sides sides, std::vector<Entry> entries) {
    if (entries.size() != sides.length) {
      throw PartitionError("partition has " + std::to_string(entries.size()) +
                           " entries but its sides require " +
                           std::to_string(sides.length));
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k] > sides.width) {
        throw PartitionError("entry " + std::to_string(entries[k]) +
                             " exceeds width " + std::to_string(sides.width));
      }
      if (k > 0 && entries[k] > entries[k - 1]) {
        throw PartitionError("entries are not weakly decreasing");
      }
    }
    return SidedPartition(sides, std::move(entries));
  }

  static SidedPartition zero(Sides sides) {
    return SidedPartition(sides, std::vector<Entry>(sides.length, 0));
  }

  static SidedPartition full(Sides sides) {
    return SidedPartition(sides, std::vector<Entry>(sides.length, sides.width));
  }

  const Sides& sides() const noexcept { return sides_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  Entry operator[](std::size_t k) const { return entries_[k]; }

  std::uint64_t weight() const noexcept {
    std::uint64_t sum = 0;
    for (Entry e : entries_) sum += e;
    return sum;
  }

  /// Throws PartitionError when the partition has no entries.
  PartitionSize size() const {
    if (entries_.empty()) {
      throw PartitionError("size is undefined for a partition with no entries");
    }
    auto saturated = static_cast<std::uint32_t>(
        std::count(entries_.begin(), entries_.end(), sides_.width));
    return {saturated, entries_.back()};
  }

  friend bool operator==(const SidedPartition&, const SidedPartition&) = default;
  friend auto operator<=>(const SidedPartition& lhs, const SidedPartition& rhs) {
    if (auto c = lhs.sides_ <=> rhs.sides_; c != 0) return c;
    return lhs.entries_ <=> rhs.entries_;
  }

 private:
  SidedPartition(Sides sides, std::vector<Entry> entries)
      : sides_(sides), entries_(std::move(entries)) {}

  friend SidedPartition meet(const SidedPartition&, const SidedPartition&);
  friend SidedPartition lift_row(const SidedPartition&);
  friend SidedPartition lift_col(const SidedPartition&);
  friend class PartitionBuilder;

  Sides sides_{};
  std::vector<Entry> entries_;
};

namespace detail {

inline void require_same_sides(const SidedPartition& a, const SidedPartition& b) {
  if (a.sides() != b.sides()) {
    throw PartitionError("partitions have different sides");
  }
}

}  // namespace detail

/// Componentwise minimum.
inline SidedPartition meet(const SidedPartition& a, const SidedPartition& b) {
  detail::require_same_sides(a, b);
  std::vector<SidedPartition::Entry> out(a.length());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::min(a[k], b[k]);
  return SidedPartition(a.sides(), std::move(out));
}

/// True iff every entry of `lower` is at most the matching entry of `upper`.
inline bool leq(const SidedPartition& lower, const SidedPartition& upper) {
  detail::require_same_sides(lower, upper);
  for (std::size_t k = 0; k < lower.length(); ++k) {
    if (lower[k] > upper[k]) return false;
  }
  return true;
}

/// Widens the box by one, bumping every saturated entry.
inline SidedPartition lift_row(const SidedPartition& alpha) {
  const Sides s = alpha.sides();
  if (s.width == std::numeric_limits<std::uint32_t>::max()) {
    throw PartitionError("width overflow in lift_row");
  }
  std::vector<SidedPartition::Entry> out(alpha.entries().begin(),
                                         alpha.entries().end());
  for (auto& e : out) {
    if (e == s.width) ++e;
  }
  return SidedPartition({s.width + 1, s.length}, std::move(out));
}

/// Lengthens the box by one, repeating the last entry.
inline SidedPartition lift_col(const SidedPartition& alpha) {
  const Sides s = alpha.sides();
  if (s.length == 0) {
    throw PartitionError("lift_col needs at least one entry");
  }
  std::vector<SidedPartition::Entry> out(alpha.entries().begin(),
                                         alpha.entries().end());
  out.push_back(out.back());
  return SidedPartition({s.width, s.length + 1}, std::move(out));
}

/// Generates partitions below a cap in descending lexicographic order.
class PartitionBuilder {
 public:
  static std::vector<SidedPartition> below(std::uint64_t weight,
                                           const SidedPartition& cap) {
    std::vector<SidedPartition> out;
    if (weight > cap.weight()) return out;
    PartitionBuilder b(cap, out);
    b.fill(0, cap.sides().width, weight);
    return out;
  }

 private:
  PartitionBuilder(const SidedPartition& cap, std::vector<SidedPartition>& out)
      : cap_(cap), out_(out), current_(cap.length(), 0) {}

  // Largest total reachable from position `pos` when entry `pos` equals v.
  std::uint64_t reachable(std::size_t pos, std::uint32_t v) const {
    std::uint64_t sum = v;
    for (std::size_t m = pos + 1; m < cap_.length(); ++m) {
      sum += std::min(v, cap_[m]);
    }
    return sum;
  }

  void fill(std::size_t pos, std::uint32_t prev, std::uint64_t remaining) {
    if (pos == cap_.length()) {
      if (remaining == 0) out_.push_back(SidedPartition(cap_.sides(), current_));
      return;
    }
    std::uint64_t top = std::min<std::uint64_t>({prev, cap_[pos], remaining});
    for (std::uint64_t v = top + 1; v-- > 0;) {
      if (reachable(pos, static_cast<std::uint32_t>(v)) < remaining) break;
      current_[pos] = static_cast<std::uint32_t>(v);
      fill(pos + 1, static_cast<std::uint32_t>(v), remaining - v);
    }
    current_[pos] = 0;
  }

  const SidedPartition& cap_;
  std::vector<SidedPartition>& out_;
  std::vector<SidedPartition::Entry> current_;
};

/// Every partition of `weight` with the given sides, descending lex order.
inline std::vector<SidedPartition> enumerate_partitions(std::uint64_t weight,
                                                        Sides sides) {
  return PartitionBuilder::below(weight, SidedPartition::full(sides));
}

/// Every partition of `weight` lying below `cap`, descending lex order.
inline std::vector<SidedPartition> enumerate_bounded(std::uint64_t weight,
                                                     const SidedPartition& cap) {
  return PartitionBuilder::below(weight, cap);
}

/// Maximal elements of enumerate_bounded under leq. Partitions of equal
/// weight are only comparable when equal, so this keeps the whole list; the
/// filter is still run so the result never depends on that argument.
inline std::vector<SidedPartition> maximal_bounded(std::uint64_t weight,
                                                   const SidedPartition& cap) {
  auto all = enumerate_bounded(weight, cap);
  std::vector<SidedPartition> out;
  out.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool dominated = false;
    for (std::size_t m = 0; m < all.size() && !dominated; ++m) {
      dominated = m != k && leq(all[k], all[m]) && all[k] != all[m];
    }
    if (!dominated) out.push_back(all[k]);
  }
  return out;
}

/// Sizes of all partitions of `weight` with the given sides.
inline std::set<PartitionSize> enumerate_sizes(std::uint64_t weight, Sides sides) {
  std::set<PartitionSize> out;
  if (sides.length == 0) return out;
  for (const auto& alpha : enumerate_partitions(weight, sides)) {
    out.insert(alpha.size());
  }
  return out;
}

/// Maximal elements of enumerate_sizes under the componentwise order.
inline std::set<PartitionSize> maximal_sizes(std::uint64_t weight, Sides sides) {
  auto all = enumerate_sizes(weight, sides);
  std::set<PartitionSize> out;
  for (const auto& s : all) {
    bool dominated = std::any_of(all.begin(), all.end(), [&](const auto& t) {
      return t != s && leq(s, t);
    });
    if (!dominated) out.insert(s);
  }
  return out;
}

/// Text form `(3,3,1,1)@(3,4)`.
inline std::string to_string(const SidedPartition& alpha) {
  std::string out = "(";
  for (std::size_t k = 0; k < alpha.length(); ++k) {
    if (k) out += ',';
    out += std::to_string(alpha[k]);
  }
  out += ")@(" + std::to_string(alpha.sides().width) + "," +
         std::to_string(alpha.sides().length) + ")";
  return out;
}

inline std::string to_string(const PartitionSize& s) {
  return "(" + std::to_string(s.saturated) + "," + std::to_string(s.last) + ")";
}

namespace detail {

class TupleReader {
 public:
  explicit TupleReader(std::string_view text) : text_(text) {}

  std::vector<std::uint32_t> tuple() {
    std::vector<std::uint32_t> out;
    skip_ws();
    expect('(');
    skip_ws();
    if (peek() == ')') {
      ++pos_;
      return out;
    }
    while (true) {
      skip_ws();
      out.push_back(number());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return out;
    }
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", 1, pos_ + 1);
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

 private:
  std::uint32_t number() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError("number out of range", 1, start + 1);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", 1, start + 1);
    return static_cast<std::uint32_t>(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the `(p1,...,pt)@(width,length)` form.
inline SidedPartition parse_partition(std::string_view text) {
  detail::TupleReader r(text);
  auto entries = r.tuple();
  r.skip_ws();
  r.expect('@');
  auto sides = r.tuple();
  if (sides.size() != 2) throw ParseError("sides must be a pair", 1, 0);
  if (!r.done()) throw ParseError("trailing characters after partition", 1, 0);
  return SidedPartition::make({sides[0], sides[1]}, std::move(entries));
}

}  // namespace bihilbert
