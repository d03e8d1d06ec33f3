#pragma once

// Bigraded monomials of k[x1,x2,y1,y2] with deg x_i = (1,0), deg y_j = (0,1),
// and the dictionary between sided partitions and sets of monomials.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bihilbert/error.hpp"
#include "bihilbert/partition.hpp"

namespace bihilbert {

struct BiDegree {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

/// Componentwise partial order on bidegrees.
inline bool leq(const BiDegree& lhs, const BiDegree& rhs) {
  return lhs.x <= rhs.x && lhs.y <= rhs.y;
}

inline std::string to_string(const BiDegree& d) {
  return "(" + std::to_string(d.x) + "," + std::to_string(d.y) + ")";
}

/// Sides of the partitions that describe monomial sets of bidegree `d`.
inline Sides sides_of(BiDegree d) { return {d.x + 1, d.y + 1}; }

enum class Var { x1, x2, y1, y2 };

inline constexpr std::array<Var, 4> kVariables{Var::x1, Var::x2, Var::y1, Var::y2};

inline const char* name(Var v) {
  switch (v) {
    case Var::x1: return "x1";
    case Var::x2: return "x2";
    case Var::y1: return "y1";
    case Var::y2: return "y2";
  }
  return "?";
}

/// x1^x1 x2^x2 y1^y1 y2^y2. Ordering of the struct (<=>) is only used for
/// containers; monomial comparison in the ring order goes through VarOrder.
struct BiMonomial {
  std::uint32_t x1 = 0;
  std::uint32_t x2 = 0;
  std::uint32_t y1 = 0;
  std::uint32_t y2 = 0;

  friend auto operator<=>(const BiMonomial&, const BiMonomial&) = default;

  BiDegree degree() const { return {x1 + x2, y1 + y2}; }

  bool divides(const BiMonomial& m) const {
    return x1 <= m.x1 && x2 <= m.x2 && y1 <= m.y1 && y2 <= m.y2;
  }

  BiMonomial times(Var v) const {
    BiMonomial out = *this;
    switch (v) {
      case Var::x1: ++out.x1; break;
      case Var::x2: ++out.x2; break;
      case Var::y1: ++out.y1; break;
      case Var::y2: ++out.y2; break;
    }
    return out;
  }

  std::uint32_t exponent(Var v) const {
    switch (v) {
      case Var::x1: return x1;
      case Var::x2: return x2;
      case Var::y1: return y1;
      case Var::y2: return y2;
    }
    return 0;
  }
};

/// Which variable leads in each lex comparison. The default is x1 > x2 and
/// y1 > y2.
struct VarOrder {
  bool x1_leads = true;
  bool y1_leads = true;

  static constexpr VarOrder standard() { return {true, true}; }
  static constexpr VarOrder reversed() { return {false, false}; }

  /// Compares the x-parts of two monomials of the same x-degree.
  bool x_greater(const BiMonomial& a, const BiMonomial& b) const {
    return x1_leads ? a.x1 > b.x1 : a.x2 > b.x2;
  }
  bool y_greater(const BiMonomial& a, const BiMonomial& b) const {
    return y1_leads ? a.y1 > b.y1 : a.y2 > b.y2;
  }
};

/// All monomials of bidegree d, sorted by the container order.
inline std::vector<BiMonomial> monomials_of_degree(BiDegree d) {
  std::vector<BiMonomial> out;
  out.reserve(static_cast<std::size_t>(d.x + 1) * (d.y + 1));
  for (std::uint32_t i = 0; i <= d.x; ++i) {
    for (std::uint32_t j = 0; j <= d.y; ++j) {
      out.push_back({i, d.x - i, j, d.y - j});
    }
  }
  return out;
}

/// The dictionary monomial x1^(p-1) x2^(a-p+1) y1^(q-1) y2^(b-q+1) of
/// bidegree (a,b). Returns nullopt when p or q is zero.
inline std::optional<BiMonomial> t_monomial(std::uint32_t p, std::uint32_t q,
                                            BiDegree at) {
  if (p > at.x + 1 || q > at.y + 1) {
    throw Error("t_monomial(" + std::to_string(p) + "," + std::to_string(q) +
                ") is out of range for bidegree " + to_string(at));
  }
  if (p == 0 || q == 0) return std::nullopt;
  return BiMonomial{p - 1, at.x - p + 1, q - 1, at.y - q + 1};
}

/// The monomials of bidegree (width-1, length-1) lying under the Ferrers
/// diagram of alpha.
inline std::set<BiMonomial> monomial_set_of(const SidedPartition& alpha) {
  const Sides s = alpha.sides();
  if (s.width == 0 || s.length == 0) {
    throw PartitionError("partition sides do not correspond to a bidegree");
  }
  const BiDegree at{s.width - 1, s.length - 1};
  std::set<BiMonomial> out;
  for (std::uint32_t q = 1; q <= s.length; ++q) {
    for (std::uint32_t p = 1; p <= alpha[q - 1]; ++p) out.insert(*t_monomial(p, q, at));
  }
  return out;
}

/// Bilex test: raising the x-part or the y-part of a member in the given
/// lex order must stay inside the set.
inline bool is_bilex(const std::set<BiMonomial>& monomials, BiDegree at,
                     VarOrder order = VarOrder::standard()) {
  for (const auto& m : monomials) {
    if (m.degree() != at) {
      throw Error("monomial of bidegree " + to_string(m.degree()) +
                  " in a set declared at " + to_string(at));
    }
  }
  const auto all = monomials_of_degree(at);
  for (const auto& m : monomials) {
    for (const auto& other : all) {
      bool same_y = other.y1 == m.y1;
      bool same_x = other.x1 == m.x1;
      if (same_y && order.x_greater(other, m) && !monomials.contains(other)) return false;
      if (same_x && order.y_greater(other, m) && !monomials.contains(other)) return false;
    }
  }
  return true;
}

/// Human form: `x1^2 y1 y2^3`, `1` for the constant.
inline std::string to_string(const BiMonomial& m) {
  std::string out;
  for (Var v : kVariables) {
    auto e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

/// Machine form: the exponent quadruple `a b c d`.
inline std::string to_exponent_string(const BiMonomial& m) {
  return std::to_string(m.x1) + " " + std::to_string(m.x2) + " " +
         std::to_string(m.y1) + " " + std::to_string(m.y2);
}

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::uint32_t read_number(std::string_view text, std::size_t& pos,
                                 std::size_t line) {
  std::size_t start = pos;
  std::uint64_t v = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (v > 0xffffffffULL) throw ParseError("exponent out of range", line, start + 1);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number", line, start + 1);
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Parses either form. Repeated variables multiply (`x1 x1` = `x1^2`).
/// `line` is only used for diagnostics.
inline BiMonomial parse_monomial(std::string_view text, std::size_t line = 1) {
  using detail::is_digit;
  using detail::is_space;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty monomial", line, 1);

  if (is_digit(text[pos])) {
    std::vector<std::uint32_t> nums;
    std::vector<std::size_t> cols;
    while (true) {
      skip();
      if (pos == text.size()) break;
      cols.push_back(pos + 1);
      if (!is_digit(text[pos])) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'",
                         line, pos + 1);
      }
      nums.push_back(detail::read_number(text, pos, line));
    }
    if (nums.size() == 1 && nums[0] == 1) return {};
    if (nums.size() != 4) {
      throw ParseError("expected four exponents or the constant 1", line,
                       cols.empty() ? 1 : cols.back());
    }
    return {nums[0], nums[1], nums[2], nums[3]};
  }

  BiMonomial m;
  while (true) {
    skip();
    if (pos == text.size()) break;
    std::size_t col = pos + 1;
    if (pos + 1 >= text.size()) throw ParseError("truncated variable", line, col);
    char letter = text[pos];
    char index = text[pos + 1];
    std::uint32_t* slot = nullptr;
    if (letter == 'x' && index == '1') slot = &m.x1;
    if (letter == 'x' && index == '2') slot = &m.x2;
    if (letter == 'y' && index == '1') slot = &m.y1;
    if (letter == 'y' && index == '2') slot = &m.y2;
    if (slot == nullptr) {
      throw ParseError("unknown variable '" + std::string(text.substr(pos, 2)) + "'",
                       line, col);
    }
    pos += 2;
    std::uint32_t e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = detail::read_number(text, pos, line);
    }
    if (pos < text.size() && !is_space(text[pos]) && text[pos] != '*') {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'",
                       line, pos + 1);
    }
    if (pos < text.size() && text[pos] == '*') ++pos;
    *slot += e;
  }
  return m;
}

}  // namespace bihilbert
