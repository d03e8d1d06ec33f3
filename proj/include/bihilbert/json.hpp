#pragma once

// JSON forms of witnesses and failure certificates.
//
//   {"verdict": "yes", "bounds": [A, B], "alpha": [[[1], [1, 1]], ...]}
//   {"verdict": "no", "cell": [i, j], "reason": "...", "cap": [4, 2, 1, 1]}
//
// alpha[i][j] holds the entries of the partition at (i,j); its sides are
// implied by the cell.

#include <nlohmann/json.hpp>

#include "bihilbert/error.hpp"
#include "bihilbert/ferrers.hpp"
#include "bihilbert/filters.hpp"
#include "bihilbert/witness.hpp"

namespace bihilbert {

inline nlohmann::json entries_json(const SidedPartition& alpha) {
  return nlohmann::json(std::vector<std::uint32_t>(alpha.entries().begin(), alpha.entries().end()));
}

inline nlohmann::json to_json(const FerrersWitness& w) {
  nlohmann::json alpha = nlohmann::json::array();
  for (std::uint32_t i = 0; i <= w.bounds().x; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t j = 0; j <= w.bounds().y; ++j) row.push_back(entries_json(w.at(i, j)));
    alpha.push_back(std::move(row));
  }
  return {{"verdict", "yes"}, {"bounds", {w.bounds().x, w.bounds().y}}, {"alpha", std::move(alpha)}};
}

inline nlohmann::json to_json(const FailureCertificate& f) {
  nlohmann::json out{{"verdict", "no"}, {"cell", {f.cell.x, f.cell.y}}, {"reason", f.reason}};
  if (f.cap) out["cap"] = entries_json(*f.cap);
  if (!f.dead_ends.empty()) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto& d : f.dead_ends) {
      nlohmann::json b{{"cap", entries_json(d.cap)}};
      if (d.above) b["above"] = entries_json(*d.above);
      if (d.left) b["left"] = entries_json(*d.left);
      branches.push_back(std::move(b));
    }
    out["branches"] = std::move(branches);
  }
  return out;
}

inline nlohmann::json to_json(const Violation& v) {
  nlohmann::json out{{"verdict", "no"}, {"reason", v.reason}};
  if (v.cell) out["cell"] = {v.cell->x, v.cell->y};
  if (v.degree) out["degree"] = *v.degree;
  return out;
}

/// Throws ParseError on schema violations and PartitionError/InvalidWitness
/// on invalid partitions.
inline FerrersWitness witness_from_json(const nlohmann::json& j) {
  try {
    const auto& bounds = j.at("bounds");
    if (!bounds.is_array() || bounds.size() != 2) throw ParseError("bounds must be [A, B]", 0, 0);
    const BiDegree b{bounds[0].get<std::uint32_t>(), bounds[1].get<std::uint32_t>()};
    const auto& alpha = j.at("alpha");
    if (!alpha.is_array() || alpha.size() != b.x + 1) {
      throw ParseError("alpha must have " + std::to_string(b.x + 1) + " rows", 0, 0);
    }
    FerrersWitness w(b);
    for (std::uint32_t i = 0; i <= b.x; ++i) {
      if (!alpha[i].is_array() || alpha[i].size() != b.y + 1) {
        throw ParseError("alpha row " + std::to_string(i) + " must have " +
                             std::to_string(b.y + 1) + " cells",
                         0, 0);
      }
      for (std::uint32_t jj = 0; jj <= b.y; ++jj) {
        auto entries = alpha[i][jj].get<std::vector<std::uint32_t>>();
        w.set(i, jj, SidedPartition::make(sides_of({i, jj}), std::move(entries)));
      }
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed witness JSON: ") + e.what(), 0, 0);
  }
}

}  // namespace bihilbert
