// Command-line front end. Exit codes: 0 yes/pass, 1 no/fail, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "bihilbert/bihilbert.hpp"
#include "bihilbert/json.hpp"

namespace {

using namespace bihilbert;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;

struct InputError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HilbertTable load_table(const std::string& path) {
  try {
    return parse_table(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

MonomialBiIdeal load_ideal(const std::string& path) {
  try {
    return parse_ideal(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_witness(const FerrersWitness& w) {
  for (std::uint32_t i = 0; i <= w.bounds().x; ++i) {
    for (std::uint32_t j = 0; j <= w.bounds().y; ++j) {
      std::cout << "  " << to_string(w.at(i, j));
    }
    std::cout << '\n';
  }
}

void print_certificate(const FailureCertificate& f) {
  std::cout << "NO at " << to_string(f.cell) << ": " << f.reason << '\n';
  if (f.cap) std::cout << "cap " << to_string(*f.cap) << '\n';
  for (const auto& d : f.dead_ends) {
    std::cout << "  branch";
    if (d.above) std::cout << " above " << to_string(*d.above);
    if (d.left) std::cout << " left " << to_string(*d.left);
    std::cout << " cap " << to_string(d.cap) << " (weight " << d.cap.weight() << ")\n";
  }
}

int cmd_check(const std::string& path, bool as_json, const SearchOptions& options) {
  const auto h = load_table(path);
  json report;
  for (auto [name, result] : {std::pair{"quick_filters", quick_filters(h)},
                              std::pair{"growth_bound", growth_bound_ok(h)},
                              std::pair{"diagonal_osequence", diagonal_osequence_ok(h)}}) {
    report["filters"][name] = result ? to_json(*result) : json("pass");
    if (!as_json) std::cout << name << ": " << (result ? describe(*result) : "pass") << '\n';
  }
  const auto d = is_ferrers(h, options);
  if (as_json) {
    json out = d.yes() ? to_json(*d.witness) : to_json(*d.failure);
    out["filters"] = report["filters"];
    std::cout << out.dump(2) << '\n';
  } else if (d.yes()) {
    std::cout << "YES\n";
    print_witness(*d.witness);
  } else {
    print_certificate(*d.failure);
  }
  return d.yes() ? kYes : kNo;
}

/// Accepts a table file or the JSON witness written by `check --json`.
int cmd_realize(const std::string& path) {
  const auto text = slurp(path);
  const auto start = text.find_first_not_of(" \t\r\n");
  HilbertTable h;
  FerrersWitness w;
  if (start != std::string::npos && text[start] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    if (j.value("verdict", "yes") != "yes") {
      std::cout << "NO: the file holds a failure certificate\n";
      return kNo;
    }
    w = witness_from_json(j);
    h = weights(w);
  } else {
    h = load_table(path);
    auto d = is_ferrers(h);
    if (!d.yes()) {
      print_certificate(*d.failure);
      return kNo;
    }
    w = *d.witness;
  }
  if (auto defect = check_witness(h, w)) {
    std::cout << "invalid witness at " << to_string(defect->cell) << ": " << defect->reason << '\n';
    return kNo;
  }
  std::cout << "witness\n";
  print_witness(w);
  std::cout << "generators\n" << to_text(realize_ideal(h, w));
  return kYes;
}

int cmd_hilbert(const std::string& path, std::pair<std::uint32_t, std::uint32_t> bounds) {
  std::cout << to_text(hilbert_table(load_ideal(path), {bounds.first, bounds.second}));
  return kYes;
}

int cmd_alpha(const std::string& path, std::pair<std::uint32_t, std::uint32_t> at) {
  const auto ideal = load_ideal(path);
  try {
    std::cout << to_string(alpha_from_ideal(ideal, {at.first, at.second})) << '\n';
  } catch (const NotBilexError& e) {
    std::cout << e.what() << '\n';
    return kNo;
  }
  return kYes;
}

int cmd_admissible(const std::string& path, bool require_tail) {
  const auto h = load_table(path);
  if (auto v = is_admissible(h, {.require_tail = require_tail})) {
    std::cout << "not admissible: " << describe(*v) << '\n';
    return kNo;
  }
  std::cout << "admissible\n";
  print_witness(admissible_to_witness(h));
  return kYes;
}

int cmd_partitions(std::uint64_t h, std::pair<std::uint32_t, std::uint32_t> sides, bool sizes,
                   bool maximal) {
  const Sides s{sides.first, sides.second};
  if (sizes) {
    auto all = maximal ? maximal_sizes(h, s) : enumerate_sizes(h, s);
    for (const auto& z : all) std::cout << to_string(z) << '\n';
    return all.empty() ? kNo : kYes;
  }
  auto parts = enumerate_partitions(h, s);
  if (maximal) parts = maximal_bounded(h, SidedPartition::full(s));
  for (const auto& p : parts) std::cout << to_string(p) << '\n';
  return parts.empty() ? kNo : kYes;
}

SliceFamily family_of(const std::string& name) {
  if (name == "bilex") return SliceFamily::bilex;
  if (name == "any") return SliceFamily::any;
  throw InputError("unknown slice family '" + name + "'");
}

int cmd_census(std::pair<std::uint32_t, std::uint32_t> bounds, const std::string& family,
               bool list) {
  const auto tables = enumerate_realizable_tables({bounds.first, bounds.second}, family_of(family),
                                                  {.max_cells = 25, .max_bound = 4});
  if (list) {
    for (const auto& t : tables) std::cout << to_text(t) << '\n';
  }
  std::cout << "realizable tables: " << tables.size() << '\n';
  return kYes;
}

int cmd_oracle_check(const std::string& path, const std::string& family) {
  const auto h = load_table(path);
  const bool oracle = brute_force_realizable(h, family_of(family), {.max_cells = 25, .max_bound = 4});
  const bool engine = is_ferrers(h).yes();
  std::cout << "oracle: " << (oracle ? "YES" : "NO") << "\nsearch: " << (engine ? "YES" : "NO")
            << '\n';
  if (oracle != engine) {
    std::cout << "DISAGREE\n";
    return kNo;
  }
  return oracle ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded Hilbert functions of Ferrers type"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false, all_candidates = false, no_memo = false, no_prefilter = false;
  auto* check = app.add_subcommand("check", "decide whether a table is a Ferrers function");
  check->add_option("table", file, "table file")->required();
  check->add_flag("--json", as_json, "print the witness or certificate as JSON");
  check->add_flag("--all-candidates", all_candidates, "branch on every partition, not only maximal ones");
  check->add_flag("--no-memo", no_memo, "disable the failure memo");
  check->add_flag("--no-prefilter", no_prefilter, "skip the necessary-condition filters");

  auto* realize = app.add_subcommand("realize", "witness and minimal generators of a realizing ideal");
  realize->add_option("input", file, "table file or JSON witness")->required();

  std::pair<std::uint32_t, std::uint32_t> bounds{0, 0}, at{0, 0}, sides{0, 0};
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert table of a monomial ideal");
  hilbert->add_option("ideal", file, "ideal file")->required();
  hilbert->add_option("--bounds", bounds, "A B")->required();

  auto* alpha = app.add_subcommand("alpha", "partition of a bilex slice");
  alpha->add_option("ideal", file, "ideal file")->required();
  alpha->add_option("--at", at, "a b")->required();

  bool no_tail = false;
  auto* admissible = app.add_subcommand("admissible", "admissibility verdict and witness");
  admissible->add_option("table", file, "table file")->required();
  admissible->add_flag("--no-tail", no_tail, "skip the last-row/last-column condition");

  std::uint64_t weight = 0;
  bool sizes = false, maximal = false;
  auto* partitions = app.add_subcommand("partitions", "partitions of h with given sides");
  partitions->add_option("weight", weight, "weight h")->required();
  partitions->add_option("--sides", sides, "l1 l2")->required();
  partitions->add_flag("--sizes", sizes, "print sizes instead of partitions");
  partitions->add_flag("--maximal", maximal, "only maximal elements");

  std::string family = "bilex";
  bool list = false;
  auto* census = app.add_subcommand("census", "all realizable tables on a rectangle");
  census->add_option("--bounds", bounds, "A B")->required();
  census->add_option("--family", family, "bilex or any");
  census->add_flag("--list", list, "print every table");

  auto* oracle = app.add_subcommand("oracle-check", "compare the search with exhaustive realization");
  oracle->add_option("table", file, "table file")->required();
  oracle->add_option("--family", family, "bilex or any");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kInputError;
  }

  try {
    if (*check) {
      SearchOptions options;
      options.candidates = all_candidates ? CandidatePolicy::all : CandidatePolicy::maximal;
      options.memoize = !no_memo;
      options.prefilter = !no_prefilter;
      return cmd_check(file, as_json, options);
    }
    if (*realize) return cmd_realize(file);
    if (*hilbert) return cmd_hilbert(file, bounds);
    if (*alpha) return cmd_alpha(file, at);
    if (*admissible) return cmd_admissible(file, !no_tail);
    if (*partitions) return cmd_partitions(weight, sides, sizes, maximal);
    if (*census) return cmd_census(bounds, family, list);
    if (*oracle) return cmd_oracle_check(file, family);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
