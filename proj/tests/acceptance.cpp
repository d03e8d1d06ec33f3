// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N] [--seed S]
//
// Without --criterion every criterion runs. Exit status is 0 iff all run
// criteria pass.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bihilbert/bihilbert.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

namespace {

using namespace bihilbert;
using testing::part;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
  }
  void info(const std::string& what) { notes.push_back("info: " + what); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&, std::uint32_t seed)> body;
};

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(BIHILBERT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (!pipe) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf;
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string data(const std::string& name) { return testing::data_path(name); }

std::string set_text(const std::set<BiMonomial>& s) {
  std::string out = "{";
  for (const auto& m : s) out += (out.size() > 1 ? ", " : "") + to_string(m);
  return out + "}";
}

void truncated_tables(Outcome& o, std::uint32_t) {
  for (auto [file, expected] : {std::pair{"truncated_x1.txt", testing::table_i_prime()},
                                std::pair{"truncated_y1.txt", testing::table_i_double_prime()}}) {
    int code = 0;
    auto out = run_cli("hilbert " + data(file) + " --bounds 4 4", code);
    o.require(code == 0, std::string("hilbert ") + file + " exits 0");
    o.require(out == to_text(expected), std::string("hilbert ") + file + " prints the table");
    auto ideal = parse_ideal(testing::read_file(data(file)));
    o.require(hilbert_table(ideal, {4, 4}) == expected, std::string("library table for ") + file);
  }
}

void merged_table(Outcome& o, std::uint32_t) {
  const auto h = testing::merged_table();
  const auto d = is_ferrers(h);
  o.require(!d.yes(), "is_ferrers rejects the merged table");
  if (!d.yes()) o.info("certificate: " + d.failure->reason);
  o.require(diagonal_sums(h) == std::vector<std::uint64_t>{1, 4, 8, 14, 0},
            "anti-diagonal sums start 1, 4, 8, 14");
  auto t = first_osequence_failure({1, 4, 8, 14});
  o.require(t && *t == 3, "O-sequence check fails at t = 3 on (1,4,8,14)");
  auto v = diagonal_osequence_ok(h);
  o.require(v && v->degree == 3u, "diagonal_osequence_ok fails at t = 3 on the table");
  o.info("8^<2> = " + std::to_string(macaulay_bound(8, 2)));
}

void small_enumerations(Outcome& o, std::uint32_t) {
  auto as_set = [](const std::vector<SidedPartition>& v) {
    return std::set<SidedPartition>(v.begin(), v.end());
  };
  o.require(as_set(enumerate_partitions(4, {3, 3})) ==
                std::set<SidedPartition>{part(3, {3, 1, 0}), part(3, {2, 2, 0}), part(3, {2, 1, 1})},
            "partitions of 4 with sides (3,3)");
  o.require(enumerate_sizes(4, {3, 3}) == std::set<PartitionSize>{{1, 0}, {0, 0}, {0, 1}},
            "sizes of 4 with sides (3,3)");
  o.require(as_set(enumerate_partitions(2, {2, 2})) ==
                std::set<SidedPartition>{part(2, {2, 0}), part(2, {1, 1})},
            "partitions of 2 with sides (2,2)");
  o.require(enumerate_sizes(2, {2, 2}) == std::set<PartitionSize>{{1, 0}, {0, 1}},
            "sizes of 2 with sides (2,2)");
}

void trap_certificate(Outcome& o, std::uint32_t) {
  const auto d = is_ferrers(testing::table_maximal_growth_trap());
  o.require(!d.yes(), "the 6x6 table with H(3,3) = 10 is rejected");
  if (d.yes()) return;
  const auto& f = *d.failure;
  o.require(!f.from_filters, "rejection comes from the search, not the filters");
  o.require(f.cell == BiDegree{3, 3}, "certificate cell is (3,3), got " + to_string(f.cell));
  const auto above = part(3, {3, 3, 1, 1}), left = part(4, {4, 2, 2});
  const DeadEnd* branch = nullptr;
  for (const auto& e : f.dead_ends) {
    if (e.above == above && e.left == left) branch = &e;
  }
  o.require(branch != nullptr, "a dead end at (3,3) has alpha(3,2) = (4,2,2), alpha(2,3) = (3,3,1,1)");
  if (branch) {
    o.require(branch->cap == part(4, {4, 2, 1, 1}), "its cap is " + to_string(branch->cap));
    o.require(branch->cap.weight() == 8, "cap weight " + std::to_string(branch->cap.weight()));
  }
}

void admissible_end_to_end(Outcome& o, std::uint32_t) {
  const auto h = parse_table(testing::read_file(data("admissible.txt")));
  o.require(h == testing::table_admissible(), "table file matches the reference table");
  auto v = is_admissible(h);
  o.require(!v, "is_admissible passes" + (v ? ": " + describe(*v) : std::string()));
  if (v) return;

  const auto w = admissible_to_witness(h);
  const auto reference = testing::reference_admissible_witness();
  bool grid = true;
  for (std::uint32_t i = 0; i < reference.size(); ++i) {
    for (std::uint32_t j = 0; j < reference[i].size(); ++j) {
      auto e = w.at(i, j).entries();
      grid = grid && std::vector<std::uint32_t>(e.begin(), e.end()) == reference[i][j];
    }
  }
  o.require(grid, "admissible_to_witness reproduces the reference grid cell for cell");

  const auto gens = testing::reference_admissible_ideal();
  const std::set<BiMonomial> expected(gens.begin(), gens.end());
  const auto ideal = realize_ideal(h, w);
  const std::set<BiMonomial> got(ideal.generators().begin(), ideal.generators().end());
  o.require(got == expected, "realize_ideal yields exactly " + set_text(expected));
  if (got != expected) {
    o.info("realize_ideal gave " + set_text(got));
    o.info("its Hilbert table equals the input: " +
           std::string(hilbert_table(ideal, h.bounds()) == h ? "yes" : "no"));
    MonomialBiIdeal reference_ideal(gens);
    FerrersWitness own(h.bounds());
    for (std::uint32_t i = 0; i <= h.bounds().x; ++i) {
      for (std::uint32_t j = 0; j <= h.bounds().y; ++j) own.set(i, j, alpha_from_ideal(reference_ideal, {i, j}));
    }
    o.info("the reference ideal has alpha(4,2) = " + to_string(own.at(4, 2)) +
           ", the reference grid has " + to_string(w.at(4, 2)));
    const auto again = realize_ideal(h, own);
    const std::set<BiMonomial> back(again.generators().begin(), again.generators().end());
    o.info("realizing from the reference ideal's own grid gives the reference generators: " +
           std::string(back == expected ? "yes" : "no"));
  }

  int code = 0;
  auto out = run_cli("hilbert " + data("admissible_ideal.txt") + " --bounds 5 5", code);
  o.require(code == 0 && out == to_text(h), "hilbert on the reference ideal over (5,5) returns the table");
}

void oracle_equivalence(Outcome& o, std::uint32_t) {
  RealizabilityOracle oracle({2, 2});
  std::uint64_t tables = 0, yes = 0, disagreements = 0;
  testing::for_each_boxed_table({2, 2}, [&](const HilbertTable& h) {
    ++tables;
    const bool engine = is_ferrers(h).yes();
    const bool brute = oracle(h);
    yes += engine;
    if (engine != brute && disagreements++ < 3) o.info("disagreement on\n" + to_text(h));
  });
  o.require(tables == 352800, "tables visited: " + std::to_string(tables));
  o.require(disagreements == 0, "disagreements: " + std::to_string(disagreements));
  o.info("census: " + std::to_string(yes) + " realizable tables with H(0,0) = 1");
}

void round_trip(Outcome& o, std::uint32_t seed) {
  std::mt19937 rng(seed);
  int failures = 0, unit = 0;
  for (int n = 0; n < 1000; ++n) {
    auto ideal = testing::random_bilex_ideal(rng, {3, 3});
    while (membership(ideal, BiMonomial{})) {
      ++unit;
      ideal = testing::random_bilex_ideal(rng, {3, 3});
    }
    const auto h = hilbert_table(ideal, {3, 3});
    const auto d = is_ferrers(h);
    if (!d.yes() || hilbert_table(realize_ideal(h, *d.witness), {3, 3}) != h) {
      if (failures++ < 3) o.info("round trip failed on\n" + to_text(h));
    }
  }
  o.require(failures == 0, "1000 constructions, failures: " + std::to_string(failures));
  o.info("unit ideals redrawn: " + std::to_string(unit));
}

void pruning_soundness(Outcome& o, std::uint32_t) {
  std::uint64_t tables = 0, yes = 0, verdicts = 0, witnesses = 0;
  const SearchOptions maximal{.candidates = CandidatePolicy::maximal, .prefilter = false};
  const SearchOptions all{.candidates = CandidatePolicy::all, .prefilter = false};
  testing::for_each_boxed_table({2, 2}, [&](const HilbertTable& h) {
    ++tables;
    const auto a = is_ferrers(h, maximal);
    const auto b = is_ferrers(h, all);
    yes += a.yes();
    if (a.yes() != b.yes()) ++verdicts;
    else if (a.yes() && *a.witness != *b.witness) ++witnesses;
  });
  o.require(verdicts == 0, std::to_string(tables) + " tables, verdict mismatches: " +
                               std::to_string(verdicts));
  o.info("witness mismatches: " + std::to_string(witnesses) + ", YES verdicts: " + std::to_string(yes));
}

void lift_property(Outcome& o, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> d(0, 4);
  int rows = 0, cols = 0;
  for (int n = 0; n < 500; ++n) {
    const BiDegree at{d(rng), d(rng)};
    auto set = testing::random_bilex_set(rng, at);
    MonomialBiIdeal ideal(std::vector<BiMonomial>(set.begin(), set.end()));
    const auto alpha = alpha_from_ideal(ideal, at);
    rows += alpha_from_ideal(ideal, {at.x + 1, at.y}) != lift_row(alpha);
    cols += alpha_from_ideal(ideal, {at.x, at.y + 1}) != lift_col(alpha);
  }
  o.require(rows == 0, "row lifts, mismatches: " + std::to_string(rows));
  o.require(cols == 0, "column lifts, mismatches: " + std::to_string(cols));
}

void partition_counts(Outcome& o, std::uint32_t) {
  int bad = 0;
  for (std::uint32_t w = 0; w <= 6; ++w) {
    for (std::uint32_t l = 0; l <= 6; ++l) {
      std::uint64_t total = 0;
      for (std::uint64_t h = 0; h <= static_cast<std::uint64_t>(w) * l; ++h) {
        total += enumerate_partitions(h, {w, l}).size();
      }
      if (total != testing::choose(w + l, w)) {
        ++bad;
        o.info("sides (" + std::to_string(w) + "," + std::to_string(l) + "): " + std::to_string(total));
      }
    }
  }
  o.require(bad == 0, "all sides up to (6,6), mismatches: " + std::to_string(bad));
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::uint32_t seed = testing::kDefaultSeed;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--criterion" && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else if (arg == "--seed" && k + 1 < argc) {
      seed = static_cast<std::uint32_t>(std::strtoul(argv[++k], nullptr, 10));
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--seed S]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "reference tables of the two truncated ideals", 1, truncated_tables},
      {2, "merged table rejected, O-sequence fails at t = 3", 1, merged_table},
      {3, "partitions and sizes of 4 in (3,3) and 2 in (2,2)", 1, small_enumerations},
      {4, "cap of weight 8 at (3,3) on the 6x6 trap table", 1, trap_certificate},
      {5, "admissible table: witness, generators, Hilbert table", 1, admissible_end_to_end},
      {6, "search agrees with brute force on every (2,2) table", 600, oracle_equivalence},
      {7, "1000 random bilex ideals round trip on (3,3)", 60, round_trip},
      {8, "maximal and full candidate sets agree on every (2,2) table", 1800, pruning_soundness},
      {9, "500 random bilex sets follow the lifts", 10, lift_property},
      {10, "partition counts sum to binomial coefficients", 1, partition_counts},
  };

  bool all_pass = true, ran = false;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ran = true;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o, seed);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.require(false, "time " + std::to_string(secs) + " s exceeds " + std::to_string(c.budget_seconds) + " s");
    }
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title
         << "  (" << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& n : o.notes) {
      std::istringstream lines(n);
      std::string l;
      while (std::getline(lines, l)) std::cout << "    " << l << '\n';
    }
    all_pass = all_pass && o.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}
