// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pressing/cholesky.hpp"
#include "pressing/genesis.hpp"
#include "pressing/recognition.hpp"

using namespace pressing;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double root_time_limit_ms = 1.0;
constexpr std::size_t random_sample_size = 10000;
constexpr double scaling_low = 4.0;
constexpr double scaling_high = 16.0;
constexpr int timing_graphs = 4;
constexpr int timing_reps = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

template <typename F>
double best_time_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, millis(Clock::now() - t0));
  }
  return best;
}

std::uint64_t ipow3(std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Printed closed forms, evaluated independently of the library.
std::uint64_t printed_cup(std::size_t n) { return n % 2 == 0 ? ipow3((n - 2) / 2) : 2 * ipow3((n - 3) / 2); }
std::uint64_t printed_total(std::size_t n) {
  return n % 2 == 0 ? (5 * ipow3((n - 2) / 2) + 1) / 2 : (ipow3((n + 1) / 2) + 1) / 2;
}

Outcome golden_example() {
  Outcome o;
  const BitMatrix m = fixtures::example_m();
  const std::string printed_u = "5\n10001\n01010\n00000\n00000\n00000\n";
  const CholeskyRoot r = instructional_root(m);
  if (to_string(r.u) != printed_u) o = {false, "root differs from the printed U"};
  if (transpose_mul(r.u) != m) o = {false, "U^T U != M"};
  std::vector<double> times;
  for (int k = 0; k < 101; ++k) {
    const auto t0 = Clock::now();
    const CholeskyRoot again = instructional_root(m);
    times.push_back(millis(Clock::now() - t0));
    if (again.u != r.u) o = {false, "root not deterministic"};
  }
  std::nth_element(times.begin(), times.begin() + 50, times.end());
  const double median = times[50];
  if (median >= root_time_limit_ms) o.pass = false;
  std::ostringstream d;
  d << "median " << median << " ms over 101 runs, limit " << root_time_limit_ms << " ms";
  if (!o.detail.empty()) d << "; " << o.detail;
  o.detail = d.str();
  return o;
}

Outcome four_vertex_weights() {
  // Edges are the pairs with dot product 1; loops on odd-weight vertices.
  const PseudoGraph g({1, 2, 3, 4}, {{1, 1}, {1, 2}, {1, 4}, {2, 3}});
  const CholeskyRoot r = instructional_root(g);
  const std::array<std::size_t, 4> weights{1, 2, 2, 4};
  struct Dot {
    std::size_t i, j;
    bool value;
  };
  const std::array<Dot, 6> dots{{{1, 2, true}, {1, 3, false}, {1, 4, true}, {2, 3, true}, {2, 4, false}, {3, 4, false}}};
  Outcome o{true, "weights 1 2 2 4 and six dot products"};
  for (std::size_t j = 1; j <= 4; ++j) {
    if (vertex_weight(r, j) != weights[j - 1]) o = {false, "weight of vertex " + std::to_string(j)};
  }
  for (const Dot& d : dots) {
    if (vertex_dot(r, d.i, d.j) != d.value) {
      o = {false, "dot <" + std::to_string(d.i) + "," + std::to_string(d.j) + ">"};
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  std::size_t checked = 0;
  std::size_t accepted = 0;
  std::size_t mismatches = 0;
  auto check = [&](const PseudoGraph& g) {
    const bool yes = recognize(g).accepted();
    const bool unique = count_sequences_bruteforce(g) == 1;
    ++checked;
    if (yes) ++accepted;
    if (yes != unique) ++mismatches;
  };
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::slot_count(n)); ++mask) {
      check(oracle::graph_from_mask(n, mask));
    }
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> order(5, 7);
  for (std::size_t k = 0; k < random_sample_size; ++k) check(oracle::random_graph(order(rng), rng));
  return {mismatches == 0, std::to_string(checked) + " graphs (" + std::to_string(accepted) + " accepted), " +
                               std::to_string(mismatches) + " disagreements"};
}

Outcome counting() {
  Outcome o{true, ""};
  std::ostringstream d;
  // The closed forms start at n = 2; one vertex has one CUP graph (the loop).
  auto expected_cup = [](std::size_t n) { return n == 1 ? std::uint64_t{1} : printed_cup(n); };
  for (std::size_t n = 2; n <= 12; ++n) {
    const std::size_t got = generate_cup(n).size();
    if (got != printed_cup(n)) {
      o.pass = false;
      d << "generate_cup(" << n << ")=" << got << " want " << printed_cup(n) << "; ";
    }
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const CensusResult r = census(n, {5, 4});
    if (r.up_iso_classes != printed_total(n) || r.cup_iso_classes != expected_cup(n)) {
      o.pass = false;
      d << "census(" << n << ")=" << r.up_iso_classes << "/" << r.cup_iso_classes << "; ";
    }
  }
  d << "generate_cup 2..12 and census 1..5 (T_2=" << census(2).up_iso_classes << ", T_5=" << census(5).up_iso_classes
    << ")";
  o.detail = d.str();
  return o;
}

Outcome uniqueness() {
  std::size_t graphs = 0;
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const PseudoGraph& g : generate_cup(n)) {
      ++graphs;
      const auto seqs = successful_sequences_bruteforce(g, 2);
      if (seqs.size() != 1 || seqs[0].vertices() != g.labels() || seqs[0].size() != n) ++bad;
    }
  }
  return {bad == 0, std::to_string(graphs) + " generated graphs, " + std::to_string(bad) + " without the unique sequence 1..n"};
}

Outcome counterexamples() {
  const PseudoGraph g2 = from_adjacency(transpose_mul(fixtures::v2()));
  const PseudoGraph g1 = from_adjacency(transpose_mul(fixtures::v1()));
  const RecognitionReport r2 = recognize(g2);
  const bool second = is_successful(g2, {3, 4, 1, 2});
  const bool first = is_successful(g2, {1, 2, 3, 4});
  const bool v1_yes = recognize(g1).accepted();
  const bool pass = !r2.accepted() && second && first && v1_yes;
  std::string reason = reason_code(r2.reason);
  if (r2.column != 0) reason += " col " + std::to_string(r2.column);
  return {pass, "V2 graph rejected (" + reason + "), (3,4,1,2) successful=" + (second ? "yes" : "no") +
                    ", V1 graph accepted=" + (v1_yes ? "yes" : "no")};
}

Outcome hereditary() {
  std::size_t graphs = 0;
  std::size_t bad = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const PseudoGraph& g : generate_cup(n)) {
      ++graphs;
      const BitMatrix u = instructional_root(g).u;
      const PseudoGraph first = delete_vertex(press(g, 1), 1);
      const PseudoGraph last = delete_vertex(g, static_cast<Label>(n));
      if (instructional_root(first).u != principal_submatrix(u, 2, n)) ++bad;
      if (instructional_root(last).u != principal_submatrix(u, 1, n - 1)) ++bad;
    }
  }
  return {bad == 0, std::to_string(graphs) + " CUP graphs, " + std::to_string(bad) + " mismatches"};
}

Outcome scaling() {
  std::mt19937_64 rng(7);
  std::vector<PseudoGraph> small_graphs;
  std::vector<PseudoGraph> large_graphs;
  for (int k = 0; k < timing_graphs; ++k) {
    small_graphs.push_back(random_cup(512, rng));
    large_graphs.push_back(random_cup(1024, rng));
  }
  // Per graph, the best of several interleaved repetitions; totals are summed.
  std::vector<double> small_best(timing_graphs, 1e300);
  std::vector<double> large_best(timing_graphs, 1e300);
  bool ok = true;
  for (int rep = 0; rep < timing_reps; ++rep) {
    for (int k = 0; k < timing_graphs; ++k) {
      small_best[k] = std::min(small_best[k], best_time_ms(1, [&] { ok = recognize(small_graphs[k]).accepted() && ok; }));
      large_best[k] = std::min(large_best[k], best_time_ms(1, [&] { ok = recognize(large_graphs[k]).accepted() && ok; }));
    }
  }
  double small = 0;
  double large = 0;
  for (int k = 0; k < timing_graphs; ++k) {
    small += small_best[k];
    large += large_best[k];
  }
  const double ratio = large / small;
  std::ostringstream d;
  d << timing_graphs << " graphs per size, t(512)=" << small << " ms, t(1024)=" << large << " ms, ratio " << ratio
    << ", window [" << scaling_low << ", " << scaling_high << "]";
  if (!ok) d << "; a generated graph was rejected";
  return {ok && ratio >= scaling_low && ratio <= scaling_high, d.str()};
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = "cd '" PRESSING_GOLDEN_DIR "/inputs' && '" PRESSING_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Outcome cli_golden() {
  std::ifstream cases(PRESSING_GOLDEN_DIR "/cases.txt");
  if (!cases) return {false, "cannot open the golden manifest"};
  std::size_t total = 0;
  std::vector<std::string> failed;
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto a = line.find('|');
    const auto b = line.find('|', a + 1);
    const std::string name = trim(line.substr(0, a));
    const int code = std::stoi(trim(line.substr(a + 1, b - a - 1)));
    const std::string args = trim(line.substr(b + 1));
    std::ifstream expected_file(PRESSING_GOLDEN_DIR "/expected/" + name + ".out", std::ios::binary);
    const std::string expected{std::istreambuf_iterator<char>(expected_file), std::istreambuf_iterator<char>()};
    const Run first = run_cli(args);
    const Run second = run_cli(args);
    ++total;
    if (first.status != code || first.out != expected || second.status != first.status || second.out != first.out) {
      failed.push_back(name);
    }
  }
  std::string detail = std::to_string(total) + " cases, " + std::to_string(failed.size()) + " failing";
  for (const auto& f : failed) detail += " " + f;
  return {failed.empty() && total > 0, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden example root", golden_example},
      {"weights and dot products of the 4-vertex example", four_vertex_weights},
      {"recognition matches the brute-force oracle", oracle_equivalence},
      {"counting formulas", counting},
      {"generated graphs are uniquely pressable", uniqueness},
      {"counterexample roots", counterexamples},
      {"hereditary roots", hereditary},
      {"cubic scaling", scaling},
      {"CLI golden suite", cli_golden},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << (k + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << o.detail << " [" << static_cast<long>(millis(Clock::now() - t0)) << " ms]" << std::endl;
  }
  return all ? 0 : 1;
}
