#include "pressing/genesis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "pressing/recognition.hpp"

namespace pressing {

namespace {

void require_cup(const PseudoGraph& g, Label first) {
  const auto& labels = g.labels();
  if (labels.empty()) throw NotCup("CUP graphs have at least one vertex");
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] != first + k) {
      throw NotCup("expected labels " + std::to_string(first) + ".." + std::to_string(first + labels.size() - 1));
    }
  }
  const RecognitionReport report = recognize(g);
  if (!report.accepted() || !report.stripped.empty() || report.sequence.vertices() != labels) {
    throw NotCup("input is not a connected uniquely pressable graph in label order");
  }
}

PseudoGraph extend_right_unchecked(const PseudoGraph& g) {
  const std::size_t n = g.order();
  const auto next = static_cast<Label>(n + 1);
  PseudoGraph h = PseudoGraph::on_range(n + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  for (Label v : looped_vertices(g)) h.add_edge(v, next);
  if (n % 2 == 0) h.add_edge(next, next);
  return h;
}

PseudoGraph extend_left_unchecked(const PseudoGraph& g) {
  const std::vector<Label> looped = looped_vertices(g);
  PseudoGraph h = PseudoGraph::on_range(g.order() + 1);
  for (const Edge& e : g.edges()) {
    const bool inside = std::binary_search(looped.begin(), looped.end(), e.u) &&
                        std::binary_search(looped.begin(), looped.end(), e.v);
    if (!inside) h.add_edge(e.u, e.v);
  }
  h.add_edge(1, 1);
  for (Label v : looped) h.add_edge(1, v);
  return h;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("count exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t pow3(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < e; ++k) r = checked_mul(r, 3);
  return r;
}

}  // namespace

PseudoGraph extend_right(const PseudoGraph& g) {
  require_cup(g, 1);
  return extend_right_unchecked(g);
}

PseudoGraph extend_left(const PseudoGraph& g) {
  require_cup(g, 2);
  return extend_left_unchecked(g);
}

BitMatrix extend_root_right(const BitMatrix& u) {
  const std::size_t n = u.size();
  BitMatrix v(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (u(i, j)) v.set(i, j);
    }
  }
  for (std::size_t i = 1; i <= n + 1; ++i) v.set(i, n + 1);
  return v;
}

BitMatrix extend_root_left(const BitMatrix& u) {
  const std::size_t n = u.size();
  BitMatrix v(n + 1);
  v.set(1, 1);
  const std::vector<std::size_t> w = column_weights(u);
  for (std::size_t j = 1; j <= n; ++j) {
    if (w[j - 1] % 2 == 1) v.set(1, j + 1);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (u(i, j)) v.set(i + 1, j + 1);
    }
  }
  return v;
}

std::string adjacency_key(const PseudoGraph& g) {
  const BitMatrix a = adjacency_matrix(g);
  std::string key;
  key.reserve(a.size() * a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) key += a.row(i).to_string();
  return key;
}

std::vector<PseudoGraph> generate_cup(std::size_t n) {
  if (n == 0) throw InvalidArgument("generate_cup needs n >= 1");
  std::map<std::string, PseudoGraph> level;
  PseudoGraph seed = PseudoGraph::on_range(1);
  seed.add_edge(1, 1);
  level.emplace(adjacency_key(seed), seed);

  for (std::size_t k = 1; k < n; ++k) {
    std::map<std::string, PseudoGraph> next;
    for (const auto& [key, g] : level) {
      PseudoGraph right = extend_right_unchecked(g);
      PseudoGraph left = extend_left_unchecked(shift_labels(g, 1));
      next.emplace(adjacency_key(right), std::move(right));
      next.emplace(adjacency_key(left), std::move(left));
    }
    level = std::move(next);
  }

  std::vector<PseudoGraph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(std::move(g));
  return out;
}

BitMatrix random_cup_root(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw InvalidArgument("random_cup needs n >= 1");
  BitMatrix u = BitMatrix::identity(1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 1; k < n; ++k) u = coin(rng) ? extend_root_right(u) : extend_root_left(u);
  return u;
}

PseudoGraph random_cup(std::size_t n, std::mt19937_64& rng) {
  return from_adjacency(transpose_mul(random_cup_root(n, rng)));
}

std::uint64_t cup_count(std::size_t n) {
  if (n <= 1) return 1;
  return n % 2 == 0 ? pow3((n - 2) / 2) : checked_mul(2, pow3((n - 3) / 2));
}

std::uint64_t total_count(std::size_t n) {
  if (n == 0) return 1;
  if (n % 2 == 0) {
    const std::uint64_t t = checked_mul(5, pow3((n - 2) / 2));
    if (t == std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("count exceeds 64 bits");
    return (t + 1) / 2;
  }
  const std::uint64_t t = pow3((n + 1) / 2);
  if (t == std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("count exceeds 64 bits");
  return (t + 1) / 2;
}

std::uint64_t canonical_code(const BitMatrix& a) {
  const std::size_t n = a.size();
  if (n > 8) throw BoundExceeded("canonical_code supports at most 8 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  do {
    std::uint64_t code = 0;
    std::size_t emitted = 0;
    const std::size_t shift_total = n * n;
    bool pruned = false;
    for (std::size_t i = 0; i < n && !pruned; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        code = (code << 1) | (a(perm[i], perm[j]) ? 1U : 0U);
        ++emitted;
      }
      // Prefix already larger than the best code's prefix: no completion wins.
      if (best != std::numeric_limits<std::uint64_t>::max() && (code > (best >> (shift_total - emitted)))) {
        pruned = true;
      }
    }
    if (!pruned) best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CensusResult census(std::size_t n, CensusOptions options) {
  if (n > options.max_vertices) {
    throw BoundExceeded("census limited to " + std::to_string(options.max_vertices) + " vertices, got " +
                        std::to_string(n));
  }
  if (n > 7) throw BoundExceeded("census supports at most 7 vertices");

  std::vector<std::pair<Label, Label>> slots;
  for (Label i = 1; i <= n; ++i) {
    for (Label j = i; j <= n; ++j) slots.emplace_back(i, j);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();

  struct Tally {
    std::set<std::uint64_t> up;
    std::set<std::uint64_t> cup;
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, 64);
  std::vector<Tally> tallies(jobs);

  auto work = [&](std::size_t worker) {
    const std::uint64_t begin = total * worker / jobs;
    const std::uint64_t end = total * (worker + 1) / jobs;
    Tally& tally = tallies[worker];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      PseudoGraph g = PseudoGraph::on_range(n);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((mask >> s) & 1U) g.add_edge(slots[s].first, slots[s].second);
      }
      const RecognitionReport report = recognize(g);
      if (!report.accepted()) continue;
      const std::uint64_t code = canonical_code(adjacency_matrix(g));
      tally.up.insert(code);
      if (report.stripped.empty()) tally.cup.insert(code);
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  Tally merged;
  for (Tally& t : tallies) {
    merged.up.merge(t.up);
    merged.cup.merge(t.cup);
  }
  return {n, total, merged.up.size(), merged.cup.size()};
}

}  // namespace pressing
