#include "pressing/cholesky.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace pressing {

namespace {

// Calls f(j) for every set column j of r (1-based), in increasing order.
template <typename F>
void for_each_set(const BitRow& r, F&& f) {
  const auto words = r.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    for (BitRow::word_type w = words[k]; w != 0; w &= w - 1) {
      f(k * BitRow::word_bits + static_cast<std::size_t>(std::countr_zero(w)) + 1);
    }
  }
}

std::vector<std::size_t> component_of(const BitMatrix& m, std::size_t start) {
  std::vector<bool> seen(m.size() + 1, false);
  std::vector<std::size_t> stack{start};
  std::vector<std::size_t> out;
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for_each_set(m.row(v), [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Complements the closed neighbourhood: every row in N picks up N. Applying
// it twice with the same N restores the matrix.
void toggle_neighbourhood(BitMatrix& m, const BitRow& nbhd) {
  for_each_set(nbhd, [&](std::size_t l) { m.row(l) ^= nbhd; });
}

// Scratch rows reused across steps of the greedy search.
struct Scratch {
  explicit Scratch(std::size_t n) : looped(n), seen(n), reached(n), fresh(n), old(n) {}
  BitRow looped, seen, reached, fresh, old;
  std::vector<std::size_t> stack;
};

// After a press of some vertex with neighbourhood `touched`, checks that every
// non-trivial component meeting `touched` still has a looped vertex. Other
// components are unchanged by the press.
bool neighbourhood_stays_pressable(const BitMatrix& m, const BitRow& touched, Scratch& s) {
  const std::size_t n = m.size();
  const BitRow zero(n);
  s.looped = zero;
  for (std::size_t i = 1; i <= n; ++i) {
    if (m(i, i)) s.looped.set(i);
  }
  s.seen = zero;
  bool ok = true;
  for_each_set(touched, [&](std::size_t start) {
    if (!ok || s.seen.test(start) || m.row(start).none()) return;
    s.reached = zero;
    s.seen.set(start);
    s.reached.set(start);
    s.stack.assign(1, start);
    while (!s.stack.empty()) {
      const std::size_t v = s.stack.back();
      s.stack.pop_back();
      s.fresh = m.row(v);
      s.old = s.fresh;
      s.old &= s.seen;
      s.fresh ^= s.old;
      s.seen |= s.fresh;
      s.reached |= s.fresh;
      for_each_set(s.fresh, [&](std::size_t w) { s.stack.push_back(w); });
    }
    s.reached &= s.looped;
    ok = s.reached.any();
  });
  return ok;
}

}  // namespace

CholeskyRoot instructional_root(const BitMatrix& a) {
  if (!a.is_symmetric()) throw InvalidArgument("instructional_root needs a symmetric matrix");
  const std::size_t n = a.size();
  BitMatrix work = a;
  BitMatrix u(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (!work(k, k)) {
      for (std::size_t i = k; i <= n; ++i) {
        if (work.row(i).any()) throw NotOrderPressable(k);
      }
      break;
    }
    const BitRow& pivot = work.row(k);
    u.row(k) = pivot;
    for (std::size_t i = k + 1; i <= n; ++i) {
      if (work.row(i).test(k)) work.row(i) ^= pivot;
    }
  }
  CholeskyRoot root{std::move(u), {}};
  root.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) root.order[i] = static_cast<Label>(i + 1);
  return root;
}

CholeskyRoot instructional_root(const PseudoGraph& g) {
  CholeskyRoot root = instructional_root(adjacency_matrix(g));
  root.order = g.labels();
  return root;
}

PressingOrder greedy_pressing_order(const PseudoGraph& g) {
  BitMatrix m = adjacency_matrix(g);
  const std::size_t n = m.size();
  PressingOrder out;
  Scratch scratch(n);
  BitRow nbhd(n);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (degree, index)

  // Presses v if that keeps every touched component pressable.
  auto try_press = [&](std::size_t v) {
    nbhd = m.row(v);
    toggle_neighbourhood(m, nbhd);
    if (neighbourhood_stays_pressable(m, nbhd, scratch)) return true;
    toggle_neighbourhood(m, nbhd);
    return false;
  };

  for (std::size_t step = 1;; ++step) {
    candidates.clear();
    std::size_t best = 0;
    std::size_t best_degree = 0;
    bool tie = false;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!m(i, i)) continue;
      const std::size_t degree = m.row(i).count();
      candidates.emplace_back(degree, i);
      if (degree > best_degree) {
        best = i;
        best_degree = degree;
        tie = false;
      } else if (degree == best_degree) {
        tie = true;
      }
    }
    if (best == 0) break;
    if (tie && !out.first_tie) out.first_tie = step;

    std::size_t chosen = try_press(best) ? best : 0;
    if (chosen == 0) {
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      for (const auto& [degree, v] : candidates) {
        if (v != best && try_press(v)) {
          chosen = v;
          break;
        }
      }
    }
    if (chosen == 0) break;
    out.permutation.push_back(g.labels()[chosen - 1]);
  }

  out.complete = m.is_zero();
  if (!out.complete) {
    std::size_t start = 1;
    while (!m.row(start).any()) ++start;
    for (std::size_t idx : component_of(m, start)) out.leftover.push_back(g.labels()[idx - 1]);
  }
  return out;
}

PressingOrder find_pressing_order(const PseudoGraph& g) {
  PressingOrder order = greedy_pressing_order(g);
  if (!order.complete) throw NotPressable(order.leftover);
  return order;
}

std::size_t vertex_weight(const CholeskyRoot& r, std::size_t j) {
  if (j == 0 || j > r.u.size()) throw DimensionError("vertex index " + std::to_string(j) + " out of range");
  return r.u.column(j).count();
}

bool vertex_dot(const CholeskyRoot& r, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > r.u.size() || j > r.u.size()) {
    throw DimensionError("vertex index out of range");
  }
  return gf2_dot(r.u.column(i), r.u.column(j));
}

BitMatrix permuted_adjacency(const PseudoGraph& g, const std::vector<Label>& order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw InvalidArgument("order must list every vertex exactly once");
  std::vector<std::size_t> position(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t idx = g.index_of(order[p]);
    if (position[idx] != 0) throw InvalidArgument("order repeats a vertex");
    position[idx] = p + 1;
  }
  BitMatrix out(n);
  for (const Edge& e : g.edges()) {
    const std::size_t a = position[g.index_of(e.u)];
    const std::size_t b = position[g.index_of(e.v)];
    out.set(a, b);
    out.set(b, a);
  }
  return out;
}

}  // namespace pressing
