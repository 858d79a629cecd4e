#include "pressing/recognition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pressing/cholesky.hpp"

namespace pressing {

bool PropertyReport::all_pass() const noexcept {
  return std::all_of(property.begin(), property.end(), [](const PropertyCheck& p) { return p.pass; });
}

int PropertyReport::first_failure() const noexcept {
  for (std::size_t k = 0; k < property.size(); ++k) {
    if (!property[k].pass) return static_cast<int>(k + 1);
  }
  return 0;
}

PropertyReport check_properties(const BitMatrix& u) {
  if (!u.is_upper_triangular()) throw InvalidArgument("check_properties needs an upper-triangular matrix");
  const std::size_t n = u.size();
  const BitMatrix columns = u.transpose();

  PropertyReport report;
  std::vector<std::size_t>& w = report.column_weights;
  w.resize(n + 1, 0);  // 1-based scratch, trimmed below
  for (std::size_t j = 1; j <= n; ++j) w[j] = columns.row(j).count();

  auto fail = [&report](int k, std::size_t column) {
    PropertyCheck& p = report.property[static_cast<std::size_t>(k - 1)];
    if (p.pass) p = {false, column};
  };

  // Property 1: column j is exactly the run of rows j-w+1..j.
  for (std::size_t j = 1; j <= n; ++j) {
    if (w[j] == 0) continue;
    const BitRow& col = columns.row(j);
    if (!col.test(j) || col.first_set() != j - w[j] + 1) fail(1, j);
  }

  // Property 2
  if (n >= 1 && w[1] != 1) fail(2, 1);
  for (std::size_t j = 2; j <= n; ++j) {
    if (w[j] < w[j - 1]) fail(2, j);
  }

  // Property 3
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    if (w[i] > 2 && w[i + 2] <= w[i]) fail(3, i + 2);
  }

  // Property 4
  std::size_t first_odd = 0;
  for (std::size_t j = 2; j <= n && first_odd == 0; ++j) {
    if (w[j] % 2 == 1) first_odd = j;
  }
  if (first_odd != 0) {
    for (std::size_t j = first_odd; j <= n; ++j) {
      if (w[j] != j) fail(4, j);
    }
  }

  w.erase(w.begin());
  return report;
}

std::string reason_code(Reason reason) {
  switch (reason) {
    case Reason::none: return "";
    case Reason::multi_component: return "MULTI_COMPONENT";
    case Reason::unpressable: return "UNPRESSABLE";
    case Reason::tie: return "TIE";
    case Reason::prop1: return "PROP1";
    case Reason::prop2: return "PROP2";
    case Reason::prop3: return "PROP3";
    case Reason::prop4: return "PROP4";
  }
  return "";
}

RecognitionReport recognize(const PseudoGraph& g) {
  RecognitionReport report;
  std::vector<const Component*> nontrivial;
  const std::vector<Component> comps = components(g);
  for (const Component& c : comps) {
    if (c.trivial) {
      report.stripped.push_back(c.vertices.front());
    } else {
      nontrivial.push_back(&c);
    }
  }

  if (nontrivial.size() >= 2) {
    report.reason = Reason::multi_component;
    return report;
  }
  if (nontrivial.empty()) {
    report.verdict = Verdict::yes;
    return report;
  }

  const PseudoGraph core = induced_subgraph(g, nontrivial.front()->vertices);
  const PressingOrder order = greedy_pressing_order(core);
  if (!order.complete) {
    report.reason = Reason::unpressable;
    return report;
  }

  // Vertices the greedy order never pressed follow it in label order; their
  // rows of the root are zero and the property check rejects them.
  std::vector<Label> full_order = order.permutation;
  for (Label v : core.labels()) {
    if (std::find(order.permutation.begin(), order.permutation.end(), v) == order.permutation.end()) {
      full_order.push_back(v);
    }
  }
  const CholeskyRoot root = instructional_root(permuted_adjacency(core, full_order));
  const PropertyReport props = check_properties(root.u);
  if (const int k = props.first_failure(); k != 0) {
    report.reason = static_cast<Reason>(static_cast<int>(Reason::prop1) + k - 1);
    report.column = props.prop(k).column;
    return report;
  }
  // Guard: uniquely pressable graphs never produce a greedy tie.
  if (order.first_tie) {
    report.reason = Reason::tie;
    return report;
  }

  report.verdict = Verdict::yes;
  report.sequence = PressingSequence(order.permutation);
  return report;
}

void write_report(std::ostream& out, const RecognitionReport& report) {
  out << "verdict: " << (report.accepted() ? "yes" : "no") << '\n';
  if (report.accepted()) {
    out << "sequence:";
    for (Label v : report.sequence.vertices()) out << ' ' << v;
    out << '\n';
  } else {
    out << "reason: " << reason_code(report.reason);
    if (report.column != 0) out << " col " << report.column;
    out << '\n';
  }
  out << "stripped:";
  for (Label v : report.stripped) out << ' ' << v;
  out << '\n';
}

std::string to_string(const RecognitionReport& report) {
  std::ostringstream out;
  write_report(out, report);
  return out.str();
}

namespace {

constexpr std::size_t oracle_hard_cap = 32;

// Adjacency as one bit mask per vertex; bit k of row v is edge {v, k}.
using MaskRows = std::vector<std::uint32_t>;

MaskRows to_masks(const PseudoGraph& g, OracleOptions options) {
  const std::size_t bound = std::min(options.max_vertices, oracle_hard_cap);
  if (g.order() > bound) {
    throw BoundExceeded("brute-force oracle limited to " + std::to_string(bound) + " vertices, got " +
                        std::to_string(g.order()));
  }
  MaskRows rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    const std::size_t a = g.index_of(e.u) - 1;
    const std::size_t b = g.index_of(e.v) - 1;
    rows[a] |= std::uint32_t{1} << b;
    rows[b] |= std::uint32_t{1} << a;
  }
  return rows;
}

// Visits every successful sequence; the visitor returns false to stop.
template <typename Visit>
bool search(MaskRows& rows, std::vector<std::size_t>& path, Visit& visit) {
  bool any_edge = false;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (rows[v] == 0) continue;
    any_edge = true;
    if (((rows[v] >> v) & 1U) == 0) continue;
    const MaskRows saved = rows;
    const std::uint32_t nbhd = rows[v];
    for (std::size_t w = 0; w < rows.size(); ++w) {
      if ((nbhd >> w) & 1U) rows[w] ^= nbhd;
    }
    path.push_back(v);
    const bool keep_going = search(rows, path, visit);
    path.pop_back();
    rows = saved;
    if (!keep_going) return false;
  }
  if (!any_edge) return visit(path);
  return true;
}

}  // namespace

std::size_t count_sequences_bruteforce(const PseudoGraph& g, OracleOptions options) {
  MaskRows rows = to_masks(g, options);
  std::vector<std::size_t> path;
  std::size_t count = 0;
  auto visit = [&count](const std::vector<std::size_t>&) {
    ++count;
    return true;
  };
  search(rows, path, visit);
  return count;
}

std::vector<PressingSequence> successful_sequences_bruteforce(const PseudoGraph& g, std::size_t limit,
                                                              OracleOptions options) {
  MaskRows rows = to_masks(g, options);
  std::vector<std::size_t> path;
  std::vector<PressingSequence> out;
  if (limit == 0) return out;
  auto visit = [&](const std::vector<std::size_t>& p) {
    std::vector<Label> labels;
    labels.reserve(p.size());
    for (std::size_t idx : p) labels.push_back(g.labels()[idx]);
    out.emplace_back(std::move(labels));
    return out.size() < limit;
  };
  search(rows, path, visit);
  return out;
}

// A successful sequence of length k gives A = U^T U with U of rank k, so the
// pressing length is the GF(2) rank of the adjacency matrix.
std::size_t pressing_length(const PseudoGraph& g) {
  for (const Component& c : components(g)) {
    if (c.trivial) continue;
    if (std::none_of(c.vertices.begin(), c.vertices.end(), [&g](Label v) { return g.is_looped(v); })) {
      throw NotPressable(c.vertices);
    }
  }
  return gf2_rank(adjacency_matrix(g));
}

}  // namespace pressing
