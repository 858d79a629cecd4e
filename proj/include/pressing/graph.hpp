#pragma once

// Simple pseudo-graphs (loops allowed, no multi-edges) and the pressing
// dynamic on them.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pressing/common.hpp"
#include "pressing/f2core.hpp"

namespace pressing {

/// Unordered vertex pair normalized so that u <= v; u == v is a loop.
struct Edge {
  Label u = 0;
  Label v = 0;

  Edge() = default;
  Edge(Label a, Label b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const noexcept { return u == v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered simple pseudo-graph. Labels are positive and strictly increasing;
/// they need not be contiguous.
class PseudoGraph {
 public:
  PseudoGraph() = default;
  explicit PseudoGraph(std::vector<Label> labels);
  PseudoGraph(std::vector<Label> labels, std::initializer_list<std::pair<Label, Label>> edges);

  /// Edgeless graph on labels 1..n.
  static PseudoGraph on_range(std::size_t n);

  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool edgeless() const noexcept { return edges_.empty(); }

  bool has_vertex(Label v) const;
  bool has_edge(Label a, Label b) const { return edges_.contains(Edge(a, b)); }
  bool is_looped(Label v) const { return has_edge(v, v); }
  /// 1-based position of `v` in the label order.
  std::size_t index_of(Label v) const;

  /// Returns false if the edge was already present.
  bool add_edge(Label a, Label b);
  bool remove_edge(Label a, Label b);
  void toggle_edge(Label a, Label b);

  friend bool operator==(const PseudoGraph&, const PseudoGraph&) = default;
  friend auto operator<=>(const PseudoGraph&, const PseudoGraph&) = default;

 private:
  void require_vertex(Label v) const;

  std::vector<Label> labels_;
  std::set<Edge> edges_;
};

/// Ordered list of distinct labels.
class PressingSequence {
 public:
  PressingSequence() = default;
  explicit PressingSequence(std::vector<Label> vertices);
  PressingSequence(std::initializer_list<Label> vertices)
      : PressingSequence(std::vector<Label>(vertices)) {}

  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  friend bool operator==(const PressingSequence&, const PressingSequence&) = default;

 private:
  std::vector<Label> vertices_;
};

struct Component {
  std::vector<Label> vertices;
  /// A loopless isolated vertex.
  bool trivial = false;
};

/// N_G(v), sorted. Contains v iff v is looped.
std::vector<Label> neighborhood(const PseudoGraph& g, Label v);

/// Complements G[N(v)]; v ends isolated and loopless. Throws InvalidPress if v
/// is not looped.
PseudoGraph press(const PseudoGraph& g, Label v);

/// Presses in order; the first invalid press throws InvalidPress carrying its
/// 1-based position.
PseudoGraph apply_sequence(const PseudoGraph& g, const PressingSequence& s);

bool is_successful(const PseudoGraph& g, const PressingSequence& s);

/// Connected components ordered by smallest label. A loop alone does not
/// connect anything but makes its vertex non-trivial.
std::vector<Component> components(const PseudoGraph& g);

/// L(G), sorted.
std::vector<Label> looped_vertices(const PseudoGraph& g);

/// True iff every non-trivial component contains a looped vertex, i.e. some
/// successful pressing sequence exists.
bool is_pressable(const PseudoGraph& g);

/// Adjacency matrix under the label order (labels compressed to 1..n).
BitMatrix adjacency_matrix(const PseudoGraph& g);
/// Graph on labels 1..n; throws InvalidArgument if `a` is not symmetric.
PseudoGraph from_adjacency(const BitMatrix& a);

PseudoGraph delete_vertex(const PseudoGraph& g, Label v);
PseudoGraph induced_subgraph(const PseudoGraph& g, const std::vector<Label>& vertices);
/// Adds `offset` to every label.
PseudoGraph shift_labels(const PseudoGraph& g, Label offset);
/// Order-preserving relabeling onto 1..n.
PseudoGraph compress_labels(const PseudoGraph& g);

// Graph text format: a line holding n, a line of n space-separated labels, then
// one edge per line as `u v` (a loop as `v v`), ended by a blank line or EOF.
// With automatic detection the matrix format is also accepted; a 1-vertex
// input whose second line is "1" reads as a graph.
enum class TextFormat { automatic, graph, matrix };

void write_graph(std::ostream& out, const PseudoGraph& g);
std::string to_string(const PseudoGraph& g);

/// Reads one record, skipping leading blank lines. Returns nullopt at EOF.
std::optional<PseudoGraph> read_graph(std::istream& in, TextFormat format = TextFormat::automatic);
/// Reads blank-line separated records until EOF.
std::vector<PseudoGraph> read_graphs(std::istream& in, TextFormat format = TextFormat::automatic);
PseudoGraph parse_graph(std::string_view text, TextFormat format = TextFormat::automatic);

/// Graphviz rendering; looped vertices are filled black and loops are not
/// drawn as edges.
std::string to_dot(const PseudoGraph& g);

}  // namespace pressing
