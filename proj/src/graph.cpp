#include "pressing/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "line_reader.hpp"

namespace pressing {

PseudoGraph::PseudoGraph(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == 0) throw InvalidArgument("vertex labels must be positive");
    if (k > 0 && labels_[k - 1] >= labels_[k]) {
      throw InvalidArgument("vertex labels must be strictly increasing");
    }
  }
}

PseudoGraph::PseudoGraph(std::vector<Label> labels, std::initializer_list<std::pair<Label, Label>> edges)
    : PseudoGraph(std::move(labels)) {
  for (auto [a, b] : edges) add_edge(a, b);
}

PseudoGraph PseudoGraph::on_range(std::size_t n) {
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{1});
  return PseudoGraph(std::move(labels));
}

bool PseudoGraph::has_vertex(Label v) const { return std::binary_search(labels_.begin(), labels_.end(), v); }

std::size_t PseudoGraph::index_of(Label v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) throw InvalidArgument("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - labels_.begin()) + 1;
}

void PseudoGraph::require_vertex(Label v) const {
  if (!has_vertex(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
}

bool PseudoGraph::add_edge(Label a, Label b) {
  require_vertex(a);
  require_vertex(b);
  return edges_.insert(Edge(a, b)).second;
}

bool PseudoGraph::remove_edge(Label a, Label b) {
  require_vertex(a);
  require_vertex(b);
  return edges_.erase(Edge(a, b)) != 0;
}

void PseudoGraph::toggle_edge(Label a, Label b) {
  if (!remove_edge(a, b)) edges_.insert(Edge(a, b));
}

PressingSequence::PressingSequence(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
  std::vector<Label> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("pressing sequence repeats a vertex");
  }
}

std::vector<Label> neighborhood(const PseudoGraph& g, Label v) {
  if (!g.has_vertex(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
  std::vector<Label> out;
  for (const Edge& e : g.edges()) {
    if (e.u == v) {
      out.push_back(e.v);
    } else if (e.v == v) {
      out.push_back(e.u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PseudoGraph press(const PseudoGraph& g, Label v) {
  if (!g.has_vertex(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
  if (!g.is_looped(v)) throw InvalidPress(v, 0);
  const std::vector<Label> nbhd = neighborhood(g, v);
  PseudoGraph out = g;
  for (std::size_t a = 0; a < nbhd.size(); ++a) {
    for (std::size_t b = a; b < nbhd.size(); ++b) out.toggle_edge(nbhd[a], nbhd[b]);
  }
  return out;
}

PseudoGraph apply_sequence(const PseudoGraph& g, const PressingSequence& s) {
  PseudoGraph current = g;
  std::size_t position = 0;
  for (Label v : s.vertices()) {
    ++position;
    if (!current.has_vertex(v) || !current.is_looped(v)) throw InvalidPress(v, position);
    current = press(current, v);
  }
  return current;
}

bool is_successful(const PseudoGraph& g, const PressingSequence& s) {
  try {
    return apply_sequence(g, s).edgeless();
  } catch (const InvalidPress&) {
    return false;
  }
}

std::vector<Component> components(const PseudoGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(n, false);
  for (const Edge& e : g.edges()) {
    const std::size_t a = g.index_of(e.u) - 1;
    const std::size_t b = g.index_of(e.v) - 1;
    touched[a] = touched[b] = true;
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  std::vector<Component> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t root = find(k);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.push_back({});
    }
    out[slot[root]].vertices.push_back(g.labels()[k]);
  }
  for (Component& c : out) {
    c.trivial = c.vertices.size() == 1 && !touched[g.index_of(c.vertices.front()) - 1];
  }
  return out;
}

std::vector<Label> looped_vertices(const PseudoGraph& g) {
  std::vector<Label> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) out.push_back(e.u);
  }
  return out;
}

bool is_pressable(const PseudoGraph& g) {
  for (const Component& c : components(g)) {
    if (c.trivial) continue;
    if (std::none_of(c.vertices.begin(), c.vertices.end(), [&g](Label v) { return g.is_looped(v); })) {
      return false;
    }
  }
  return true;
}

BitMatrix adjacency_matrix(const PseudoGraph& g) {
  BitMatrix a(g.order());
  for (const Edge& e : g.edges()) {
    const std::size_t i = g.index_of(e.u);
    const std::size_t j = g.index_of(e.v);
    a.set(i, j);
    a.set(j, i);
  }
  return a;
}

PseudoGraph from_adjacency(const BitMatrix& a) {
  if (!a.is_symmetric()) throw InvalidArgument("adjacency matrix is not symmetric");
  PseudoGraph g = PseudoGraph::on_range(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const BitRow& r = a.row(i);
    for (std::size_t j = i; j <= a.size(); ++j) {
      if (r.test(j)) g.add_edge(static_cast<Label>(i), static_cast<Label>(j));
    }
  }
  return g;
}

PseudoGraph delete_vertex(const PseudoGraph& g, Label v) {
  if (!g.has_vertex(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
  std::vector<Label> keep;
  keep.reserve(g.order());
  for (Label w : g.labels()) {
    if (w != v) keep.push_back(w);
  }
  return induced_subgraph(g, keep);
}

PseudoGraph induced_subgraph(const PseudoGraph& g, const std::vector<Label>& vertices) {
  std::vector<Label> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (Label v : sorted) {
    if (!g.has_vertex(v)) throw InvalidArgument("unknown vertex " + std::to_string(v));
  }
  PseudoGraph out(sorted);
  for (const Edge& e : g.edges()) {
    if (out.has_vertex(e.u) && out.has_vertex(e.v)) out.add_edge(e.u, e.v);
  }
  return out;
}

PseudoGraph shift_labels(const PseudoGraph& g, Label offset) {
  std::vector<Label> labels = g.labels();
  for (Label& v : labels) v += offset;
  PseudoGraph out(std::move(labels));
  for (const Edge& e : g.edges()) out.add_edge(e.u + offset, e.v + offset);
  return out;
}

PseudoGraph compress_labels(const PseudoGraph& g) {
  PseudoGraph out = PseudoGraph::on_range(g.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(static_cast<Label>(g.index_of(e.u)), static_cast<Label>(g.index_of(e.v)));
  }
  return out;
}

void write_graph(std::ostream& out, const PseudoGraph& g) {
  out << g.order() << '\n';
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (k > 0) out << ' ';
    out << g.labels()[k];
  }
  out << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_string(const PseudoGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

Label parse_label(detail::LineReader& reader, std::string_view token) {
  auto value = detail::parse_count(token);
  if (!value || *value == 0 || *value > std::numeric_limits<Label>::max()) {
    reader.fail("invalid vertex label '" + std::string(token) + "'");
  }
  return static_cast<Label>(*value);
}

bool looks_like_matrix_row(std::string_view line, std::size_t n) {
  if (line.size() != n || line.find_first_not_of("01") != std::string_view::npos) return false;
  // "1" is both a one-vertex label line and a 1x1 matrix row; prefer the label.
  return !(n == 1 && line == "1");
}

PseudoGraph read_matrix_body(detail::LineReader& reader, std::size_t n, std::string first_row) {
  std::vector<std::string> rows;
  rows.reserve(n);
  rows.push_back(std::move(first_row));
  if (rows.back().size() != n || rows.back().find_first_not_of("01") != std::string::npos) {
    reader.fail("expected " + std::to_string(n) + " characters from {0,1}");
  }
  for (std::size_t i = 1; i < n; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line_no() + 1, "missing matrix row");
    if (line->size() != n || line->find_first_not_of("01") != std::string::npos) {
      reader.fail("expected " + std::to_string(n) + " characters from {0,1}");
    }
    rows.push_back(std::move(*line));
  }
  const BitMatrix a = BitMatrix::from_rows(rows);
  if (!a.is_symmetric()) reader.fail("adjacency matrix is not symmetric");
  return from_adjacency(a);
}

std::optional<PseudoGraph> read_record(detail::LineReader& reader, TextFormat format) {
  auto header = reader.next();
  while (header && detail::trim(*header).empty()) header = reader.next();
  if (!header) return std::nullopt;
  auto n = detail::parse_count(*header);
  if (!n) reader.fail("expected vertex count");

  if (*n == 0) {
    // Optional empty label line; the record still ends at a blank line.
    if (format != TextFormat::matrix) {
      while (auto line = reader.next()) {
        if (detail::trim(*line).empty()) break;
        reader.fail("unexpected content in an empty graph");
      }
    }
    return PseudoGraph{};
  }

  auto second = reader.next();
  if (!second) throw ParseError(reader.line_no() + 1, "missing label line");
  const std::string line2{detail::trim(*second)};

  if (format == TextFormat::matrix || (format == TextFormat::automatic && looks_like_matrix_row(line2, *n))) {
    return read_matrix_body(reader, *n, line2);
  }

  const auto tokens = split_ws(line2);
  if (tokens.size() != *n) {
    reader.fail("expected " + std::to_string(*n) + " labels, found " + std::to_string(tokens.size()));
  }
  std::vector<Label> labels;
  labels.reserve(*n);
  for (auto t : tokens) labels.push_back(parse_label(reader, t));
  for (std::size_t k = 1; k < labels.size(); ++k) {
    if (labels[k - 1] >= labels[k]) reader.fail("labels must be strictly increasing");
  }
  PseudoGraph g(std::move(labels));

  while (auto line = reader.next()) {
    if (detail::trim(*line).empty()) break;
    const auto ends = split_ws(*line);
    if (ends.size() != 2) reader.fail("expected an edge 'u v'");
    const Label a = parse_label(reader, ends[0]);
    const Label b = parse_label(reader, ends[1]);
    if (!g.has_vertex(a) || !g.has_vertex(b)) reader.fail("edge endpoint is not a listed label");
    if (!g.add_edge(a, b)) reader.fail("duplicate edge");
  }
  return g;
}

}  // namespace

std::optional<PseudoGraph> read_graph(std::istream& in, TextFormat format) {
  detail::LineReader reader(in);
  return read_record(reader, format);
}

std::vector<PseudoGraph> read_graphs(std::istream& in, TextFormat format) {
  detail::LineReader reader(in);
  std::vector<PseudoGraph> out;
  while (auto g = read_record(reader, format)) out.push_back(std::move(*g));
  return out;
}

PseudoGraph parse_graph(std::string_view text, TextFormat format) {
  std::istringstream in{std::string(text)};
  auto g = read_graph(in, format);
  if (!g) throw ParseError(1, "empty input");
  return std::move(*g);
}

std::string to_dot(const PseudoGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (Label v : g.labels()) {
    out << "  " << v;
    if (g.is_looped(v)) out << " [style=filled, fillcolor=black, fontcolor=white]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pressing
