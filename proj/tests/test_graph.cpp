#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pressing/f2core.hpp"
#include "pressing/graph.hpp"

using namespace pressing;

namespace {

PseudoGraph v2_graph() { return from_adjacency(transpose_mul(fixtures::v2())); }

}  // namespace

TEST_CASE("PseudoGraph invariants") {
  CHECK_THROWS_AS(PseudoGraph({2, 1}), InvalidArgument);
  CHECK_THROWS_AS(PseudoGraph({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(PseudoGraph({1, 1}), InvalidArgument);
  PseudoGraph g({1, 5, 9});
  CHECK(g.add_edge(9, 1));
  CHECK_FALSE(g.add_edge(1, 9));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 9));
  CHECK_THROWS_AS(g.add_edge(1, 2), InvalidArgument);
  CHECK(g.index_of(9) == 3);
}

TEST_CASE("neighborhood") {
  const PseudoGraph g = fixtures::loop_pendant();
  CHECK(neighborhood(g, 1) == std::vector<Label>{1, 3});
  CHECK(neighborhood(g, 2).empty());
  CHECK(neighborhood(PseudoGraph({4}, {{4, 4}}), 4) == std::vector<Label>{4});
  CHECK_THROWS_AS(neighborhood(g, 7), InvalidArgument);
}

TEST_CASE("press") {
  SUBCASE("looped vertex with a pendant neighbour, press 1") {
    const PseudoGraph h = press(fixtures::loop_pendant(), 1);
    CHECK(h == PseudoGraph({1, 2, 3}, {{3, 3}}));
  }
  SUBCASE("isolated looped vertex") {
    const PseudoGraph g({1, 2}, {{1, 1}, {2, 2}});
    CHECK(press(g, 1) == PseudoGraph({1, 2}, {{2, 2}}));
  }
  SUBCASE("both vertices looped and adjacent") {
    CHECK(press(PseudoGraph({1, 2}, {{1, 1}, {2, 2}, {1, 2}}), 1).edgeless());
  }
  SUBCASE("unlooped vertex") {
    try {
      press(fixtures::loop_pendant(), 3);
      FAIL("expected InvalidPress");
    } catch (const InvalidPress& e) {
      CHECK(e.vertex() == 3);
    }
  }
}

TEST_CASE("apply_sequence and is_successful") {
  const PseudoGraph cup2 = fixtures::cup2();
  CHECK(apply_sequence(cup2, {1, 2}).edgeless());
  CHECK(apply_sequence(cup2, {}) == cup2);
  try {
    apply_sequence(cup2, {2, 1});
    FAIL("expected InvalidPress");
  } catch (const InvalidPress& e) {
    CHECK(e.position() == 1);
    CHECK(e.vertex() == 2);
  }
  CHECK(is_successful(v2_graph(), {3, 4, 1, 2}));
  CHECK(is_successful(v2_graph(), {1, 2, 3, 4}));
  CHECK(is_successful(PseudoGraph::on_range(3), {}));
  CHECK_FALSE(is_successful(cup2, {1}));
  CHECK(apply_sequence(cup2, {1}) == PseudoGraph({1, 2}, {{2, 2}}));
  CHECK_FALSE(is_successful(cup2, {2}));
  CHECK_FALSE(is_successful(cup2, {1, 5}));
  CHECK_THROWS_AS(PressingSequence({1, 2, 1}), InvalidArgument);
}

TEST_CASE("components") {
  const auto comps = components(fixtures::loop_pendant());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertices == std::vector<Label>{1, 3});
  CHECK_FALSE(comps[0].trivial);
  CHECK(comps[1].vertices == std::vector<Label>{2});
  CHECK(comps[1].trivial);

  const auto edgeless = components(PseudoGraph::on_range(3));
  REQUIRE(edgeless.size() == 3);
  for (const auto& c : edgeless) CHECK(c.trivial);

  const auto single = components(PseudoGraph({1}, {{1, 1}}));
  REQUIRE(single.size() == 1);
  CHECK_FALSE(single[0].trivial);
}

TEST_CASE("looped_vertices") {
  CHECK(looped_vertices(fixtures::loop_pendant()) == std::vector<Label>{1});
  CHECK(looped_vertices(PseudoGraph::on_range(4)).empty());
  CHECK(looped_vertices(PseudoGraph({1, 2}, {{1, 1}, {2, 2}, {1, 2}})) == std::vector<Label>{1, 2});
}

TEST_CASE("adjacency_matrix and from_adjacency") {
  CHECK(adjacency_matrix(fixtures::cup2()) == BitMatrix::from_rows({"11", "10"}));
  CHECK(adjacency_matrix(PseudoGraph::on_range(3)) == BitMatrix(3));
  CHECK(from_adjacency(fixtures::example_m()) ==
        PseudoGraph({1, 2, 3, 4, 5}, {{1, 1}, {1, 5}, {2, 2}, {2, 4}, {4, 4}, {5, 5}}));
  CHECK_THROWS_AS(from_adjacency(BitMatrix::from_rows({"01", "00"})), InvalidArgument);
  // Non-contiguous labels compress in order.
  CHECK(adjacency_matrix(PseudoGraph({3, 10}, {{3, 10}})) == BitMatrix::from_rows({"01", "10"}));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const PseudoGraph g = oracle::random_graph(1 + trial % 8, rng);
    CHECK(from_adjacency(adjacency_matrix(g)) == g);
  }
}

TEST_CASE("press toggles exactly N(v) x N(v)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const PseudoGraph g = from_adjacency(oracle::random_symmetric(n, rng));
    const auto looped = looped_vertices(g);
    if (looped.empty()) continue;
    const Label v = looped[static_cast<std::size_t>(trial) % looped.size()];
    const auto nbhd = neighborhood(g, v);
    const PseudoGraph h = press(g, v);

    CHECK(neighborhood(h, v).empty());
    CHECK(h.labels() == g.labels());
    // Replaying the same toggle set restores G.
    PseudoGraph back = h;
    for (std::size_t a = 0; a < nbhd.size(); ++a) {
      for (std::size_t b = a; b < nbhd.size(); ++b) back.toggle_edge(nbhd[a], nbhd[b]);
    }
    CHECK(back == g);
    // Edges with an endpoint outside N(v) are untouched.
    auto in_n = [&](Label x) { return std::binary_search(nbhd.begin(), nbhd.end(), x); };
    for (Label a : g.labels()) {
      for (Label b : g.labels()) {
        if (!in_n(a) || !in_n(b)) CHECK(g.has_edge(a, b) == h.has_edge(a, b));
      }
    }
    // Independent symmetric-difference oracle.
    std::set<std::pair<int, int>> edges;
    for (const auto& e : g.edges()) edges.insert({static_cast<int>(e.u), static_cast<int>(e.v)});
    const auto expected = oracle::press_edges(edges, static_cast<int>(v));
    std::set<std::pair<int, int>> got;
    for (const auto& e : h.edges()) got.insert({static_cast<int>(e.u), static_cast<int>(e.v)});
    CHECK(got == expected);
  }
}

TEST_CASE("pressable iff every non-trivial component has a loop (exhaustive n <= 4)") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::slot_count(n)); ++mask) {
      const PseudoGraph g = oracle::graph_from_mask(n, mask);
      const auto seqs = oracle::successful_by_permutations(g);
      CHECK(is_pressable(g) == !seqs.empty());
      // Every successful sequence has the same length.
      for (const auto& s : seqs) CHECK(s.size() == seqs.front().size());
    }
  }
}

TEST_CASE("delete, induce, shift, compress") {
  const PseudoGraph g = fixtures::loop_pendant();
  CHECK(delete_vertex(g, 2) == PseudoGraph({1, 3}, {{1, 1}, {1, 3}}));
  CHECK(induced_subgraph(g, {3, 1}) == PseudoGraph({1, 3}, {{1, 1}, {1, 3}}));
  CHECK(shift_labels(g, 1) == PseudoGraph({2, 3, 4}, {{2, 2}, {2, 4}}));
  CHECK(compress_labels(PseudoGraph({1, 3}, {{1, 1}, {1, 3}})) == fixtures::cup2());
}

TEST_CASE("graph text format") {
  const std::string text = "3\n1 2 3\n1 1\n1 3\n";
  CHECK(to_string(fixtures::loop_pendant()) == text);
  CHECK(parse_graph(text) == fixtures::loop_pendant());
  CHECK(parse_graph("3\n1 2 3\n3 1\n1 1\n\n") == fixtures::loop_pendant());
  CHECK(parse_graph("2\n11\n10\n") == fixtures::cup2());
  CHECK(parse_graph("2\n11\n10\n", TextFormat::matrix) == fixtures::cup2());
  CHECK(parse_graph("1\n1\n") == PseudoGraph({1}));
  CHECK(parse_graph("1\n1\n", TextFormat::matrix) == PseudoGraph({1}, {{1, 1}}));
  CHECK(parse_graph("0\n") == PseudoGraph{});
  CHECK(parse_graph("2\n4 9\n9 4\n") == PseudoGraph({4, 9}, {{4, 9}}));

  auto line_of = [](const std::string& bad) -> std::size_t {
    try {
      parse_graph(bad);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("2\n1\n") == 2);
  CHECK(line_of("2\n1 2\n1 3\n") == 3);
  CHECK(line_of("2\n1 2\n1 2\n2 1\n") == 4);
  CHECK(line_of("2\n2 1\n") == 2);
  CHECK(line_of("2\n1 2\n1\n") == 3);
  CHECK(line_of("2\n10\n11\n") == 3);  // asymmetric matrix
  CHECK_THROWS_AS(parse_graph(""), ParseError);

  std::istringstream stream("2\n1 2\n1 1\n1 2\n\n1\n1\n1 1\n");
  const auto records = read_graphs(stream);
  REQUIRE(records.size() == 2);
  CHECK(records[0] == fixtures::cup2());
  CHECK(records[1] == PseudoGraph({1}, {{1, 1}}));
}

TEST_CASE("DOT export draws looped vertices black") {
  const std::string dot = to_dot(fixtures::loop_pendant());
  CHECK(dot.find("1 [style=filled, fillcolor=black, fontcolor=white]") != std::string::npos);
  CHECK(dot.find("  2;") != std::string::npos);
  CHECK(dot.find("1 -- 3;") != std::string::npos);
  CHECK(dot.find("1 -- 1") == std::string::npos);
}
