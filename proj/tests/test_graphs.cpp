#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "grig/labeled_graph.hpp"
#include "grig/language.hpp"
#include "grig/substitution.hpp"

using namespace grig;
using namespace grig::group;

TEST_CASE("first Schreier graph") {
  LabeledGraph g = schreier_graph(1);
  CHECK(g.vertex_count() == 2);
  EdgeCensus c = census(g);
  CHECK(c.a_edges == 1);
  CHECK(c.double_edges == 0);
  CHECK(c.loops == 6);  // b, c, d at both vertices
  CHECK(g.vertex_names[static_cast<std::size_t>(g.root)] == "1");
  CHECK(label_deficit_vertices(g).empty());
}

TEST_CASE("second Schreier graph is the documented path") {
  LabeledGraph g = schreier_graph(2);
  PathForm pf = path_form(g);
  REQUIRE(pf.order.size() == 4);
  // path 10 -a- 00 ={b,c}= 01 -a- 11 with d-loops everywhere, b,c loops at ends
  auto name = [&](std::size_t i) { return g.vertex_names[static_cast<std::size_t>(pf.order[i])]; };
  CHECK(name(0) == "10");
  CHECK(name(1) == "00");
  CHECK(name(2) == "01");
  CHECK(name(3) == "11");
  CHECK(pf.seam_labels[1] == std::vector<Gen>{Gen::b, Gen::c});
  CHECK(pf.seam_labels[0] == std::vector<Gen>{Gen::a});
  CHECK(pf.seam_labels[2] == std::vector<Gen>{Gen::a});
  CHECK(pf.loop_labels[0] == std::vector<Gen>{Gen::b, Gen::c, Gen::d});
  CHECK(pf.loop_labels[3] == std::vector<Gen>{Gen::b, Gen::c, Gen::d});
  CHECK(pf.loop_labels[1] == std::vector<Gen>{Gen::d});
  CHECK(pf.loop_labels[2] == std::vector<Gen>{Gen::d});
}

TEST_CASE("edge census follows the level") {
  for (int n = 2; n <= 10; ++n) {
    LabeledGraph g = schreier_graph(n);
    EdgeCensus c = census(g);
    CHECK(c.a_edges == (std::int64_t{1} << (n - 1)));
    CHECK(c.double_edges == (std::int64_t{1} << (n - 1)) - 1);
    CHECK(label_deficit_vertices(g).empty());
    CHECK_NOTHROW(path_form(g));
  }
}

TEST_CASE("window graphs") {
  CHECK(graph_from_window(PointedWord{Word("a"), 1}).edges ==
        std::vector<LabeledEdge>{LabeledEdge{0, 1, Gen::a}});

  LabeledGraph gx = graph_from_window(PointedWord{Word("x"), 1});
  EdgeCensus cx = census(gx);
  CHECK(cx.double_edges == 1);
  CHECK(cx.loops == 2);

  SUBCASE("interior of the level-2 graph matches the window of axa") {
    GraphDiff d = compare_graphs(schreier_graph(2), graph_from_window(PointedWord{Word("axa"), 1}));
    CHECK(d.entries.size() == 6);
    CHECK(d.loops_at_ends_only());
    for (const auto& e : d.entries) CHECK(e.side == 0);
  }

  SUBCASE("axa vs aya differ in interior labels only") {
    GraphDiff d = compare_graphs(graph_from_window(PointedWord{Word("axa"), 1}),
                                 graph_from_window(PointedWord{Word("aya"), 1}));
    CHECK(!d.empty());
    for (const auto& e : d.entries) {
      if (e.loop) CHECK((e.label == Gen::c || e.label == Gen::d));
      else CHECK((e.label == Gen::c || e.label == Gen::d));
    }
  }

  SUBCASE("deficits confined to the window ends") {
    PointedWord w{eta_prefix(63), 1};
    LabeledGraph g = graph_from_window(w);
    auto deficit = label_deficit_vertices(g);
    PathForm pf = path_form(g);
    REQUIRE(deficit.size() == 2);
    CHECK(((deficit[0] == pf.order.front() && deficit[1] == pf.order.back()) ||
           (deficit[0] == pf.order.back() && deficit[1] == pf.order.front())));
  }
}

TEST_CASE("graph correspondence at many levels") {
  for (int n = 2; n <= 9; ++n) {
    PointedWord w{eta_prefix((std::int64_t{1} << n) - 1), 1};
    GraphDiff d = compare_graphs(schreier_graph(n), graph_from_window(w));
    CHECK(d.entries.size() <= 6);
    CHECK(d.loops_at_ends_only());
  }
}

TEST_CASE("compare_graphs basics") {
  LabeledGraph g = schreier_graph(4);
  CHECK(compare_graphs(g, g).empty());

  SUBCASE("size mismatch is an alignment error") {
    CHECK_THROWS_AS(compare_graphs(schreier_graph(3), schreier_graph(4)), std::invalid_argument);
  }

  SUBCASE("a-pattern mismatch is an alignment error") {
    // xax has no a-seam at position 0; axa does
    CHECK_THROWS_AS((compare_graphs(graph_from_window(PointedWord{Word("axa"), 1}),
                                    graph_from_window(PointedWord{Word("xax"), 1}))),
                    std::invalid_argument);
  }

  SUBCASE("not path-shaped") {
    LabeledGraph bad;
    bad.vertex_names = {"1", "2", "3", "4"};
    bad.edges = {LabeledEdge{0, 1, Gen::a}, LabeledEdge{0, 2, Gen::b}, LabeledEdge{0, 3, Gen::c}};
    CHECK_THROWS_AS(path_form(bad), std::invalid_argument);
  }
}

TEST_CASE("edge list round trip") {
  LabeledGraph g = schreier_graph(3);
  std::ostringstream os;
  write_edge_list(os, g);
  std::istringstream is(os.str());
  LabeledGraph back = read_edge_list(is);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges.size() == g.edges.size());
  CHECK(back.vertex_names[static_cast<std::size_t>(back.root)] ==
        g.vertex_names[static_cast<std::size_t>(g.root)]);
  CHECK(compare_graphs(g, back).empty());

  SUBCASE("window graph round trip keeps the diff empty") {
    LabeledGraph w = graph_from_window(PointedWord{eta_prefix(31), 4});
    std::ostringstream ws;
    write_edge_list(ws, w);
    std::istringstream wis(ws.str());
    CHECK(compare_graphs(w, read_edge_list(wis)).empty());
  }

  SUBCASE("malformed input") {
    std::istringstream bad("1 2 a\n");
    CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
  }
}
