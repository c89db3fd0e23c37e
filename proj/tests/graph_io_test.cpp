#include "hhnum/graph_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "hhnum/random.hpp"

namespace hhnum {
namespace {

TEST(Graph6Test, DecodesSmallExamples) {
  EXPECT_EQ(decode_graph6("Bw"), make_cycle(3));
  EXPECT_EQ(decode_graph6("Bg"), make_path(3));
  EXPECT_EQ(decode_graph6("C~"), make_complete(4));
  EXPECT_EQ(decode_graph6(">>graph6<<Bw\n"), make_cycle(3));
}

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6Test, MatchesReferenceEncoder) {
  Graph petersen = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                    {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  EXPECT_EQ(encode_graph6(petersen), "IheA@GUAo");
  EXPECT_EQ(encode_graph6(make_path(70)),
            "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G");
  EXPECT_EQ(decode_graph6(encode_graph6(make_path(70))), make_path(70));
}

TEST(Graph6Test, RejectsMalformed) {
  EXPECT_THROW(decode_graph6(""), ParseError);
  EXPECT_THROW(decode_graph6("B"), ParseError);         // missing data byte
  EXPECT_THROW(decode_graph6("Bww"), ParseError);       // extra byte
  EXPECT_THROW(decode_graph6("Bx"), ParseError);        // padding bit set
  EXPECT_THROW(decode_graph6("B "), ParseError);        // byte below 63
  EXPECT_THROW(decode_graph6("~??"), ParseError);       // truncated long header
  EXPECT_THROW(decode_graph6("?"), ParseError);         // zero vertices
}

TEST(EdgeListTest, ParsesWithAndWithoutHeader) {
  EXPECT_EQ(parse_graph("0 1\n1 2\n", GraphFormat::kEdgeList, 3), make_path(3));
  EXPECT_EQ(parse_edge_list("# comment\nn 4\n\n0 1\n1 2\n2 3\n"), make_path(4));
  // isolated trailing vertex only exists through the header
  EXPECT_EQ(parse_edge_list("n 3\n0 1\n").order(), 3);
  EXPECT_EQ(parse_edge_list("0 1\n").order(), 2);
}

TEST(EdgeListTest, RejectsBadTokens) {
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1\nn 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 5\n"), InvalidGraphError);
  EXPECT_THROW(parse_edge_list("1 1\n"), InvalidGraphError);
}

TEST(GraphIoTest, RoundTripBothFormats) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(1, 80);
    std::vector<Edge> edges;
    const int density = rng.uniform(0, 100);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.uniform(1, 100) <= density) edges.push_back(Edge{a, b});
    Graph g(n, edges);
    for (auto format : {GraphFormat::kGraph6, GraphFormat::kEdgeList}) {
      ASSERT_EQ(parse_graph(render_graph(g, format), format), g);
    }
  }
}

TEST(GraphIoTest, LoadsByExtension) {
  auto dir = std::filesystem::temp_directory_path() / "hhnum_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c4.g6") << encode_graph6(make_cycle(4)) << "\n";
  std::ofstream(dir / "p3.edges") << render_edge_list(make_path(3));
  std::ofstream(dir / "x.txt") << "0 1\n";
  EXPECT_EQ(load_graph(dir / "c4.g6"), make_cycle(4));
  EXPECT_EQ(load_graph(dir / "p3.edges"), make_path(3));
  EXPECT_THROW(load_graph(dir / "x.txt"), ParseError);
  EXPECT_THROW(load_graph(dir / "missing.g6"), ParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hhnum
