#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hgspec;

TEST(HgFormat, RoundTripPreservesEdgeOrderAndFamily) {
  for (const auto& h : {gen_hyperstar(4, 3), gen_double_hyperstar(3, 2, 4),
                        gen_sunflower(4), gen_complete_uniform(5, 3)}) {
    const auto text = to_hg_string(h);
    const auto back = parse_hg(text);
    EXPECT_EQ(back.order(), h.order());
    EXPECT_EQ(back.edges(), h.edges());
    EXPECT_EQ(back.family(), h.family());
    EXPECT_EQ(to_hg_string(back), text);
  }
}

TEST(HgFormat, CommentsAndBlankLines) {
  const auto h = parse_hg(
      "# a comment\n\n5   # vertices\n0 1 2\n\n1 2 3 4  # second\n0 1 3\n");
  EXPECT_EQ(h.order(), 5u);
  EXPECT_EQ(h.edges(), oracle::worked_example().edges());
  EXPECT_FALSE(h.family());
}

TEST(HgFormat, FamilyHeader) {
  const auto h = parse_hg("7\n# family: hyperstar 4 3\n0 1 2\n0 3 4\n0 5 6\n");
  ASSERT_TRUE(h.family());
  EXPECT_EQ(*h.family(), (FamilyTag{"hyperstar", {4, 3}}));
}

TEST(HgFormat, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_hg(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3\n0 1\n0 5\n"), 3u);      // out of range
  EXPECT_EQ(line_of("3\n0 1\n\n1 1 2\n"), 4u);  // repeated vertex
  EXPECT_EQ(line_of("3\n0 x\n"), 2u);           // bad token
  EXPECT_EQ(line_of("3\n0 -1\n"), 2u);          // negative
  EXPECT_EQ(line_of("3 4\n"), 1u);              // extra tokens on count line
  EXPECT_EQ(line_of("3\n2\n"), 2u);             // singleton edge
  EXPECT_EQ(line_of(""), 1u);                   // empty file
  EXPECT_EQ(line_of("# only\n# comments\n"), 2u);
}

TEST(HgFormat, EdgelessAndZeroVertex) {
  EXPECT_EQ(parse_hg("4\n").edge_count(), 0u);
  EXPECT_EQ(parse_hg("0\n").order(), 0u);
}

TEST(MatrixDump, RoundTrip) {
  const auto s = seidel_matrix(gen_sunflower(3)).matrix();
  std::stringstream io;
  write_matrix_dump(io, s);
  EXPECT_EQ(read_matrix_dump(io), s);
}

TEST(MatrixDump, RejectsAsymmetricAndMalformed) {
  std::istringstream asym("2\n0 1\n2 0\n");
  EXPECT_THROW(read_matrix_dump(asym), StructuralError);
  std::istringstream short_rows("2\n0 1\n1\n");
  EXPECT_THROW(read_matrix_dump(short_rows), ParseError);
  std::istringstream trailing("1\n0\n9\n");
  EXPECT_THROW(read_matrix_dump(trailing), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_matrix_dump(empty), ParseError);
}

TEST(MatrixDump, RecoversHypergraphMatrices) {
  const auto h = oracle::worked_example();
  const auto a = adjacency_matrix(h);
  const auto s = seidel_matrix(h);
  EXPECT_EQ(adjacency_matrix(hypergraph_from_adjacency(a.matrix())), a);
  EXPECT_EQ(seidel_matrix(hypergraph_from_seidel(s.matrix())), s);
}

TEST(MatrixDump, InvalidMatricesForConversion) {
  Matrix<std::int64_t> diag(2, 2, 0);
  diag(0, 0) = 1;
  EXPECT_THROW(hypergraph_from_adjacency(diag), StructuralError);
  Matrix<std::int64_t> even(2, 2, 0);
  even(0, 1) = even(1, 0) = 2;
  EXPECT_THROW(hypergraph_from_seidel(even), StructuralError);
  Matrix<std::int64_t> neg(2, 2, 0);
  neg(0, 1) = neg(1, 0) = -1;
  EXPECT_THROW(hypergraph_from_adjacency(neg), StructuralError);
}
