#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hgspec;

namespace {

void expect_values(const std::vector<double>& got,
                   const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

const double kSqrt33 = std::sqrt(33.0);

}  // namespace

TEST(EigenSymmetric, Identity) {
  const auto d = eigen_symmetric(RealMatrix::identity(3));
  expect_values(d.values, {1, 1, 1}, 1e-15);
  EXPECT_EQ(d.sweeps, 0u);
}

TEST(EigenSymmetric, CompleteUniformSeidel) {
  expect_values(eigenvalues(seidel_matrix(gen_complete_uniform(4, 3))),
                {3, 3, 3, -9}, 1e-10);
}

TEST(EigenSymmetric, HyperstarAdjacency) {
  expect_values(eigenvalues(adjacency_matrix(gen_hyperstar(4, 3))),
                {3, 1, 1, -1, -1, -1, -2}, 1e-10);
}

TEST(EigenSymmetric, OrthonormalVectorsSmallResidual) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 14;
    const auto h = oracle::random_hypergraph(rng, n, rng() % 12, 6);
    const auto m = seidel_matrix(h);
    const auto d = eigen_symmetric(m);
    ASSERT_EQ(d.values.size(), n);
    EXPECT_LT(d.residual, 1e-9 * (1 + static_cast<double>(m.max_abs())));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        double dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += d.vectors(i, a) * d.vectors(i, b);
        ASSERT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-10);
      }
    EXPECT_TRUE(std::is_sorted(d.values.begin(), d.values.end(), std::greater<>()));
    expect_values(d.values, oracle::eigenvalues(m), 1e-9);
  }
}

TEST(EigenSymmetric, RejectsAsymmetricAndReportsNonConvergence) {
  RealMatrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eigen_symmetric(m), StructuralError);
  m(1, 0) = 1.0;
  EXPECT_THROW(eigen_symmetric(m, 0), ConvergenceError);
  EXPECT_THROW(eigen_symmetric(RealMatrix(2, 3)), StructuralError);
}

TEST(EigenSymmetric, TraceAndSquareSumInvariants) {
  for (const auto& c : oracle::family_suite()) {
    for (const auto& m : {adjacency_matrix(c.h), seidel_matrix(c.h)}) {
      const auto v = eigenvalues(m);
      double sum = 0, sq = 0, tr2 = 0;
      for (double x : v) {
        sum += x;
        sq += x * x;
      }
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          tr2 += static_cast<double>(m(i, j) * m(j, i));
      const double n = static_cast<double>(m.size());
      EXPECT_NEAR(sum, 0.0, 1e-8 * n * static_cast<double>(m.max_abs()));
      EXPECT_NEAR(sq, tr2, 1e-8 * tr2);
    }
  }
}

TEST(GroupSpectrum, Examples) {
  const auto s = group_spectrum({2.0000001, 2.0, -1.0}, 1e-5);
  ASSERT_EQ(s.pairs.size(), 2u);
  EXPECT_NEAR(s.pairs[0].value, 2.00000005, 1e-15);
  EXPECT_EQ(s.pairs[0].multiplicity, 2u);
  EXPECT_EQ(s.pairs[1].multiplicity, 1u);
  EXPECT_EQ(group_spectrum({4, 4, 4}, 1e-8).pairs.size(), 1u);
  EXPECT_THROW(group_spectrum({1.0}, 0.0), std::invalid_argument);
}

TEST(GroupSpectrum, HyperstarSeidel) {
  const auto s = group_spectrum(eigenvalues(seidel_matrix(gen_hyperstar(4, 3))), 1e-8);
  ASSERT_EQ(s.pairs.size(), 4u);
  EXPECT_NEAR(s.pairs[0].value, (3 + kSqrt33) / 2, 1e-10);
  EXPECT_EQ(s.pairs[0].multiplicity, 1u);
  EXPECT_NEAR(s.pairs[1].value, 1, 1e-10);
  EXPECT_EQ(s.pairs[1].multiplicity, 3u);
  EXPECT_NEAR(s.pairs[2].value, (3 - kSqrt33) / 2, 1e-10);
  EXPECT_NEAR(s.pairs[3].value, -3, 1e-10);
  EXPECT_EQ(s.pairs[3].multiplicity, 2u);
  EXPECT_EQ(s.total_multiplicity(), 7u);
}

TEST(GroupSpectrum, GroupsSeparatedByMoreThanTol) {
  for (const auto& c : oracle::family_suite()) {
    const auto s = group_spectrum(eigenvalues(seidel_matrix(c.h)), 1e-7);
    EXPECT_EQ(s.total_multiplicity(), c.h.order());
    for (std::size_t i = 1; i < s.pairs.size(); ++i)
      EXPECT_GT(s.pairs[i - 1].value - s.pairs[i].value, 1e-7);
  }
}

TEST(CharPolyEval, Examples) {
  EXPECT_DOUBLE_EQ(char_poly_eval(RealMatrix(2, 2), 5.0), 25.0);
  const auto a = adjacency_matrix(gen_complete_uniform(4, 3));
  EXPECT_NEAR(char_poly_eval(a, 6.0), 0.0, 1e-6 * std::pow(12.0, 4));
  const auto s = seidel_matrix(gen_hyperstar(4, 3));
  double want = 1.0;
  for (const auto& p : group_spectrum(oracle::eigenvalues(s), 1e-7).pairs)
    want *= std::pow(2.0 - p.value, static_cast<double>(p.multiplicity));
  EXPECT_NEAR(char_poly_eval(s, 2.0), want, 1e-8 * std::abs(want));
}

TEST(CharPolyEval, MatchesEigenvalueProduct) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> lam(-8, 8);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const auto m = seidel_matrix(oracle::random_hypergraph(rng, n, rng() % 8, 5));
    const double x = lam(rng);
    const double want = oracle::char_poly_product(m, x);
    EXPECT_NEAR(char_poly_eval(m, x), want, 1e-9 * (1 + std::abs(want)));
  }
}

TEST(Determinant, SingularAndSign) {
  RealMatrix m(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  EXPECT_DOUBLE_EQ(determinant(m), -1.0);
  EXPECT_DOUBLE_EQ(determinant(RealMatrix(3, 3)), 0.0);
  EXPECT_THROW(determinant(RealMatrix(2, 3)), std::invalid_argument);
}

TEST(SeidelEnergy, Examples) {
  EXPECT_NEAR(seidel_energy(gen_hyperstar(4, 3)), 9 + kSqrt33, 1e-10);
  EXPECT_NEAR(seidel_energy(Hypergraph(6, {})), 10.0, 1e-10);
  EXPECT_EQ(seidel_energy(Hypergraph(1, {})), 0.0);
}

TEST(MainEigenvalues, Examples) {
  const auto hs = main_eigenvalues(seidel_matrix(gen_hyperstar(4, 3)));
  std::vector<double> flagged;
  for (const auto& m : hs)
    if (m.is_main) flagged.push_back(m.value);
  expect_values(flagged, {(3 + kSqrt33) / 2, (3 - kSqrt33) / 2}, 1e-10);

  const auto jm = main_eigenvalues(seidel_matrix(Hypergraph(5, {})));
  ASSERT_EQ(jm.size(), 2u);
  EXPECT_TRUE(jm[0].is_main);
  EXPECT_NEAR(jm[0].value, 4.0, 1e-12);
  EXPECT_FALSE(jm[1].is_main);
  EXPECT_EQ(jm[1].multiplicity, 4u);

  const auto km = main_eigenvalues(adjacency_matrix(gen_complete_uniform(5, 3)));
  EXPECT_EQ(count_main(km), 1u);
  EXPECT_TRUE(km.front().is_main);
  EXPECT_NEAR(km.front().value, 12.0, 1e-10);
  EXPECT_THROW(main_eigenvalues(RealMatrix::identity(2), 0.0), std::invalid_argument);
}

TEST(MainCount, RankExamples) {
  for (auto [n, k] : {std::pair{3L, 3L}, {4L, 3L}, {4L, 4L}})
    EXPECT_EQ(main_count_via_rank(seidel_matrix(gen_hyperstar(n, k))), 2u);
  EXPECT_EQ(main_count_via_rank(IntSymMatrix(5)), 1u);
  const auto s = seidel_matrix(gen_sunflower(3));
  EXPECT_EQ(main_count_via_rank(s), count_main(main_eigenvalues(s)));
}

TEST(MainCount, ProjectionAgreesWithRankOnSuite) {
  for (const auto& c : oracle::family_suite())
    for (const auto& m : {adjacency_matrix(c.h), seidel_matrix(c.h)})
      EXPECT_EQ(count_main(main_eigenvalues(m)), main_count_via_rank(m))
          << c.name << " order " << c.h.order();
}

TEST(Interlacing, Examples) {
  EXPECT_TRUE(check_interlacing({3, 1, -1}, {2, 0}));
  EXPECT_FALSE(check_interlacing({1, 0, -1}, {2, 0}));
  EXPECT_THROW(check_interlacing({1.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST(Interlacing, RandomVertexDeletionAndEnergyMonotone) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const auto h = oracle::random_hypergraph(rng, n, rng() % 9, 6);
    const auto parent = eigenvalues(seidel_matrix(h));
    for (Vertex v = 0; v < n; ++v) {
      const auto child = eigenvalues(seidel_matrix(delete_vertex(h, v)));
      ASSERT_TRUE(check_interlacing(parent, child)) << "trial " << t << " v " << v;
      ASSERT_GE(energy_of(parent), energy_of(child) - 1e-9);
    }
  }
}

TEST(WalkGen, CompleteUniformAllWeightOnPerron) {
  const auto w = walk_gen_from_spectrum(
      eigen_symmetric(adjacency_matrix(gen_complete_uniform(4, 3))));
  for (double t : {-0.5, 0.01, 0.1, 0.3})
    EXPECT_NEAR(w(t), 4.0 / (1.0 - 6.0 * t), 1e-10);
  EXPECT_NEAR(w.coefficients.front(), 4.0, 1e-12);
  EXPECT_NEAR(w.weight_sum(), 4.0, 1e-12);
}

TEST(WalkGen, EdgelessIsConstant) {
  const auto w = walk_gen_from_spectrum(eigen_symmetric(adjacency_matrix(Hypergraph(6, {}))));
  for (double t : {-3.0, 0.0, 2.5}) EXPECT_NEAR(w(t), 6.0, 1e-12);
}

TEST(WalkGen, ReconstructsExactWalkCounts) {
  const auto h = gen_hyperstar(3, 3);
  const auto w = walk_gen_from_spectrum(eigen_symmetric(adjacency_matrix(h)));
  for (std::size_t l = 0; l <= 4; ++l) {
    const double exact = walk_count(h, l).convert_to<double>();
    EXPECT_NEAR(w.walks(l), exact, 1e-8 * exact);
  }
  for (const auto& c : oracle::family_suite()) {
    const auto wc = walk_gen_from_spectrum(eigen_symmetric(adjacency_matrix(c.h)));
    const auto table = walk_table(c.h, 6);
    for (std::size_t l = 0; l <= 6; ++l) {
      const double exact = table.counts[l].convert_to<double>();
      EXPECT_NEAR(wc.walks(l), exact, 1e-6 * exact);
    }
    for (double cj : wc.coefficients) EXPECT_GE(cj, -1e-12);
    EXPECT_NEAR(wc.weight_sum(), static_cast<double>(c.h.order()), 1e-9);
  }
}

TEST(WalkGen, PoleThrows) {
  const auto w = walk_gen_from_spectrum(
      eigen_symmetric(adjacency_matrix(gen_complete_uniform(4, 3))));
  EXPECT_THROW(w(1.0 / 6.0), PoleError);
  // -2 carries no weight in a regular hypergraph, so t = -1/2 is not a pole.
  EXPECT_NO_THROW(w(-0.5));
}

TEST(MaxSortedGap, Basic) {
  EXPECT_DOUBLE_EQ(max_sorted_gap({3, 1, 2}, {1.5, 2, 3}), 0.5);
  EXPECT_THROW(max_sorted_gap({1}, {1, 2}), std::invalid_argument);
}
