#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hgspec;

TEST(Partition, Validation) {
  EXPECT_NO_THROW(Partition(3, {{0, 2}, {1}}));
  EXPECT_THROW(Partition(3, {{0, 1}}), StructuralError);          // uncovered
  EXPECT_THROW(Partition(3, {{0, 1}, {1, 2}}), StructuralError);  // overlap
  EXPECT_THROW(Partition(3, {{0, 1, 2}, {}}), StructuralError);   // empty block
  EXPECT_THROW(Partition(2, {{0, 5}}), StructuralError);          // range
  const Partition p(4, {{3, 0}, {1, 2}});
  EXPECT_EQ(p.block_of(0), 0u);
  EXPECT_EQ(p.block_of(2), 1u);
  EXPECT_EQ(Partition::singletons(3).size(), 3u);
}

TEST(TwinClasses, Examples) {
  const auto hs = twin_classes(gen_hyperstar(4, 3));
  EXPECT_EQ(hs.blocks(),
            (std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(twin_classes(Hypergraph(5, {})).size(), 1u);
  EXPECT_EQ(twin_classes(oracle::worked_example()).size(), 5u);
}

TEST(TwinClasses, RefineCanonicalPartitions) {
  for (const auto& c : oracle::family_suite()) {
    const auto canon = canonical_partition(c.h);
    ASSERT_TRUE(canon);
    const auto twins = twin_classes(c.h);
    for (const auto& block : twins.blocks())
      for (Vertex v : block)
        EXPECT_EQ(canon->block_of(v), canon->block_of(block.front()));
  }
}

TEST(TwinClasses, EigenprojectorsCommuteWithTwinSwaps) {
  std::vector<Hypergraph> cases{gen_hyperstar(4, 3), gen_sunflower(4),
                                gen_double_hyperstar(3, 2, 4)};
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t)
    cases.push_back(oracle::random_hypergraph(rng, 3 + rng() % 7, rng() % 5, 4));
  for (const auto& h : cases) {
    const auto s = seidel_matrix(h);
    const auto d = eigen_symmetric(s);
    const std::size_t n = h.order();
    const auto groups = group_indices(d.values, kDefaultGroupTol);
    const auto twins = twin_classes(h);
    for (const auto& block : twins.blocks())
      for (std::size_t b = 1; b < block.size(); ++b) {
        const Vertex u = block[0], v = block[b];
        for (std::size_t g = 0; g < groups.size(); ++g) {
          // P E P^T == E  for the transposition P = (u v)
          RealMatrix e(n, n);
          for (std::size_t c : groups[g])
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j)
                e(i, j) += d.vectors(i, c) * d.vectors(j, c);
          auto swap = [&](std::size_t i) { return i == u ? v : (i == v ? u : i); };
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              ASSERT_NEAR(e(swap(i), swap(j)), e(i, j), 1e-8);
        }
      }
  }
}

TEST(Quotient, HyperstarTwoBlockFormula) {
  for (long n = 3; n <= 8; ++n)
    for (long k = 2; k <= 6; ++k) {
      const auto q = quotient_matrix(seidel_matrix(gen_hyperstar(n, k)),
                                     hyperstar_partition(n, k));
      ASSERT_TRUE(q.equitable);
      EXPECT_EQ(q.integer_q(0, 0), 0);
      EXPECT_EQ(q.integer_q(0, 1), -(n - 1) * (k - 1));
      EXPECT_EQ(q.integer_q(1, 0), -1);
      EXPECT_EQ(q.integer_q(1, 1), (n - 2) * (k - 1) - (k - 2));
      const auto cp = characteristic_polynomial(q.integer_q);
      const auto [b, c0] = hyperstar_seidel_quadratic(n, k);
      EXPECT_EQ(cp, Polynomial({-c0, -b, BigInt(1)}));
    }
}

TEST(Quotient, SingletonsGiveMatrixItself) {
  const auto s = seidel_matrix(oracle::worked_example());
  const auto q = quotient_matrix(s, Partition::singletons(5));
  EXPECT_TRUE(q.equitable);
  EXPECT_EQ(q.integer_q, s.matrix());
}

TEST(Quotient, SunflowerMatchesPrintedMatrix) {
  for (long k = 2; k <= 8; ++k) {
    const auto q = quotient_matrix(seidel_matrix(gen_sunflower(k)),
                                   sunflower_partition(k));
    ASSERT_TRUE(q.equitable);
    EXPECT_EQ(q.integer_q, sunflower_printed_quotient(k)) << "k=" << k;
  }
}

TEST(Quotient, NonEquitableWitnessAndAverages) {
  const auto s = seidel_matrix(oracle::worked_example());
  const auto q = quotient_matrix(s, Partition(5, {{0}, {1, 2, 3, 4}}));
  EXPECT_FALSE(q.equitable);
  ASSERT_TRUE(q.witness);
  EXPECT_NE(q.witness->sum_a, q.witness->sum_b);
  EXPECT_EQ(q.witness->block_i, 1u);
  // q_10 = average of column-0 entries over rows 1..4 = (-3 - 1 - 1 + 1) / 4
  EXPECT_DOUBLE_EQ(q.q(1, 0), -1.0);
  EXPECT_THROW(quotient_eigenvalues(q), std::invalid_argument);
  EXPECT_THROW(quotient_matrix(s, Partition::singletons(4)), StructuralError);
}

TEST(Quotient, CanonicalPartitionsEquitableAndContained) {
  for (const auto& c : oracle::family_suite()) {
    const auto p = canonical_partition(c.h);
    ASSERT_TRUE(p);
    for (const auto& m : {adjacency_matrix(c.h), seidel_matrix(c.h)}) {
      const auto q = quotient_matrix(m, *p);
      ASSERT_TRUE(q.equitable) << c.name;
      const auto values = oracle::eigenvalues(m);
      EXPECT_TRUE(spectrum_containment(q, values, 1e-8)) << c.name;
      EXPECT_TRUE(spectrum_containment(q.q, values, 1e-8)) << c.name;
    }
  }
}

TEST(Quotient, TwinPartitionAlwaysEquitable) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 60; ++t) {
    const auto h = oracle::random_hypergraph(rng, 2 + rng() % 9, rng() % 6, 5);
    const auto p = twin_classes(h);
    for (const auto& m : {adjacency_matrix(h), seidel_matrix(h)}) {
      const auto q = quotient_matrix(m, p);
      ASSERT_TRUE(q.equitable);
      EXPECT_TRUE(spectrum_containment(q, eigenvalues(m), 1e-8));
    }
  }
}

TEST(SpectrumContainment, Examples) {
  const auto s = seidel_matrix(gen_hyperstar(4, 3));
  const auto q = quotient_matrix(s, hyperstar_partition(4, 3));
  const auto qv = quotient_eigenvalues(q);
  EXPECT_NEAR(qv[0], (3 + std::sqrt(33.0)) / 2, 1e-12);
  EXPECT_NEAR(qv[1], (3 - std::sqrt(33.0)) / 2, 1e-12);
  EXPECT_TRUE(spectrum_containment(q.q, s, 1e-8));
  EXPECT_TRUE(spectrum_containment(s.to_real(), s, 1e-8));
}

TEST(SpectrumContainment, CorruptedQuotientFails) {
  for (const auto& h : {gen_hyperstar(4, 3), gen_sunflower(4),
                        gen_double_hyperstar(3, 2, 4)}) {
    const auto s = seidel_matrix(h);
    auto q = quotient_matrix(s, *canonical_partition(h)).q;
    q(0, 0) += 1.0;
    EXPECT_FALSE(spectrum_containment(q, oracle::eigenvalues(s), 1e-8));
  }
}

TEST(SpectrumContainment, RespectsMultiplicity) {
  RealMatrix q(2, 2);
  q(0, 0) = q(1, 1) = 3.0;
  EXPECT_FALSE(spectrum_containment(q, std::vector<double>{3.0, 1.0}, 1e-8));
  EXPECT_TRUE(spectrum_containment(q, std::vector<double>{3.0, 1.0, 3.0}, 1e-8));
}

TEST(SamplePoints, DeterministicAndInRange) {
  const auto a = sample_points(42, 20, -10, 10);
  EXPECT_EQ(a, sample_points(42, 20, -10, 10));
  EXPECT_NE(a, sample_points(43, 20, -10, 10));
  for (double x : a) {
    EXPECT_GE(x, -10.0);
    EXPECT_LT(x, 10.0);
  }
}

TEST(CharPolyIdentity, CompleteUniformFixedPoints) {
  const auto r = verify_char_poly_identity(gen_complete_uniform(4, 3), {0.5, 2.0, 5.0});
  EXPECT_EQ(r.points_used(), 3u);
  EXPECT_LT(r.max_rel_error, 1e-7);
}

TEST(CharPolyIdentity, SingleVertex) {
  const auto r = verify_char_poly_identity(Hypergraph(1, {}), {-3.0, 0.25, 7.0});
  ASSERT_EQ(r.points.size(), 3u);
  for (const auto& p : r.points) {
    EXPECT_NEAR(p.lhs, p.lambda, 1e-12);
    EXPECT_NEAR(p.rhs, p.lambda, 1e-12);
  }
}

TEST(CharPolyIdentity, RandomPointsOnFamilies) {
  const auto pts = sample_points(2024, 20, -10, 10);
  for (const auto& h : {gen_hyperstar(4, 3), gen_sunflower(3)})
    EXPECT_LT(verify_char_poly_identity(h, pts).max_rel_error, 1e-6);
}

TEST(CharPolyIdentity, SkipsPoles) {
  // λ = -1 and the pole λ = -1 - 2·6 of the Perron term are excluded.
  const auto r = verify_char_poly_identity(gen_complete_uniform(4, 3),
                                           {-1.0, -13.0, -13.0 + 1e-9, 1.0});
  EXPECT_EQ(r.points_used(), 1u);
  EXPECT_EQ(r.skipped.size(), 3u);
}

TEST(CharPolyIdentity, WorkedExampleAndRandomHypergraphs) {
  const auto pts = sample_points(5, 20, -10, 10);
  EXPECT_LT(verify_char_poly_identity(oracle::worked_example(), pts).max_rel_error, 1e-6);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const auto h = oracle::random_hypergraph(rng, 1 + rng() % 10, rng() % 7, 5);
    EXPECT_LT(verify_char_poly_identity(h, pts).max_rel_error, 1e-6);
  }
}

TEST(RegularIdentity, CompleteUniform) {
  const auto r = verify_regular_identity(gen_complete_uniform(4, 3), 4, 3, 3, {0.0, 1.0, 4.0});
  EXPECT_LT(r.max_rel_error, 1e-8);
  const auto h5 = gen_complete_uniform(5, 3);
  EXPECT_LT(verify_regular_identity(h5, 5, 3, 6, sample_points(3, 20, -10, 10)).max_rel_error,
            1e-7);
}

TEST(RegularIdentity, SeidelPerronPointBothSidesVanish) {
  // n - 1 - 2r(k-1) = 3 - 12 = -9 for K_4^3
  const auto r = verify_regular_identity(gen_complete_uniform(4, 3), 4, 3, 3, {-9.0});
  ASSERT_EQ(r.points.size(), 1u);
  const double scale = std::pow(9.0 + 9.0, 4);
  EXPECT_LT(std::abs(r.points[0].lhs), 1e-10 * scale);
  EXPECT_LT(std::abs(r.points[0].rhs), 1e-10 * scale);
}

TEST(RegularIdentity, RejectsNonRegular) {
  EXPECT_THROW(verify_regular_identity(gen_hyperstar(4, 3), 7, 3, 1, {1.0}),
               std::invalid_argument);
  EXPECT_THROW(verify_regular_identity(gen_complete_uniform(4, 3), 4, 3, 2, {1.0}),
               std::invalid_argument);
}

TEST(MultiplicityTransfer, Hyperstar) {
  const auto r = verify_multiplicity_transfer(gen_hyperstar(4, 3));
  EXPECT_EQ(r.violations, 0u);
  ASSERT_EQ(r.triples.size(), 2u);
  // groups are descending: λ0 = 1 (m=2), then λ0 = -1 (m=3)
  EXPECT_NEAR(r.triples[0].lambda0, 1.0, 1e-10);
  EXPECT_EQ(r.triples[0].m_p, 2u);
  EXPECT_EQ(r.triples[0].m_q, 2u);
  EXPECT_NEAR(r.triples[1].lambda0, -1.0, 1e-10);
  EXPECT_EQ(r.triples[1].m_p, 3u);
  EXPECT_EQ(r.triples[1].m_q, 3u);
}

TEST(MultiplicityTransfer, EdgelessAndSunflower) {
  const auto e = verify_multiplicity_transfer(Hypergraph(6, {}));
  ASSERT_EQ(e.triples.size(), 1u);
  EXPECT_EQ(e.triples[0].m_p, 6u);
  EXPECT_EQ(e.triples[0].m_q, 5u);
  EXPECT_TRUE(e.triples[0].ok);
  const auto s = verify_multiplicity_transfer(gen_sunflower(4));
  bool found = false;
  for (const auto& t : s.triples)
    if (std::abs(t.lambda0 + 1.0) < 1e-9) {
      found = true;
      EXPECT_EQ(t.m_p, 6u);
      EXPECT_EQ(t.m_q, 6u);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(s.violations, 0u);
}

TEST(MultiplicityTransfer, NoViolationsOnSuiteAndRandom) {
  for (const auto& c : oracle::family_suite())
    EXPECT_EQ(verify_multiplicity_transfer(c.h, 1e-7).violations, 0u) << c.name;
  std::mt19937_64 rng(19);
  for (int t = 0; t < 50; ++t) {
    const auto h = oracle::random_hypergraph(rng, 1 + rng() % 10, rng() % 6, 4);
    EXPECT_EQ(verify_multiplicity_transfer(h, 1e-7).violations, 0u);
  }
}
