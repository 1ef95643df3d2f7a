#include <gtest/gtest.h>

#include "jordanet/jordan.hpp"
#include "support.hpp"

namespace jordanet {
namespace {

using namespace testing;

JordanStructure structure(const MatSpace& l) { return JordanStructure::build(l, find_invertible(l).matrix); }

JordanStructure structure(const std::string& id) { return structure(cat(id)); }

TEST(Jordan, ProductExamples) {
  const auto i2 = QMatrix::identity(2);
  const auto e11 = sym_unit(2, 0, 0);
  EXPECT_EQ(jordan_product(e11, e11, i2), e11);
  EXPECT_TRUE(jordan_product(e11, sym_unit(2, 1, 1), i2).is_zero());
  EXPECT_TRUE(jordan_product(e11, e11, sym_unit(2, 0, 1)).is_zero());
  try {
    jordan_product(e11, e11, e11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularU);
  }
}

TEST(Jordan, ProductLaws) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l = MatSpace::full(3);
    const auto u = random_invertible(3, rng);
    const auto us = u.transpose() * u;
    const auto x = l.element({rng.uniform(-3, 3), 1, 2, rng.uniform(-3, 3), 0, 1});
    const auto y = l.element({0, rng.uniform(-3, 3), 1, 1, rng.uniform(-3, 3), 2});
    const auto xy = jordan_product(x, y, us);
    EXPECT_TRUE(xy.is_symmetric());
    EXPECT_EQ(xy, jordan_product(y, x, us));
    EXPECT_EQ(jordan_product(us, x, us), x);
  }
}

TEST(Jordan, IntroExamples) {
  EXPECT_TRUE(is_jordan(cat("intro/L1"), QMatrix::identity(4)).is_jordan);
  EXPECT_TRUE(is_jordan(cat("intro/L2"), QMatrix::identity(4)).is_jordan);
  const auto flipped = is_jordan(cat("intro/L2flip"), QMatrix::identity(4));
  EXPECT_FALSE(flipped.is_jordan);
  ASSERT_TRUE(flipped.witness);
  const auto& w = *flipped.witness;
  const auto& l = cat("intro/L2flip");
  EXPECT_EQ(w.product, jordan_product(l.basis()[w.i], l.basis()[w.j], QMatrix::identity(4)));
  EXPECT_FALSE(w.residue.is_zero());
  EXPECT_FALSE(contains(l, w.product));
  EXPECT_TRUE(is_jordan(MatSpace::full(3), diag({1, -2, 3})).is_jordan);
}

TEST(Jordan, IsJordanPreconditions) {
  const auto& l = cat("intro/L1");
  try {
    is_jordan(l, QMatrix::identity(4) + sym_unit(4, 0, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UNotInSpace);
  }
  try {
    is_jordan(l, sym_unit(4, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularU);
  }
  try {
    is_jordan(MatSpace::make(2, {sym_unit(2, 0, 0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

TEST(Jordan, Closure) {
  const auto& r8 = cat("netrank8");
  EXPECT_EQ(jordan_closure(r8, find_invertible(r8).matrix).space.dim(), 10u);
  const auto& a = cat("thm51/2b");
  EXPECT_TRUE(same_space(jordan_closure(a, find_invertible(a).matrix).space, a));
  const auto d = MatSpace::make(3, {QMatrix::identity(3), diag({1, 2, 3})});
  const auto c = jordan_closure(d, QMatrix::identity(3)).space;
  EXPECT_EQ(c.dim(), 3u);
  EXPECT_TRUE(contains(c, diag({1, 4, 9})));
}

// Closure with respect to different units of L.
TEST(Jordan, ClosureAcrossUnits) {
  Rng rng(17);
  for (const char* id : {"netrank8", "ex68/L3", "intro/L2flip"}) {
    const auto& l = cat(id);
    const auto base = jordan_closure(l, find_invertible(l).matrix).space;
    for (int trial = 0; trial < 5; ++trial) {
      QVector c(l.dim());
      for (auto& x : c) x = rng.uniform(-3, 3);
      const auto u = l.element(c);
      if (det(u) == 0) continue;
      EXPECT_TRUE(same_space(jordan_closure(l, u).space, base)) << id;
    }
  }
}

TEST(Jordan, StructureConstants1b) {
  // U = 1_4, X = 1_2 (x) Diag(1,-1), Y = 1_2 (x) (E12 + E21).
  const auto u = QMatrix::identity(4);
  const auto x = diag({1, -1, 1, -1});
  const auto y = sym_unit(4, 0, 1) + sym_unit(4, 2, 3);
  const auto a = JordanStructure::build(MatSpace::make(4, {u, x, y}), u);
  EXPECT_EQ(a.constants(1, 1), (QVector{1, 0, 0}));
  EXPECT_EQ(a.constants(2, 2), (QVector{1, 0, 0}));
  EXPECT_EQ(a.constants(1, 2), (QVector{0, 0, 0}));
  EXPECT_EQ(a.unit_coords(), (QVector{1, 0, 0}));
  EXPECT_FALSE(is_associative(a));
  const auto one = JordanStructure::build(MatSpace::make(3, {QMatrix::identity(3)}), QMatrix::identity(3));
  EXPECT_EQ(one.constants(0, 0), (QVector{1}));
}

TEST(Jordan, BuildRejectsNonJordan) {
  try {
    JordanStructure::build(cat("intro/L2flip"), QMatrix::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotJordan);
  }
}

TEST(Jordan, RadicalAndAssociativity) {
  const std::map<std::string, std::tuple<std::size_t, bool, std::size_t>> expected = {
      {"1a", {0, true, 0}},  {"1b", {0, false, 0}}, {"2a1", {1, true, 0}}, {"2a2", {1, true, 0}},
      {"2b", {1, false, 0}}, {"3a", {2, true, 1}},  {"3b1", {2, true, 0}}, {"3b2", {2, true, 0}},
  };
  for (const auto& [label, want] : expected) {
    const auto a = structure("thm51/" + label);
    const auto rad = radical(a);
    EXPECT_TRUE(rad.ideal_ok && rad.nilpotent_ok);
    EXPECT_EQ(rad.basis.size(), std::get<0>(want)) << label;
    EXPECT_EQ(is_associative(a), std::get<1>(want)) << label;
    EXPECT_EQ(rad_square_dim(a, rad), std::get<2>(want)) << label;
  }
}

TEST(Jordan, RadicalOf3b1IsNilpotent) {
  const auto a = structure("thm51/3b1");
  const auto rad = radical(a);
  ASSERT_EQ(rad.basis.size(), 2u);
  for (const auto& r : rad.basis) {
    for (const auto& s : rad.basis) {
      for (const auto& v : a.multiply(r, s)) EXPECT_EQ(v, 0);
    }
    for (const auto& v : a.power(r, 3)) EXPECT_EQ(v, 0);
  }
}

TEST(Jordan, AxiomsHoldOnCatalog) {
  Rng rng(2);
  for (const auto& e : catalog_entries()) {
    if (e.kind != "space") continue;
    const auto& l = cat(e.id);
    const auto u = find_invertible(l).matrix;
    if (!is_jordan(l, u).is_jordan) continue;
    const auto a = JordanStructure::build(l, u);
    EXPECT_TRUE(verify_jordan_axioms(a, rng, 20)) << e.id;
    for (int k = 0; k < 20; ++k) {
      QVector x(a.dim());
      for (auto& v : x) v = rng.uniform(-3, 3);
      EXPECT_EQ(a.multiply(a.unit_coords(), x), x);
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(a.constants(i, j), a.constants(j, i));
    }
  }
}

TEST(Jordan, PeirceOfS3) {
  const auto a = JordanStructure::build(MatSpace::full(3), QMatrix::identity(3));
  const auto pieces = peirce(a, {sym_unit(3, 0, 0), sym_unit(3, 1, 1), sym_unit(3, 2, 2)});
  ASSERT_EQ(pieces.size(), 6u);
  for (const auto& p : pieces) {
    ASSERT_EQ(p.basis.size(), 1u);
    EXPECT_TRUE(same_space(MatSpace::make(3, p.basis), MatSpace::make(3, {sym_unit(3, p.i, p.j)})));
  }
  const auto whole = peirce(a, {QMatrix::identity(3)});
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].basis.size(), 6u);
}

TEST(Jordan, PeirceOf2a1) {
  const auto& l = cat("thm51/2a1");
  QMatrix j2(4, 4);
  j2(0, 1) = j2(1, 0) = 1;
  const auto e = diag({0, 0, 1, 1});
  const auto a = JordanStructure::build(l, j2 + e);
  const auto pieces = peirce(a, {j2, e});
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0].basis.size(), 2u);
  EXPECT_EQ(pieces[1].basis.size(), 0u);
  EXPECT_EQ(pieces[2].basis.size(), 1u);
  try {
    peirce(a, {j2, j2});
    FAIL();
  } catch (const Error& ex) {
    EXPECT_EQ(ex.code(), ErrorCode::NotOrthogonalIdempotents);
  }
}

TEST(Jordan, ReciprocalIdentity) {
  Rng rng(4);
  EXPECT_TRUE(check_reciprocal_identity(cat("intro/L1"), QMatrix::identity(4), 20, rng).holds);
  const auto bad = check_reciprocal_identity(cat("intro/L2flip"), QMatrix::identity(4), 20, rng);
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.failing_point);
  const auto inv = *inverse(*bad.failing_point);
  EXPECT_FALSE(contains(cat("intro/L2flip"), inv));
  const auto one = MatSpace::make(3, {QMatrix::identity(3)});
  EXPECT_TRUE(check_reciprocal_identity(one, QMatrix::identity(3), 5, rng).holds);
}

TEST(Jordan, ThreeJordanTestsAgreeOnCatalog) {
  Rng rng(9);
  for (const auto& e : catalog_entries()) {
    if (e.kind != "space") continue;
    for (int k = 0; k < 5; ++k) {
      const auto l = k == 0 ? cat(e.id) : sample_congruent(cat(e.id), rng);
      const auto u = find_invertible(l).matrix;
      const bool j = is_jordan(l, u).is_jordan;
      EXPECT_EQ(check_reciprocal_identity(l, u, 10, rng).holds, j) << e.id;
      EXPECT_EQ(same_space(jordan_closure(l, u).space, l), j) << e.id;
    }
  }
}

// Proper closures found from random small spaces are never too big.
TEST(Jordan, CodimensionBound) {
  Rng rng(21);
  for (std::size_t n = 3; n <= 5; ++n) {
    int proper = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<QMatrix> gens{QMatrix::identity(n)};
      QVector d(n);
      for (auto& v : d) v = rng.uniform(0, 1);
      gens.push_back(diag(d));
      if (trial % 2 == 0) {
        QMatrix x = random_matrix(rng, n, 1, 1);
        gens.push_back(x * x.transpose());
      }
      const auto l = congruence_transform(MatSpace::span(n, gens), random_invertible(n, rng, 2));
      const auto c = jordan_closure(l, find_invertible(l).matrix).space;
      if (c.dim() < sym_dim(n)) {
        ++proper;
        EXPECT_GE(sym_dim(n) - c.dim(), n - 1);
      }
    }
    EXPECT_GT(proper, 0);
  }
}

}  // namespace
}  // namespace jordanet
