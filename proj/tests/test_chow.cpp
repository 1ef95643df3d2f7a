#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "jordanet/chow.hpp"
#include "jordanet/jordan.hpp"
#include "support.hpp"

namespace jordanet {
namespace {

using namespace testing;

TEST(Chow, SymbolicEntriesN3) {
  const auto c = chow_matrix({generic_symmetric(3, "x"), generic_symmetric(3, "y"), generic_symmetric(3, "z")},
                             {"x", "y", "z"});
  ASSERT_EQ(c.values.rows(), 6u);
  ASSERT_EQ(c.values.cols(), 6u);
  std::vector<std::string> cols;
  for (const auto& e : c.columns) cols.push_back(monomial_to_string(c.vars, e));
  EXPECT_EQ(cols, (std::vector<std::string>{"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
  EXPECT_EQ(c.values(0, 0), P("x22*x33-x23^2"));
  EXPECT_EQ(c.values(1, 0), P("x13*x23-x12*x33"));
}

TEST(Chow, ScalarNet) {
  const auto c = chow_matrix(MatSpace::make(2, {QMatrix::identity(2)}));
  ASSERT_EQ(c.values.rows(), 3u);
  ASSERT_EQ(c.values.cols(), 1u);
  EXPECT_EQ(c.values(0, 0), 1);
  EXPECT_EQ(c.values(1, 0), 0);
  EXPECT_EQ(c.values(2, 0), 1);
}

TEST(Chow, NetRank8) {
  const auto& l = cat("netrank8");
  EXPECT_EQ(chow_rank(l), 8u);
  const auto forms = chow_kernel_forms(l);
  ASSERT_EQ(forms.size(), 2u);
  EXPECT_EQ(forms[0], P("2*z12-z13-z24"));
  EXPECT_EQ(forms[1], P("z14-z23-z33+z44"));
  EXPECT_EQ(sampled_reciprocal_span(l, 40), 8u);
}

TEST(Chow, Example68) {
  EXPECT_EQ(chow_rank(cat("ex68/L2")), 3u);
  EXPECT_EQ(chow_rank(cat("ex68/L3")), 10u);
  EXPECT_TRUE(chow_kernel_forms(cat("ex68/L3")).empty());
  EXPECT_EQ(sampled_reciprocal_span(cat("ex68/L3"), 30), 10u);
  EXPECT_TRUE(chow_minors_vanish(cat("ex68/L1"), 3));
  EXPECT_FALSE(chow_minors_vanish(cat("ex68/L3"), 3));
  EXPECT_EQ(chow_rank(cat("intro/L2")), 4u);
  EXPECT_TRUE(chow_minors_vanish(cat("intro/L2"), 4));
}

TEST(Chow, FullS2HasNoKernel) {
  const auto l = MatSpace::make(2, {QMatrix::identity(2), sym_unit(2, 0, 0), sym_unit(2, 0, 1)});
  EXPECT_TRUE(chow_kernel_forms(l).empty());
}

TEST(Chow, RejectsSingularSpaces) {
  try {
    chow_rank(MatSpace::make(2, {sym_unit(2, 0, 0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

// The kernel forms vanish on adjugates of sample points.
TEST(Chow, KernelFormsVanishOnInverses) {
  const auto& l = cat("netrank8");
  const auto forms = chow_kernel_forms(l);
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const auto m = l.element({rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)});
    const auto adj = adjugate(m);
    std::map<std::string, Rational> a;
    for (const auto& [i, j] : sym_pairs(4)) a["z" + std::to_string(i + 1) + std::to_string(j + 1)] = adj(i, j);
    for (const auto& f : forms) EXPECT_EQ(f.evaluate(a), 0);
  }
}

TEST(Chow, RankMatchesSampledSpan) {
  Rng rng(8);
  for (const auto& e : catalog_entries()) {
    if (e.kind != "space") continue;
    const auto& l = cat(e.id);
    EXPECT_EQ(chow_rank(l), sampled_reciprocal_span(l, static_cast<int>(3 * sym_dim(l.n())))) << e.id;
  }
  for (std::size_t n = 3; n <= 4; ++n) {
    for (int k = 0; k < 10; ++k) {
      const auto l = random_space(n, 3, rng);
      if (!is_regular(l)) continue;
      EXPECT_EQ(chow_rank(l), sampled_reciprocal_span(l, static_cast<int>(3 * sym_dim(n)), k));
    }
  }
}

TEST(Chow, RankIsCongruenceInvariant) {
  Rng rng(12);
  for (const char* id : {"netrank8", "ex68/L3", "thm51/2b"}) {
    for (int k = 0; k < 3; ++k) EXPECT_EQ(chow_rank(sample_congruent(cat(id), rng)), chow_rank(cat(id))) << id;
  }
}

TEST(Chow, RankThreeExactlyForJordanNets) {
  Rng rng(13);
  for (const auto& e : catalog_entries()) {
    if (e.kind != "space" || cat(e.id).dim() != 3) continue;
    for (int k = 0; k < 3; ++k) {
      const auto l = k == 0 ? cat(e.id) : sample_congruent(cat(e.id), rng);
      EXPECT_EQ(chow_rank(l) == 3, is_jordan(l).is_jordan) << e.id;
    }
  }
}

// An element of rank <= n - 2 makes the Chow matrix singular; when the
// Chow matrix is invertible no sampled element has such low rank.
TEST(Chow, LowRankElementsAndInvertibility) {
  Rng rng(14);
  for (int k = 0; k < 10; ++k) {
    std::vector<QMatrix> b;
    QMatrix v = random_matrix(rng, 4, 2, 2);
    b.push_back(v * v.transpose());
    for (int i = 0; i < 2; ++i) {
      QMatrix x = random_matrix(rng, 4, 4, 2);
      b.push_back(x + x.transpose());
    }
    const auto l = MatSpace::span(4, b);
    if (l.dim() != 3 || !is_regular(l)) continue;
    EXPECT_LT(rank(chow_matrix(l).values), 10u);
  }
  const auto& l3 = cat("ex68/L3");
  for (int k = 0; k < 1000; ++k) {
    const auto m = l3.element({rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6)});
    if (m.is_zero()) continue;
    EXPECT_GT(rank(m), 2u);
  }
}

TEST(Chow, GenericDeterminantN3) {
  const MPoly d = chow_det_generic_n3();
  EXPECT_EQ(d.total_degree(), 12);
  EXPECT_EQ(d.term_count(), 22659u);
  const auto diagonal = MatSpace::make(3, {sym_unit(3, 0, 0), sym_unit(3, 1, 1), sym_unit(3, 2, 2)});
  EXPECT_EQ(evaluate_generic_n3(d, diagonal), 0);
  const auto offdiag = MatSpace::make(3, {sym_unit(3, 0, 1), sym_unit(3, 0, 2), sym_unit(3, 1, 2)});
  EXPECT_NE(evaluate_generic_n3(d, offdiag), 0);
  Rng rng(15);
  for (int k = 0; k < 5; ++k) {
    const auto l = random_space(3, 3, rng);
    EXPECT_EQ(evaluate_generic_n3(d, l), det(chow_matrix(l, {"x", "y", "z"}).values));
  }
}

}  // namespace
}  // namespace jordanet

namespace jordanet {
namespace {

TEST(Chow, GenericDeterminantCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "jordanet_chow_cache_test";
  std::filesystem::remove_all(dir);
  const char* old = std::getenv("JORDANET_CACHE_DIR");
  const std::string saved = old ? old : "";
  setenv("JORDANET_CACHE_DIR", dir.c_str(), 1);
  const MPoly first = chow_det_generic_n3();
  ASSERT_FALSE(std::filesystem::is_empty(dir));
  EXPECT_EQ(chow_det_generic_n3(), first);
  if (old) {
    setenv("JORDANET_CACHE_DIR", saved.c_str(), 1);
  } else {
    unsetenv("JORDANET_CACHE_DIR");
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace jordanet
