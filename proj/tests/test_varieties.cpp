#include <gtest/gtest.h>

#include <set>

#include "jordanet/chow.hpp"
#include "jordanet/varieties.hpp"
#include "support.hpp"

namespace jordanet {
namespace {

using namespace testing;

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Rational orthogonal matrix (I - A)(I + A)^-1 from a random skew A.
QMatrix random_orthogonal(std::size_t n, Rng& rng) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = rng.uniform(-3, 3);
      a(j, i) = -a(i, j);
    }
  }
  const auto i = QMatrix::identity(n);
  return (i - a) * *inverse(i + a);
}

QMatrix conj(const QMatrix& q, const QMatrix& d) { return q * d * q.transpose(); }

TEST(Macaulay, SmallSystems) {
  const std::vector<std::string> xy{"x", "y"};
  EXPECT_EQ(macaulay_emptiness({P("x^2"), P("y^2")}, xy, 3).kind, CertificateKind::CertifiedEmpty);
  const auto c2 = macaulay_emptiness({P("x^2"), P("y^2")}, xy, 2);
  EXPECT_EQ(c2.kind, CertificateKind::Unknown);
  EXPECT_EQ(c2.rank, 2u);
  EXPECT_EQ(c2.columns, 3u);
  const auto s = macaulay_emptiness({P("x*y")}, xy, 2);
  EXPECT_EQ(s.kind, CertificateKind::SolutionsExist);
  try {
    macaulay_emptiness({P("x^2+y")}, xy, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomogeneous);
  }
}

TEST(Macaulay, CertificatesAreSound) {
  Rng rng(31);
  int certified = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MPoly> polys;
    for (int k = 0; k < 3; ++k) {
      MPoly f;
      for (const auto& e : monomials_of_degree(3, 2)) {
        f += Rational(rng.uniform(-2, 2)) * MPoly::parse(monomial_to_string({"a", "b", "c"}, e));
      }
      polys.push_back(f);
    }
    const auto cert = macaulay_sweep(polys, {"a", "b", "c"});
    if (cert.kind != CertificateKind::CertifiedEmpty) continue;
    ++certified;
    for (int s = 0; s < 500; ++s) {
      std::map<std::string, Rational> pt{{"a", rng.uniform(-9, 9)}, {"b", rng.uniform(-9, 9)}, {"c", rng.uniform(-9, 9)}};
      if (pt["a"] == 0 && pt["b"] == 0 && pt["c"] == 0) continue;
      bool all = true;
      for (const auto& p : polys) all = all && p.evaluate(pt) == 0;
      EXPECT_FALSE(all);
    }
  }
  EXPECT_GT(certified, 0);
}

TEST(RankOne, System) {
  const auto d = MatSpace::make(2, {sym_unit(2, 0, 0), sym_unit(2, 1, 1)});
  const auto sys = rank_one_system(d);
  ASSERT_EQ(sys.size(), 1u);
  EXPECT_EQ(sys[0], P("t1*t2"));
  const auto lstar = rank_one_system(cat("prop54/Lstar"));
  std::set<std::string> forms;
  for (const auto& p : lstar) forms.insert(normalize_associate(p).to_string());
  EXPECT_TRUE(forms.count(normalize_associate(P("-t1*(t1+t2)")).to_string()));
  EXPECT_TRUE(forms.count(normalize_associate(P("-t1^2")).to_string()));
  const auto scalar = rank_one_system(MatSpace::make(2, {QMatrix::identity(2)}));
  ASSERT_EQ(scalar.size(), 1u);
  EXPECT_EQ(scalar[0], P("t1^2"));
}

TEST(RankOne, PencilCounts) {
  EXPECT_EQ(rank_one_pencil(MatSpace::make(3, {sym_unit(3, 0, 0), sym_unit(3, 1, 1)})).count, 2u);
  EXPECT_EQ(rank_one_pencil(MatSpace::make(3, {sym_unit(3, 0, 0), sym_unit(3, 0, 2)})).count, 1u);
  EXPECT_EQ(rank_one_pencil(MatSpace::make(3, {sym_unit(3, 0, 1), sym_unit(3, 0, 2)})).count, 0u);
  EXPECT_FALSE(rank_one_pencil(MatSpace::make(3, {sym_unit(3, 0, 0), sym_unit(3, 1, 1)})).all);
  const auto ones = MatSpace::make(3, {sym_unit(3, 0, 0), sym_unit(3, 0, 1) + sym_unit(3, 0, 0) + sym_unit(3, 1, 1)});
  EXPECT_EQ(rank_one_pencil(ones).count, 2u);
}

TEST(RankOne, GcdOfIdenticalMinors) {
  const auto l = MatSpace::make(2, {sym_unit(2, 0, 0), sym_unit(2, 0, 1)});
  EXPECT_EQ(rank_one_gcd(l), P("t2^2"));
  EXPECT_EQ(rank_one_pencil(l).count, 1u);
}

// Brute force over small-height projective points (a : b).
std::size_t brute_force_rank_one(const MatSpace& l) {
  std::set<std::pair<Rational, Rational>> seen;
  for (int a = -8; a <= 8; ++a) {
    for (int b = -8; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      Rational x = a, y = b;
      if (x != 0) {
        y /= x;
        x = 1;
      } else {
        y = 1;
      }
      if (rank(l.element({x, y})) <= 1) seen.insert({x, y});
    }
  }
  return seen.size();
}

TEST(RankOne, PencilAgreesWithBruteForce) {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3;
    std::vector<QMatrix> gens;
    const int k = trial % 3;
    for (int i = 0; i < k; ++i) {
      QMatrix v = random_matrix(rng, n, 1, 2);
      gens.push_back(v * v.transpose());
    }
    while (gens.size() < 2) {
      QMatrix x = random_matrix(rng, n, n, 2);
      gens.push_back(x + x.transpose());
    }
    const auto l = MatSpace::span(n, gens);
    if (l.dim() != 2) continue;
    const auto got = rank_one_pencil(l);
    ASSERT_FALSE(got.all);
    EXPECT_GE(got.count, brute_force_rank_one(l));
    // All rank-one points here are rational, by construction or absence.
    EXPECT_EQ(got.count, brute_force_rank_one(l)) << trial;
    // The gcd is squarefree exactly when its discriminant does not vanish.
    const MPoly g = rank_one_gcd(l);
    if (g.total_degree() == 2) {
      const auto a = g.coefficient({{"t1", 2}});
      const auto b = g.coefficient({{"t1", 1}, {"t2", 1}});
      const auto c = g.coefficient({{"t2", 2}});
      EXPECT_EQ(got.count, b * b - 4 * a * c != 0 ? 2u : 1u);
    }
  }
}

TEST(Catalogs, PencilCubics) {
  EXPECT_TRUE(all_zero(catalog_eval("pencil_cubics", diag({2, -1, -1}))));
  EXPECT_FALSE(all_zero(catalog_eval("pencil_cubics", diag({1, 0, -1}))));
  try {
    catalog_eval("pencil_cubics", diag({1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConventionMismatch);
  }
  Rng rng(34);
  for (int k = 0; k < 50; ++k) {
    const auto q = random_orthogonal(3, rng);
    const Rational a = rng.uniform(-5, 5);
    const Rational b = a + 1 + rng.uniform(0, 4);
    const auto x = conj(q, diag({a, b, b}));
    const auto l = MatSpace::make(3, {x, QMatrix::identity(3)});
    EXPECT_TRUE(all_zero(catalog_eval("pencil_cubics", l)));
  }
}

TEST(Catalogs, NetQuadrics) {
  Rng rng(35);
  for (int k = 0; k < 50; ++k) {
    const auto q = random_orthogonal(3, rng);
    std::vector<QMatrix> b;
    for (std::size_t i = 0; i < 3; ++i) {
      QVector d(3, 0);
      d[i] = 1;
      b.push_back(conj(q, diag(d)));
    }
    EXPECT_TRUE(all_zero(catalog_eval("net_quadrics", MatSpace::make(3, b))));
  }
  int nonzero = 0;
  for (int k = 0; k < 50; ++k) {
    QMatrix x = random_matrix(rng, 3, 3, 3);
    QMatrix y = random_matrix(rng, 3, 3, 3);
    const auto l = MatSpace::span(3, {QMatrix::identity(3), x + x.transpose(), y + y.transpose()});
    if (l.dim() != 3) continue;
    nonzero += !all_zero(catalog_eval("net_quadrics", l));
  }
  EXPECT_GT(nonzero, 40);
}

TEST(Catalogs, PluckerSeparations) {
  Rng rng(36);
  const auto vanishes_on = [&](const std::string& poly, const std::string& space) {
    for (int k = 0; k < 10; ++k) {
      if (!all_zero(catalog_eval(poly, sample_congruent(cat(space), rng)))) return false;
    }
    return true;
  };
  for (const char* id : {"1b", "2b", "3b1", "3b2"}) EXPECT_TRUE(vanishes_on("plucker_L2_orbit", std::string("thm51/") + id)) << id;
  for (const char* id : {"1a", "2a1", "2a2", "3a"}) EXPECT_FALSE(vanishes_on("plucker_L2_orbit", std::string("thm51/") + id)) << id;
  EXPECT_TRUE(vanishes_on("plucker_L2_orbit", "ex68/L3"));
  EXPECT_TRUE(vanishes_on("plucker_L1_orbit", "ex68/L1"));
  EXPECT_TRUE(vanishes_on("plucker_2a1_3b1", "thm51/2a1"));
  EXPECT_FALSE(vanishes_on("plucker_2a1_3b1", "thm51/3b1"));
  EXPECT_TRUE(vanishes_on("plucker_L3_orbit", "ex68/L3"));
}

TEST(MinRank, Prop54Net) {
  const auto b = min_rank_bounds(cat("prop54/Lstar"), 50);
  EXPECT_EQ(b.upper, 2u);
  EXPECT_EQ(b.lower, 2u);
  EXPECT_EQ(b.certificate.kind, CertificateKind::CertifiedEmpty);
  EXPECT_LE(b.certificate.degree, 6u);
  EXPECT_EQ(rank(b.upper_witness), 2u);
}

TEST(MinRank, OtherSpaces) {
  const auto a = min_rank_bounds(cat("thm53/1a_221"), 10);
  EXPECT_EQ(a.upper, 1u);
  EXPECT_TRUE(a.exact());
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto s = min_rank_bounds(MatSpace::make(n, {QMatrix::identity(n)}), 5);
    EXPECT_EQ(s.upper, n);
  }
  const auto b2 = min_rank_bounds(cat("thm51/2b"), 20);
  EXPECT_EQ(b2.lower, 2u);
}

}  // namespace
}  // namespace jordanet
