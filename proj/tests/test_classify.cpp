#include <gtest/gtest.h>

#include <set>

#include "jordanet/classify.hpp"
#include "support.hpp"

namespace jordanet {
namespace {

using namespace testing;

TEST(Partition, GenericMultiplicities) {
  const auto& l = cat("ex68/L1");
  EXPECT_EQ(generic_multiplicity_partition(l, find_invertible(l).matrix), (std::vector<unsigned>{2, 1, 1}));
  const auto& b = cat("thm51/1b");
  EXPECT_EQ(generic_multiplicity_partition(b, find_invertible(b).matrix), (std::vector<unsigned>{2, 2}));
}

TEST(Pencil, Examples) {
  EXPECT_EQ(classify_pencil(MatSpace::make(4, {QMatrix::identity(4), diag({1, 1, -1, -1})})).label(), "V2");
  EXPECT_EQ(classify_pencil(MatSpace::make(3, {QMatrix::identity(3), diag({2, -1, -1})})).label(), "V1");
  EXPECT_EQ(classify_pencil(MatSpace::make(3, {QMatrix::identity(3), diag({1, 2, 3})})).kind,
            PencilClass::Kind::NotJordan);
  QMatrix j(2, 2);
  j(0, 1) = j(1, 0) = 1;
  EXPECT_EQ(classify_pencil(MatSpace::make(2, {j, sym_unit(2, 0, 0)})).kind, PencilClass::Kind::Nilpotent);
  try {
    classify_pencil(MatSpace::make(3, {sym_unit(3, 0, 0), sym_unit(3, 0, 1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRegular);
  }
}

TEST(Pencil, ComponentCountMatchesHalfN) {
  Rng rng(41);
  for (std::size_t n = 3; n <= 5; ++n) {
    std::set<std::string> labels;
    for (int k = 0; k < 40; ++k) {
      const std::size_t i = 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
      QVector d(n, 1);
      for (std::size_t r = 0; r < i; ++r) d[r] = -2;
      const auto l = congruence_transform(MatSpace::make(n, {QMatrix::identity(n), diag(d)}), random_invertible(n, rng));
      const auto c = classify_pencil(l);
      ASSERT_EQ(c.kind, PencilClass::Kind::Diagonalizable);
      labels.insert(c.label());
    }
    EXPECT_EQ(labels.size(), n / 2);
  }
}

TEST(Abstract, Labels) {
  const auto build = [](const std::string& id) {
    const auto& l = cat(id);
    return JordanStructure::build(l, find_invertible(l).matrix);
  };
  EXPECT_EQ(classify_abstract(build("thm51/1b")), "1b");
  EXPECT_EQ(classify_abstract(build("thm51/2b")), "2b");
  EXPECT_EQ(classify_abstract(build("thm51/3a")), "3a");
  EXPECT_EQ(classify_abstract(build("thm51/3b1")), "3b");
  EXPECT_EQ(classify_abstract(build("thm51/2a2")), "2a");
  const auto pencil = MatSpace::make(2, {QMatrix::identity(2), sym_unit(2, 0, 0)});
  EXPECT_EQ(classify_abstract(JordanStructure::build(pencil, QMatrix::identity(2))), "1");
  try {
    classify_abstract(build("intro/L1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDim);
  }
}

TEST(NetS4, TableIsVerified) { EXPECT_NO_THROW(verify_net_table()); }

TEST(NetS4, CanonicalAndCongruentNets) {
  Rng rng(42);
  for (const auto& label : kNetLabels) {
    EXPECT_EQ(classify_net_S4(cat("thm51/" + label)), label);
    for (int k = 0; k < 10; ++k) EXPECT_EQ(classify_net_S4(sample_congruent(cat("thm51/" + label), rng)), label);
  }
}

TEST(NetS4, HasseEdges) {
  for (const auto& f : degenerations()) {
    if (f.id == "hasse/2a2-3b1") continue;
    EXPECT_EQ(classify_net_S4(grassmann_limit(f.basis())), f.target) << f.id;
  }
}

// (a, d+tb, c, d) sends 2a2 to span{2ac, a^2, d^2}, which is singular; with
// c scaled by t the limit is span{2(ac+bd), a^2, d^2}.
TEST(NetS4, PrintedSubstitutionFor2a2To3b1IsSingular) {
  const auto lim = grassmann_limit(degeneration("hasse/2a2-3b1").basis());
  EXPECT_FALSE(is_regular(lim));
  const auto expected = MatSpace::make(4, {sym_unit(4, 0, 2), sym_unit(4, 0, 0), sym_unit(4, 3, 3)});
  EXPECT_TRUE(same_space(lim, expected));
  EXPECT_EQ(classify_net_S4(grassmann_limit(degeneration("hasse/2a2-3b1_repaired").basis())), "3b1");
}

TEST(NetS4, Errors) {
  try {
    classify_net_S4(cat("ex68/L3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotJordan);
  }
  // Diagonal net with all three eigenvalues separate spans the wrong row.
  const auto d = MatSpace::make(4, {diag({1, 1, 1, 0}), diag({0, 0, 0, 1}), diag({1, 0, 0, 0})});
  EXPECT_EQ(classify_net_S4(d), "1a");
}

TEST(NetS4, NonEdgeObstruction) {
  // 1a always contains rank-one matrices; the canonical 2b net does not.
  EXPECT_EQ(min_rank_bounds(cat("thm51/1a"), 10).upper, 1u);
  EXPECT_EQ(min_rank_bounds(cat("thm51/2b"), 10).lower, 2u);
}

TEST(Type1, Partitions) {
  EXPECT_EQ(classify_type1_partition(cat("thm53/1a_221")), (std::vector<unsigned>{2, 2, 1}));
  EXPECT_FALSE(classify_type1_partition(cat("thm53/1b_s6")));
  EXPECT_EQ(classify_type1_partition(cat("ex68/L1")), (std::vector<unsigned>{2, 1, 1}));
}

TEST(Copencil, Classes) {
  EXPECT_EQ(classify_copencil_S3(cat("prop47/L1")), CopencilClass::ClassL1);
  EXPECT_EQ(classify_copencil_S3(cat("prop47/L2")), CopencilClass::ClassL2);
  Rng rng(43);
  int not_jordan = 0;
  for (int k = 0; k < 10; ++k) {
    const auto l = random_space(3, 4, rng);
    not_jordan += classify_copencil_S3(l) == CopencilClass::NotJordan;
  }
  EXPECT_EQ(not_jordan, 10);
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(classify_copencil_S3(sample_congruent(cat("prop47/L1"), rng)), CopencilClass::ClassL1);
    EXPECT_EQ(classify_copencil_S3(sample_congruent(cat("prop47/L2"), rng)), CopencilClass::ClassL2);
  }
}

TEST(Ejo, Counts) {
  EXPECT_EQ(ejo_component_count(3), 1u);
  EXPECT_EQ(ejo_component_count(4), 2u);
  EXPECT_EQ(ejo_component_count(6), 4u);
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(ejo_component_count(n), ejo_series_coefficient(n)) << n;
}

}  // namespace
}  // namespace jordanet
