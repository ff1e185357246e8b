#include "fano/sod.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fano;

namespace {

// Independent membership test: v lies in the complement iff chi(c, v) = 0
// for each generator, computed straight from the Euler form.
bool orthogonal_to_all(const std::vector<KClass>& gens, const KClass& v) {
  for (const auto& c : gens)
    if (euler_rational(c.ch(), v.ch()) != 0) return false;
  return true;
}

}  // namespace

TEST(Exceptional, LineBundleCollections) {
  for (const auto& f : all_descriptors()) {
    auto rep = check_exceptional(standard_collection(f));
    EXPECT_TRUE(rep.numerically_exceptional()) << f.name();
    for (const auto& s : rep.self_chis) EXPECT_EQ(s, 1);
  }
}

TEST(Exceptional, ReportsOffendingPairs) {
  auto x = validate(1, 22);
  auto rep = check_exceptional({structure_sheaf(x, Cycle::X), structure_sheaf(x, Cycle::P)});
  EXPECT_FALSE(rep.numerically_exceptional());
  // chi(O_P, O_P) = 0 and chi(O_P, O_X) = -1
  ASSERT_EQ(rep.offending_pairs.size(), 2u);
  EXPECT_EQ(rep.offending_pairs[0], (EulerViolation{1, 1, 0}));
  EXPECT_EQ(rep.offending_pairs[1], (EulerViolation{1, 0, -1}));

  // wrong order of a line-bundle pair
  auto y = validate(2, 3);
  auto bad = check_exceptional({line_bundle(y, 1), line_bundle(y, 0)});
  ASSERT_EQ(bad.offending_pairs.size(), 1u);
  EXPECT_EQ(bad.offending_pairs[0].l, 1u);
  EXPECT_EQ(bad.offending_pairs[0].k, 0u);
}

TEST(Exceptional, MixedParentsRejected) {
  EXPECT_THROW(check_exceptional({line_bundle(validate(2, 1), 0), line_bundle(validate(2, 2), 0)}), ParentMismatch);
  EXPECT_THROW(check_exceptional({}), ValidationError);
}

TEST(Exceptional, MukaiPairOnEvenGenus) {
  for (int g : {4, 6, 8, 10, 12}) {
    auto x = validate_genus(g);
    auto e = rank_two_mukai_ch(x);
    auto o = structure_sheaf(x, Cycle::X);
    EXPECT_EQ(euler(e, e), 1);
    EXPECT_EQ(euler(o, e), 0);
    EXPECT_EQ(chi0(e.ch()), 0);
  }
}

TEST(Complement, RankIsFourMinusLength) {
  for (const auto& f : all_descriptors()) {
    auto coll = standard_collection(f);
    auto comp = right_orthogonal(coll);
    EXPECT_EQ(comp.basis.size(), 4 - coll.size()) << f.name();
    for (const auto& b : comp.basis) EXPECT_TRUE(orthogonal_to_all(coll, b));
    for (const auto& v : smith_invariants(comp.coordinates)) EXPECT_EQ(v, 1);
  }
}

TEST(Complement, Examples) {
  // P^3: complement of the full collection is zero
  EXPECT_TRUE(right_orthogonal(standard_collection(validate(4, 1))).basis.empty());
  // Y_5 and X_22: rank 2 with the documented Grams
  auto y5 = right_orthogonal(standard_collection(validate(2, 5)));
  EXPECT_EQ(y5.basis.size(), 2u);
  EXPECT_TRUE(same_span(y5.basis, index_two_complement_generators(validate(2, 5))));
  auto x22 = right_orthogonal(standard_collection(validate(1, 22)));
  EXPECT_EQ(x22.basis.size(), 2u);
  EXPECT_TRUE(same_span(x22.basis, index_one_complement_generators(validate(1, 22))));
  // odd genus: only O_X removed
  EXPECT_EQ(right_orthogonal(standard_collection(validate_genus(7))).basis.size(), 3u);
}

TEST(Complement, MatchesBruteForceBox) {
  for (const auto& f : {validate(2, 1), validate(2, 4), validate(1, 10), validate(1, 22), validate(3, 2)}) {
    auto coll = standard_collection(f);
    auto comp = right_orthogonal(coll);
    // functionals v -> chi(c, v) on lattice coordinates, scaled to integers
    std::vector<std::vector<std::int64_t>> rows;
    const auto sheaves = structure_sheaf_basis(f);
    for (const auto& c : coll) {
      std::vector<Rational> r;
      Integer den = 1;
      for (const auto& s : sheaves) {
        r.push_back(euler_rational(c.ch(), s.ch()));
        den = lcm(den, denominator(r.back()));
      }
      rows.emplace_back();
      for (const auto& q : r) rows.back().push_back(to_integer(q * den).convert_to<std::int64_t>());
    }
    std::size_t members = 0;
    for (const auto& v : oracle::kernel_vectors(rows, 4, 20)) {
      std::vector<Integer> w(v.begin(), v.end());
      EXPECT_TRUE(row_span_contains(comp.coordinates, w));
      ++members;
    }
    EXPECT_GT(members, 1u);
  }
}

TEST(Complement, WorksWithNonLatticeGenerators) {
  // odd genus: the formal E_2 class still gives a rank-2 orthogonal
  auto x = validate_genus(7);
  auto comp = right_orthogonal({rank_two_mukai_ch(x), structure_sheaf(x, Cycle::X)});
  EXPECT_EQ(comp.basis.size(), 2u);
  for (const auto& b : comp.basis) EXPECT_EQ(euler_rational(rank_two_mukai_ch(x).ch(), b.ch()), 0);
}

TEST(ComplementIsometry, AllDegreesPass) {
  for (int d = 1; d <= 5; ++d) {
    auto rep = verify_complement_isometry(d);
    EXPECT_TRUE(rep.passed()) << "d = " << d;
    EXPECT_EQ(rep.g, 2 * d + 2);
    EXPECT_EQ(rep.gram_b, (IntMatrix{{-1, -1}, {1 - d, -d}}));
    const int g = 2 * d + 2;
    EXPECT_EQ(rep.gram_a, (IntMatrix{{1 - g / 2, -g / 2}, {3 - g, 1 - g}}));
    EXPECT_EQ(rep.witness_product, rep.gram_a);
    EXPECT_EQ(rep.witness_product, (IntMatrix{{-d, -1 - d}, {1 - 2 * d, -1 - 2 * d}}));
    EXPECT_EQ(abs(determinant(rep.gram_a)), 1);
    EXPECT_EQ(abs(determinant(rep.gram_b)), 1);
    EXPECT_TRUE(rep.det_match);
  }
}

TEST(ComplementIsometry, DegreeThreeGrams) {
  auto rep = verify_complement_isometry(3);
  EXPECT_EQ(rep.gram_b, (IntMatrix{{-1, -1}, {-2, -3}}));
  EXPECT_EQ(rep.gram_a, (IntMatrix{{-3, -4}, {-5, -7}}));
}

TEST(ComplementIsometry, Errors) {
  EXPECT_THROW(verify_complement_isometry(0), ValidationError);
  EXPECT_THROW(verify_complement_isometry(7), ValidationError);
  EXPECT_THROW(index_two_complement_generators(validate(1, 22)), ValidationError);
  EXPECT_THROW(index_one_complement_generators(validate_genus(7)), ValidationError);
  EXPECT_THROW(expected_gram_a(7), ValidationError);
}
