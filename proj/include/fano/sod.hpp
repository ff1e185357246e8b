#pragma once

// Numerical shadows of semiorthogonal decompositions: Euler-form tests for
// exceptional sequences, right-orthogonal complements inside K_0(X)_num and
// the comparison of the complements for Y_d and X_{4d+2}.
//
// chi can only see alternating sums of Ext groups, so every test here is a
// necessary condition. Reports say "numerically exceptional".

#include "fano/arith.hpp"
#include "fano/chow.hpp"
#include "fano/ktheory.hpp"
#include "fano/lattice.hpp"
#include "fano/registry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fano {

struct EulerViolation {
  std::size_t l;
  std::size_t k;
  Integer value;
  friend bool operator==(const EulerViolation&, const EulerViolation&) = default;
};

struct ExceptionalSequenceReport {
  std::vector<KClass> classes;
  std::vector<Integer> self_chis;
  /// (j, j, chi) when chi(F_j, F_j) != 1 and (l, k, chi) for l > k when chi(F_l, F_k) != 0.
  std::vector<EulerViolation> offending_pairs;

  bool numerically_exceptional() const { return offending_pairs.empty(); }
};

namespace detail {
inline void require_common_parent(const std::vector<KClass>& classes) {
  if (classes.empty()) throw ValidationError("need at least one class");
  for (const auto& c : classes) require_same_parent(classes.front().parent(), c.parent());
}
}  // namespace detail

inline ExceptionalSequenceReport check_exceptional(const std::vector<KClass>& classes) {
  detail::require_common_parent(classes);
  ExceptionalSequenceReport rep{classes, {}, {}};
  for (std::size_t l = 0; l < classes.size(); ++l) {
    Integer self = euler(classes[l], classes[l]);
    if (self != 1) rep.offending_pairs.push_back({l, l, self});
    rep.self_chis.push_back(std::move(self));
    for (std::size_t k = 0; k < l; ++k) {
      Integer v = euler(classes[l], classes[k]);
      if (v != 0) rep.offending_pairs.push_back({l, k, std::move(v)});
    }
  }
  return rep;
}

struct ComplementResult {
  std::vector<KClass> generators;
  /// Rows: structure-sheaf coordinates of the basis, in HNF.
  IntMatrix coordinates;
  std::vector<KClass> basis;
  EulerGram gram;
};

/// {v in K_0(X)_num : chi(c, v) = 0 for every generator c}, saturated.
inline ComplementResult right_orthogonal(const std::vector<KClass>& classes) {
  detail::require_common_parent(classes);
  const FanoDescriptor f = classes.front().parent();
  const auto sheaves = structure_sheaf_basis(f);

  // Row c: the functional v -> chi(c, v) on structure-sheaf coordinates,
  // cleared of denominators so non-lattice generators are admissible too.
  IntMatrix functionals(classes.size(), 4);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::array<Rational, 4> row;
    Integer den = 1;
    for (std::size_t j = 0; j < 4; ++j) {
      row[j] = euler_rational(classes[c].ch(), sheaves[j].ch());
      den = lcm(den, denominator(row[j]));
    }
    for (std::size_t j = 0; j < 4; ++j) functionals(c, j) = to_integer(row[j] * den);
  }

  ComplementResult out{classes, saturated_kernel(functionals), {}, {}};
  for (std::size_t r = 0; r < out.coordinates.rows(); ++r)
    out.basis.push_back(from_lattice_coordinates(f, out.coordinates.row(r)));
  out.gram = euler_gram(out.basis);
  return out;
}

/// Structure-sheaf coordinates of lattice classes as matrix rows; throws if
/// any class lies outside K_0(X)_num.
inline IntMatrix coordinate_rows(const std::vector<KClass>& classes) {
  IntMatrix m(0, 4);
  for (const auto& c : classes) {
    auto ints = lattice_coordinates(c.ch()).integers();
    if (!ints) throw ValidationError("class " + to_string(c.ch()) + " is not in K_0(X)_num");
    m.append_row(*ints);
  }
  return m;
}

/// Whether two families of lattice classes span the same sublattice.
inline bool same_span(const std::vector<KClass>& a, const std::vector<KClass>& b) {
  return hnf_basis(coordinate_rows(a)) == hnf_basis(coordinate_rows(b));
}

/// The exceptional collection whose right orthogonal is the interesting
/// component: O, O(H), ..., O((i-1)H) for index i >= 2; (E_2, O_X) for index 1
/// and even genus; (O_X) for index 1 and odd genus.
inline std::vector<KClass> standard_collection(const FanoDescriptor& f) {
  std::vector<KClass> out;
  if (f.index() >= 2) {
    for (int k = 0; k < f.index(); ++k) out.push_back(line_bundle(f, k));
  } else {
    if (*f.genus() % 2 == 0) out.push_back(rank_two_mukai_ch(f));
    out.push_back(structure_sheaf(f, Cycle::X));
  }
  return out;
}

/// Generators 1 - L and H - (d/2) L + ((d-6)/6) P of the complement of
/// (O, O(H)) on Y_d.
inline std::vector<KClass> index_two_complement_generators(const FanoDescriptor& f) {
  if (f.index() != 2) throw ValidationError("expected an index-2 threefold, got " + f.name());
  const Rational d = f.degree();
  return {KClass(CycleClass(f, 1, 0, -1, 0)), KClass(CycleClass(f, 0, 1, -d / 2, (d - 6) / 6))};
}

/// Generators 1 - (g/2) L + ((g-4)/4) P and H - ((3g-6)/2) L + ((7g-40)/12) P
/// of the complement of (E_2, O_X) on X_{2g-2}, g even.
inline std::vector<KClass> index_one_complement_generators(const FanoDescriptor& f) {
  if (f.index() != 1 || *f.genus() % 2 != 0)
    throw ValidationError("expected an index-1 threefold of even genus, got " + f.name());
  const Rational g = *f.genus();
  return {KClass(CycleClass(f, 1, 0, -g / 2, (g - 4) / 4)),
          KClass(CycleClass(f, 0, 1, -(3 * g - 6) / 2, (7 * g - 40) / 12))};
}

/// The witness isometry A with A^T chi_B A = chi_A.
inline IntMatrix complement_isometry_witness() { return IntMatrix{{0, 1}, {-1, -2}}; }

inline IntMatrix expected_gram_b(int d) { return IntMatrix{{-1, -1}, {1 - d, -d}}; }
inline IntMatrix expected_gram_a(int g) {
  if (g % 2 != 0) throw ValidationError("chi_A needs even genus");
  return IntMatrix{{1 - g / 2, -g / 2}, {3 - g, 1 - g}};
}

struct ComplementIsometryReport {
  int d = 0;
  int g = 0;
  FanoDescriptor y;
  FanoDescriptor x;
  ComplementResult complement_a;  // on X_{4d+2}
  ComplementResult complement_b;  // on Y_d
  std::vector<KClass> generators_a;
  std::vector<KClass> generators_b;
  bool generators_a_span = false;
  bool generators_b_span = false;
  IntMatrix gram_a;  // in generators_a
  IntMatrix gram_b;  // in generators_b
  bool gram_a_matches = false;
  bool gram_b_matches = false;
  IntMatrix witness_product;  // A^T gram_b A for the fixed witness A
  std::vector<IntMatrix> witnesses;
  bool witness_found = false;
  bool det_match = false;

  bool passed() const {
    return generators_a_span && generators_b_span && gram_a_matches && gram_b_matches && witness_found &&
           witness_product == gram_a && det_match;
  }
};

inline constexpr int kDefaultIsometryBound = 3;

/// Compares the complement of (O, O(H)) on Y_d with the complement of
/// (E_2, O_X) on X_{4d+2} (genus g = 2d + 2) for 1 <= d <= 5.
inline ComplementIsometryReport verify_complement_isometry(int d, int bound = kDefaultIsometryBound) {
  if (d < 1 || d > 5) throw ValidationError("d must lie in [1, 5], got " + std::to_string(d));
  const FanoDescriptor y = validate(2, d);
  const FanoDescriptor x = validate(1, 4 * d + 2);
  ComplementIsometryReport rep{d, *x.genus(), y, x, right_orthogonal(standard_collection(x)),
                   right_orthogonal(standard_collection(y))};

  rep.generators_a = index_one_complement_generators(x);
  rep.generators_b = index_two_complement_generators(y);
  rep.generators_a_span = same_span(rep.generators_a, rep.complement_a.basis);
  rep.generators_b_span = same_span(rep.generators_b, rep.complement_b.basis);
  rep.gram_a = euler_gram(rep.generators_a).matrix;
  rep.gram_b = euler_gram(rep.generators_b).matrix;
  rep.gram_a_matches = rep.gram_a == expected_gram_a(rep.g);
  rep.gram_b_matches = rep.gram_b == expected_gram_b(d);

  const IntMatrix a = complement_isometry_witness();
  rep.witness_product = a.transpose() * rep.gram_b * a;
  rep.witnesses = find_isometries(BilinearLattice(rep.gram_a), BilinearLattice(rep.gram_b), bound);
  for (const auto& w : rep.witnesses)
    if (w == a) rep.witness_found = true;
  rep.det_match = abs(determinant(rep.gram_a)) == abs(determinant(rep.gram_b));
  return rep;
}

}  // namespace fano
