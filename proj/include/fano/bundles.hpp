#pragma once

// Chern-class calculus for rank-2 bundles on Picard-rank-1 threefolds, and
// the dimension/degree numerology comparing rank-2 bundles F on X_{4d+2}
// (c1 = -H, c2 = (d+2+t) L) with instantons E on Y_d (c1 = 0, c2 = k L).

#include "fano/arith.hpp"
#include "fano/chow.hpp"
#include "fano/ktheory.hpp"
#include "fano/registry.hpp"

#include <string>

namespace fano {

/// Rank-2 Chern data c1 = a H, c2 = b L, c3 = c P.
struct RankTwoBundle {
  FanoDescriptor parent;
  Integer c1;
  Integer c2;
  Integer c3 = 0;

  friend bool operator==(const RankTwoBundle&, const RankTwoBundle&) = default;
};

/// ch = 2 + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6.
inline CycleClass ch_of(const RankTwoBundle& b) {
  const Rational d = b.parent.degree();
  const Rational a = b.c1;
  const Rational c2 = b.c2;
  const Rational c3 = b.c3;
  return CycleClass(b.parent, 2, a, (a * a * d - 2 * c2) / 2, (a * a * a * d - 3 * a * c2 + 3 * c3) / 6);
}

inline RankTwoBundle dualize(const RankTwoBundle& b) { return {b.parent, -b.c1, b.c2, -b.c3}; }

/// b (x) O(mH): c1 + 2mH, c2 + m c1 H + m^2 H^2; c3 read back from ch.
inline RankTwoBundle twist(const RankTwoBundle& b, const Integer& m) {
  const Integer d = b.parent.degree();
  RankTwoBundle out{b.parent, b.c1 + 2 * m, b.c2 + m * b.c1 * d + m * m * d, 0};
  const CycleClass ch = ch_of(b) * exp_hyperplane(b.parent, Rational(m));
  const Rational a = out.c1;
  const Rational c3 = (6 * ch.w() - a * a * a * Rational(d) + 3 * a * Rational(out.c2)) / 3;
  out.c3 = to_integer(c3);
  return out;
}

inline Rational euler_characteristic(const RankTwoBundle& b) { return chi0(ch_of(b)); }

/// deg of the image of P(E) under |O(1)| for globally generated E^*:
/// c1^3 - 2 c1 c2 evaluated on the given Chern data.
inline Integer projectivization_degree(const RankTwoBundle& b) {
  const Integer d = b.parent.degree();
  return b.c1 * b.c1 * b.c1 * d - 2 * b.c1 * b.c2;
}

struct Index1Numerology {
  int d;
  int t;
  RankTwoBundle bundle;       // F
  RankTwoBundle dual_bundle;  // F^*
  Integer chi;                // chi(F^*)
  Integer degree;             // from the computed Chern classes of F^*
  Integer closed_form_degree;  // 2d - 2 + 2t, which assumes c2(F^*) = (d+2-t) L
  bool discrepancy;
};

struct Index2Numerology {
  int d;
  int k;
  RankTwoBundle bundle;        // E
  RankTwoBundle twisted_dual;  // E^*(1)
  Integer chi;                 // chi(E^*(1))
  Integer degree;              // deg P_Y(E)
};

namespace detail {
inline void require_numerology_d(int d) {
  if (d < 1 || d > 5) throw ValidationError("d must lie in [1, 5], got " + std::to_string(d));
}
}  // namespace detail

inline Index1Numerology numerology_index1(int d, int t) {
  detail::require_numerology_d(d);
  if (t < 0) throw ValidationError("t must be >= 0, got " + std::to_string(t));
  const FanoDescriptor x = validate(1, 4 * d + 2);
  RankTwoBundle f{x, -1, d + 2 + t, 0};
  RankTwoBundle fd = dualize(f);
  Integer chi = to_integer(euler_characteristic(fd));
  Integer degree = projectivization_degree(fd);
  Integer closed_form = 2 * d - 2 + 2 * t;
  bool discrepancy = degree != closed_form;
  return {d, t, f, fd, chi, degree, closed_form, discrepancy};
}

inline Index2Numerology numerology_index2(int d, int k) {
  detail::require_numerology_d(d);
  if (k < 0) throw ValidationError("k must be >= 0, got " + std::to_string(k));
  const FanoDescriptor y = validate(2, d);
  RankTwoBundle e{y, 0, k, 0};
  RankTwoBundle ed1 = twist(dualize(e), 1);
  return {d, k, e, ed1, to_integer(euler_characteristic(ed1)), projectivization_degree(ed1)};
}

struct CoincidenceReport {
  int d;
  int k;
  int t;
  Integer dim_index1;  // chi(F^*) = d + 3 - t
  Integer dim_index2;  // chi(E^*(1)) = 2d - 2k + 4
  Integer degree_index1;
  Integer degree_index1_closed_form;
  Integer degree_index2;
  bool dimensions_coincide;
  bool degrees_coincide;              // computed degrees
  bool closed_form_degrees_coincide;  // 2d - 2 + 2t against 4d - 4k
  bool condition_holds;               // d + 1 = 2k - t
};

inline CoincidenceReport coincidence_check(int d, int k, int t) {
  const auto one = numerology_index1(d, t);
  const auto two = numerology_index2(d, k);
  return {d,
          k,
          t,
          one.chi,
          two.chi,
          one.degree,
          one.closed_form_degree,
          two.degree,
          one.chi == two.chi,
          one.degree == two.degree,
          one.closed_form_degree == two.degree,
          d + 1 == 2 * k - t};
}

}  // namespace fano
