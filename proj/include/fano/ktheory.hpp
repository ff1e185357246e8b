#pragma once

// Numerical Grothendieck group K_0(X)_num of a Picard-rank-1 Fano threefold,
// modelled through Chern characters in the rational Chow ring.
//
// Riemann-Roch: chi(F) = deg(ch(F) * td(X)) and chi(u, v) = chi0(u^* * v),
// where u^* is the dual involution. The Todd class is expanded from
// c1 = i*H and the normalisation deg(c1 * c2) = 24, i.e. chi(O_X) = 1.

#include "fano/arith.hpp"
#include "fano/chow.hpp"
#include "fano/lattice.hpp"
#include "fano/registry.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

/// An element of K_0(X)_num represented by its Chern character.
class KClass {
 public:
  explicit KClass(CycleClass ch) : ch_(std::move(ch)) {}
  const CycleClass& ch() const { return ch_; }
  const FanoDescriptor& parent() const { return ch_.parent(); }

  friend KClass operator+(const KClass& a, const KClass& b) { return KClass(a.ch_ + b.ch_); }
  friend KClass operator-(const KClass& a, const KClass& b) { return KClass(a.ch_ - b.ch_); }
  friend KClass operator*(const Integer& n, const KClass& a) { return KClass(Rational(n) * a.ch_); }
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  CycleClass ch_;
};

/// td(X) = 1 + (i/2) H + ((i^2 d + 24/i) / 12) L + P.
inline CycleClass todd(const FanoDescriptor& f) {
  const Rational i = f.index();
  const Rational d = f.degree();
  return CycleClass(f, 1, i / 2, (i * i * d + Rational(24) / i) / 12, 1);
}

/// Holomorphic Euler characteristic of a class: deg(v * td).
inline Rational chi0(const CycleClass& v) { return top_degree(v * todd(v.parent())); }

/// Coefficients (a, b, c, e) with chi0(x + yH + zL + wP) = a x + b y + c z + e w.
inline std::array<Rational, 4> chi0_coefficients(const FanoDescriptor& f) {
  return {chi0(CycleClass::one(f)), chi0(CycleClass::hyperplane(f)), chi0(CycleClass::line(f)),
          chi0(CycleClass::point(f))};
}

inline Rational euler_rational(const CycleClass& u, const CycleClass& v) {
  require_same_parent(u.parent(), v.parent());
  return chi0(dual(u) * v);
}

class NonIntegralEuler : public std::domain_error {
 public:
  explicit NonIntegralEuler(const Rational& value)
      : std::domain_error("Euler pairing " + value.str() + " is not an integer; an argument lies outside K_0(X)_num") {}
};

/// chi(u, v) = sum (-1)^p dim Ext^p, computed by Riemann-Roch.
inline Integer euler(const KClass& u, const KClass& v) {
  Rational r = euler_rational(u.ch(), v.ch());
  if (!is_integral(r)) throw NonIntegralEuler(r);
  return numerator(r);
}

enum class Cycle { X, H, L, P };

inline const char* cycle_name(Cycle c) {
  switch (c) {
    case Cycle::X: return "O_X";
    case Cycle::H: return "O_H";
    case Cycle::L: return "O_L";
    case Cycle::P: return "O_P";
  }
  return "?";
}

/// Structure sheaf of the basic cycles. ch(O_H) = 1 - exp(-H); the
/// P-coefficient of ch(O_L) is fixed by chi(O_L) = 1 for a rational line.
inline KClass structure_sheaf(const FanoDescriptor& f, Cycle kind) {
  const Rational i = f.index();
  const Rational d = f.degree();
  switch (kind) {
    case Cycle::X: return KClass(CycleClass::one(f));
    case Cycle::H: return KClass(CycleClass(f, 0, 1, -d / 2, d / 6));
    case Cycle::L: return KClass(CycleClass(f, 0, 0, 1, 1 - i / 2));
    case Cycle::P: return KClass(CycleClass::point(f));
  }
  throw std::logic_error("unknown cycle kind");
}

inline std::array<KClass, 4> structure_sheaf_basis(const FanoDescriptor& f) {
  return {structure_sheaf(f, Cycle::X), structure_sheaf(f, Cycle::H), structure_sheaf(f, Cycle::L),
          structure_sheaf(f, Cycle::P)};
}

/// [O(mH)], with ch = exp(mH).
inline KClass line_bundle(const FanoDescriptor& f, const Integer& m) {
  return KClass(exp_hyperplane(f, Rational(m)));
}

/// Coordinates of a class on the structure-sheaf basis. They are always
/// rational; the class lies in K_0(X)_num exactly when they are integers.
struct LatticeCoordinates {
  std::array<Rational, 4> rational;

  bool is_member() const {
    for (const auto& q : rational)
      if (!is_integral(q)) return false;
    return true;
  }
  std::optional<std::array<Integer, 4>> integers() const {
    if (!is_member()) return std::nullopt;
    return std::array<Integer, 4>{numerator(rational[0]), numerator(rational[1]), numerator(rational[2]),
                                  numerator(rational[3])};
  }
};

/// Solves the triangular system v = a [O_X] + b [O_H] + c [O_L] + e [O_P].
inline LatticeCoordinates lattice_coordinates(const CycleClass& v) {
  const auto basis = structure_sheaf_basis(v.parent());
  Rational a = v.x();
  Rational b = v.y();
  Rational c = v.z() - b * basis[1].ch().z();
  Rational e = v.w() - b * basis[1].ch().w() - c * basis[2].ch().w();
  return {{a, b, c, e}};
}

inline KClass from_lattice_coordinates(const FanoDescriptor& f, std::span<const Integer> coords) {
  if (coords.size() != 4) throw ValidationError("K_0(X)_num has rank 4");
  const auto basis = structure_sheaf_basis(f);
  CycleClass v(f);
  for (std::size_t i = 0; i < 4; ++i) v += Rational(coords[i]) * basis[i].ch();
  return KClass(v);
}

/// Chern character of the rank-r bundle with c1 = -H and
/// c2 = H^2/2 + (r - s) L on an index-1 threefold of genus g = r*s; ch_3 is
/// the multiple of P making chi0 vanish. s may be non-integral, which gives
/// the formal class for factorizations the bundle does not exist for (odd g
/// with r = 2).
inline KClass mukai_ch_formal(const FanoDescriptor& f, const Integer& r, const Rational& s) {
  if (f.index() != 1) throw ValidationError("Mukai bundles live on index-1 threefolds, got " + f.name());
  if (r < 1 || s <= 0) throw ValidationError("Mukai bundle needs r >= 1 and s > 0");
  const Rational g = *f.genus();
  if (Rational(r) * s != g)
    throw ValidationError("genus " + g.str() + " is not r*s = " + r.str() + "*" + s.str());
  CycleClass c(f, Rational(r), -1, -(Rational(r) - s), 0);
  Rational w = -chi0(c);
  return KClass(CycleClass(f, c.x(), c.y(), c.z(), w));
}

/// The Mukai bundle E_r for a factorization g = r*s in integers.
inline KClass mukai_ch(const FanoDescriptor& f, int r, int s) {
  if (f.index() != 1) throw ValidationError("Mukai bundles live on index-1 threefolds, got " + f.name());
  if (r < 1 || s < 1) throw ValidationError("Mukai bundle needs r >= 1 and s >= 1");
  if (r * s != *f.genus())
    throw ValidationError("genus " + std::to_string(*f.genus()) + " is not " + std::to_string(r) + "*" +
                          std::to_string(s));
  return mukai_ch_formal(f, r, Rational(s));
}

/// The rank-2 Mukai class E_2 (s = g/2). Lies in the lattice iff g is even.
inline KClass rank_two_mukai_ch(const FanoDescriptor& f) {
  if (f.index() != 1) throw ValidationError("Mukai bundles live on index-1 threefolds, got " + f.name());
  return mukai_ch_formal(f, 2, Rational(*f.genus(), 2));
}

/// u * exp(-i H): tensoring with the canonical bundle.
inline KClass canonical_twist(const KClass& u) {
  const auto& f = u.parent();
  return KClass(u.ch() * exp_hyperplane(f, -Rational(f.index())));
}

struct EulerGram {
  std::vector<KClass> basis;
  IntMatrix matrix;  // matrix(i, j) = euler(basis[i], basis[j])
};

inline EulerGram euler_gram(std::vector<KClass> basis) {
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = euler(basis[i], basis[j]);
  return {std::move(basis), std::move(m)};
}

inline EulerGram structure_sheaf_gram(const FanoDescriptor& f) {
  auto b = structure_sheaf_basis(f);
  return euler_gram({b.begin(), b.end()});
}

}  // namespace fano
