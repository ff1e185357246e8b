#pragma once

// Rational numerical Chow ring of a Picard-rank-1 Fano threefold on the
// basis {1, H, L, P}: H the ample generator, L the class of a line, P the
// class of a point. Multiplication: H*H = d*L, H*L = P, all other products
// of positive-degree basis elements vanish.

#include "fano/arith.hpp"
#include "fano/registry.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fano {

class ParentMismatch : public std::invalid_argument {
 public:
  ParentMismatch(const FanoDescriptor& a, const FanoDescriptor& b)
      : std::invalid_argument("classes live on different threefolds: " + a.name() + " vs " + b.name()) {}
};

inline void require_same_parent(const FanoDescriptor& a, const FanoDescriptor& b) {
  if (a != b) throw ParentMismatch(a, b);
}

class CycleClass {
 public:
  explicit CycleClass(FanoDescriptor parent, Rational x = 0, Rational y = 0, Rational z = 0, Rational w = 0)
      : parent_(parent), c_{std::move(x), std::move(y), std::move(z), std::move(w)} {}

  static CycleClass one(FanoDescriptor f) { return CycleClass(f, 1); }
  static CycleClass hyperplane(FanoDescriptor f) { return CycleClass(f, 0, 1); }
  static CycleClass line(FanoDescriptor f) { return CycleClass(f, 0, 0, 1); }
  static CycleClass point(FanoDescriptor f) { return CycleClass(f, 0, 0, 0, 1); }

  const FanoDescriptor& parent() const { return parent_; }
  const Rational& x() const { return c_[0]; }
  const Rational& y() const { return c_[1]; }
  const Rational& z() const { return c_[2]; }
  const Rational& w() const { return c_[3]; }
  /// Coefficient in codimension p (0..3).
  const Rational& operator[](std::size_t p) const { return c_.at(p); }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// Lowest codimension with a nonzero coefficient, or 4 for the zero class.
  int leading_codim() const {
    for (int p = 0; p < 4; ++p)
      if (c_[p] != 0) return p;
    return 4;
  }

  CycleClass& operator+=(const CycleClass& o) {
    require_same_parent(parent_, o.parent_);
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycleClass& operator-=(const CycleClass& o) {
    require_same_parent(parent_, o.parent_);
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycleClass& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
  friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
  friend CycleClass operator-(CycleClass a) { return a *= Rational(-1); }
  friend CycleClass operator*(CycleClass a, const Rational& s) { return a *= s; }
  friend CycleClass operator*(const Rational& s, CycleClass a) { return a *= s; }

  /// Ring product in the Chow ring of the common parent.
  friend CycleClass operator*(const CycleClass& a, const CycleClass& b) {
    require_same_parent(a.parent_, b.parent_);
    const Rational d = a.parent_.degree();
    const auto& p = a.c_;
    const auto& q = b.c_;
    return CycleClass(a.parent_,
                      p[0] * q[0],
                      p[0] * q[1] + p[1] * q[0],
                      p[0] * q[2] + p[2] * q[0] + d * p[1] * q[1],
                      p[0] * q[3] + p[3] * q[0] + p[1] * q[2] + p[2] * q[1]);
  }

  friend bool operator==(const CycleClass&, const CycleClass&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CycleClass& a);

 private:
  FanoDescriptor parent_;
  std::array<Rational, 4> c_;
};

inline CycleClass mul(const CycleClass& a, const CycleClass& b) { return a * b; }

/// (x, y, z, w) -> (x, -y, z, -w): the involution acting by (-1)^p in codimension p.
inline CycleClass dual(const CycleClass& a) {
  return CycleClass(a.parent(), a.x(), -a.y(), a.z(), -a.w());
}

inline Rational top_degree(const CycleClass& a) { return a.w(); }

/// exp(m*H) = 1 + mH + (m^2 d / 2) L + (m^3 d / 6) P, the Chern character of O(mH).
inline CycleClass exp_hyperplane(const FanoDescriptor& f, const Rational& m) {
  const Rational d = f.degree();
  return CycleClass(f, 1, m, m * m * d / 2, m * m * m * d / 6);
}

inline std::string to_string(const CycleClass& a) {
  static constexpr std::array<const char*, 4> kBasis{"", "H", "L", "P"};
  std::string out;
  for (int p = 0; p < 4; ++p) {
    const Rational& c = a[p];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = (mag == 1) && p > 0;
    if (!unit) {
      std::string s = to_string(mag);
      out += (p > 0 && !is_integral(mag)) ? "(" + s + ")" : s;
    }
    out += kBasis[p];
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const CycleClass& a) { return os << to_string(a); }

}  // namespace fano
