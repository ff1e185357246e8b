#pragma once

// Integer linear algebra over arbitrary-precision integers.
//
// Row-vector convention throughout: a lattice is the row span of a matrix,
// and a bilinear form with Gram matrix G evaluates as v * G * w^T. The one
// exception is the isometry condition A^T * G2 * A = G1, which follows the
// column habit of the Euler-form literature (A maps coordinates of the
// first lattice into the second).

#include "fano/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fano {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ValidationError("ragged matrix literal");
      e_.insert(e_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ValidationError("ragged matrix: row " + std::to_string(i));
      std::copy(rows[i].begin(), rows[i].end(), m.e_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {e_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {e_.data() + i * cols_, cols_}; }

  /// Entries in row-major order.
  const std::vector<Integer>& flat() const { return e_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row(dst) += factor * row(src)
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (auto& v : row(i)) v = -v;
  }

  void append_row(std::span<const Integer> r) {
    if (rows_ == 0 && e_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw ValidationError("row length mismatch");
    e_.insert(e_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool row_is_zero(std::size_t i) const {
    for (const auto& v : row(i))
      if (v != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw ValidationError("matrix product shape mismatch: " + std::to_string(a.cols_) + " vs " +
                            std::to_string(b.rows_));
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntMatrix operator-(IntMatrix a) {
    for (auto& v : a.e_) v = -v;
    return a;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> e_;
};

inline std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).str();
    out += "]";
  }
  return out + "]";
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  if (!m.is_square()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

/// Row-style Hermite normal form: staircase with positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are kept at the bottom
/// so the shape is unchanged.
inline IntMatrix hnf(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c below row r until a single nonzero entry remains.
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m(i, c) != 0 && (piv == rows || abs(m(i, c)) < abs(m(piv, c)))) piv = i;
      if (piv == rows) break;
      m.swap_rows(r, piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        m.add_row(i, r, -floor_div(m(i, c), m(r, c)));
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) m.add_row(i, r, -floor_div(m(i, c), m(r, c)));
    ++r;
  }
  return m;
}

inline IntMatrix nonzero_rows(const IntMatrix& m) {
  IntMatrix out(0, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row_is_zero(i)) out.append_row(m.row(i));
  return out;
}

/// Canonical basis (HNF, zero rows dropped) of the row span.
inline IntMatrix hnf_basis(const IntMatrix& m) { return nonzero_rows(hnf(m)); }

inline std::size_t rank(const IntMatrix& m) { return hnf_basis(m).rows(); }

/// Whether v lies in the integer row span of m.
inline bool row_span_contains(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.cols()) throw ValidationError("vector length does not match matrix columns");
  IntMatrix basis = hnf_basis(m);
  std::vector<Integer> rest(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (basis(i, c) == 0) ++c;
    if (rest[c] % basis(i, c) != 0) return false;
    Integer q = rest[c] / basis(i, c);
    for (std::size_t j = c; j < basis.cols(); ++j) rest[j] -= q * basis(i, j);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
inline std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (pi == rows || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return out;
      m.swap_rows(t, pi);
      m.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        m.add_row(i, t, -floor_div(m(i, t), m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        m.add_col(j, t, -floor_div(m(t, j), m(t, t)));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the remaining block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      m.add_row(t, bad, 1);
    }
    out.push_back(abs(m(t, t)));
  }
  return out;
}

/// Basis (rows, HNF) of {v in Z^cols : m * v^T = 0}. The integer kernel is
/// always saturated, so the quotient of Z^cols by it is torsion-free.
inline IntMatrix saturated_kernel(const IntMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  IntMatrix aug(n, k + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = m(i, j);
    aug(j, k + j) = 1;
  }
  IntMatrix h = hnf(aug);
  IntMatrix ker(0, n);
  for (std::size_t r = 0; r < n; ++r) {
    bool left_zero = true;
    for (std::size_t i = 0; i < k && left_zero; ++i) left_zero = h(r, i) == 0;
    if (!left_zero) continue;
    std::vector<Integer> v(h.row(r).begin() + static_cast<std::ptrdiff_t>(k), h.row(r).end());
    ker.append_row(v);
  }
  return hnf_basis(ker);
}

/// Free Z-module of finite rank with an integer, generally non-symmetric, Gram matrix.
class BilinearLattice {
 public:
  explicit BilinearLattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square() || gram_.rows() == 0)
      throw ValidationError("Gram matrix must be square of positive size");
  }
  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  /// v * G * w^T
  Integer form(std::span<const Integer> v, std::span<const Integer> w) const {
    if (v.size() != rank() || w.size() != rank()) throw ValidationError("vector length does not match lattice rank");
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * w[j];
    }
    return s;
  }

  friend bool operator==(const BilinearLattice&, const BilinearLattice&) = default;

 private:
  IntMatrix gram_;
};

/// True iff |det a| = 1 and a^T * g2 * a = g1.
inline bool is_isometry(const IntMatrix& a, const BilinearLattice& g1, const BilinearLattice& g2) {
  if (!a.is_square() || a.rows() != g1.rank() || g1.rank() != g2.rank()) return false;
  if (!is_unimodular(a)) return false;
  return a.transpose() * g2.gram() * a == g1.gram();
}

inline bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  return std::lexicographical_compare(a.flat().begin(), a.flat().end(), b.flat().begin(), b.flat().end());
}

/// Every isometry with entries in [-bound, bound], sorted lexicographically
/// by row-major entries. Columns are chosen one at a time and pruned against
/// the Gram entries they determine, which visits the same candidate space as
/// the full (2*bound+1)^(rank^2) enumeration.
inline std::vector<IntMatrix> find_isometries(const BilinearLattice& g1, const BilinearLattice& g2, int bound) {
  if (g1.rank() != g2.rank()) throw ValidationError("lattices have different ranks");
  if (bound < 1) throw ValidationError("search bound must be >= 1");
  const std::size_t n = g1.rank();
  const IntMatrix& G1 = g1.gram();
  const IntMatrix& G2 = g2.gram();

  struct Column {
    std::vector<Integer> v;
    std::vector<Integer> left;  // v^T * G2
  };
  auto dot = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  std::vector<Column> cands;
  std::vector<int> digits(n, -bound);
  for (bool more = true; more;) {
    Column c;
    c.v.assign(digits.begin(), digits.end());
    c.left.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.left[j] += c.v[i] * G2(i, j);
    cands.push_back(std::move(c));
    more = false;
    for (std::size_t k = n; k-- > 0;) {
      if (digits[k] < bound) {
        ++digits[k];
        more = true;
        break;
      }
      digits[k] = -bound;
    }
  }

  // Columns admissible in each position: v^T G2 v = G1(j, j).
  std::vector<std::vector<std::size_t>> admissible(n);
  for (std::size_t idx = 0; idx < cands.size(); ++idx)
    for (std::size_t j = 0; j < n; ++j)
      if (dot(cands[idx].left, cands[idx].v) == G1(j, j)) admissible[j].push_back(idx);

  std::vector<IntMatrix> out;
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      IntMatrix a(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) a(r, c) = cands[chosen[c]].v[r];
      if (is_unimodular(a)) out.push_back(std::move(a));
      return;
    }
    for (std::size_t idx : admissible[j]) {
      const Column& cj = cands[idx];
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        const Column& ci = cands[chosen[i]];
        ok = dot(ci.left, cj.v) == G1(i, j) && dot(cj.left, ci.v) == G1(j, i);
      }
      if (!ok) continue;
      chosen.push_back(idx);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace fano
