#pragma once

// Decidable criteria for AK-compatibility (structure sheaves of numerical
// cycle bases form a basis of K_0(X)_num).
//
// Codimensions 0, 1, 2 and n are always fine. Codimension p is fine when the
// intersection pairing A^p_num x A^{n-p}_num -> Z is perfect, which for free
// modules of finite rank means a square Gram with determinant +-1.

#include "fano/arith.hpp"
#include "fano/chow.hpp"
#include "fano/ktheory.hpp"
#include "fano/lattice.hpp"
#include "fano/registry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

class MalformedPairingData : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Ranks m_p of A^p(X)_num and, for each p, the m_p x m_{n-p} matrix of
/// intersection numbers between chosen bases.
struct PairingData {
  int n = 0;
  std::vector<int> ranks;
  std::vector<IntMatrix> pairings;  // indexed by p in [0, n]
};

inline void validate_pairing_data(const PairingData& data) {
  const int n = data.n;
  if (n < 1) throw MalformedPairingData("dimension n must be >= 1");
  if (data.ranks.size() != static_cast<std::size_t>(n + 1))
    throw MalformedPairingData("expected " + std::to_string(n + 1) + " ranks, got " + std::to_string(data.ranks.size()));
  if (data.pairings.size() != static_cast<std::size_t>(n + 1))
    throw MalformedPairingData("expected pairings for every p in [0, " + std::to_string(n) + "]");
  for (int m : data.ranks)
    if (m < 0) throw MalformedPairingData("ranks must be non-negative");
  if (data.ranks.front() != 1 || data.ranks.back() != 1) throw MalformedPairingData("m_0 and m_n must equal 1");
  for (int p = 0; p <= n; ++p) {
    const IntMatrix& m = data.pairings[p];
    if (m.rows() != static_cast<std::size_t>(data.ranks[p]) || m.cols() != static_cast<std::size_t>(data.ranks[n - p]))
      throw MalformedPairingData("pairing " + std::to_string(p) + " must be " + std::to_string(data.ranks[p]) + " x " +
                                 std::to_string(data.ranks[n - p]));
    if (data.pairings[n - p] != m.transpose())
      throw MalformedPairingData("pairing " + std::to_string(n - p) + " is not the transpose of pairing " +
                                 std::to_string(p));
  }
  if (data.pairings.front() != IntMatrix{{1}}) throw MalformedPairingData("pairing 0 must be (1)");
}

inline bool pairing_is_perfect(const PairingData& data, int p) {
  validate_pairing_data(data);
  if (p < 0 || p > data.n) throw MalformedPairingData("p must lie in [0, n]");
  return is_unimodular(data.pairings[p]);
}

struct AkVerdict {
  bool verdict;
  std::string reason;
  std::optional<int> failing_p;
};

inline AkVerdict ak_compatible(const PairingData& data) {
  validate_pairing_data(data);
  const int n = data.n;
  if (n <= 3) return {true, "dimension ≤ 3", std::nullopt};
  for (int p = 3; p <= n - 1; ++p)
    if (!pairing_is_perfect(data, p))
      return {false, "intersection pairing in codimension " + std::to_string(p) + " is not perfect", p};
  return {true, "perfect pairing in codimensions p ∈ [3, " + std::to_string(n - 1) + "]", std::nullopt};
}

/// Numerical intersection data of a Picard-rank-1 Fano threefold on the
/// bases {1}, {H}, {L}, {P}: every pairing is (1) since H.L = P.
inline PairingData fano_pairing_data(const FanoDescriptor&) {
  return {3, {1, 1, 1, 1}, {IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{1}}}};
}

/// [O_X], [O_H], [O_L], [O_P], each checked to have leading term equal to
/// its cycle (1, H, L, P) with the higher terms strictly deeper.
inline std::vector<KClass> k0_basis_from_cycles(const FanoDescriptor& f) {
  std::vector<KClass> out;
  for (int p = 0; p < 4; ++p) {
    KClass k = structure_sheaf(f, static_cast<Cycle>(p));
    const CycleClass& ch = k.ch();
    if (ch.leading_codim() != p || ch[p] != 1)
      throw std::logic_error(std::string("ch(") + cycle_name(static_cast<Cycle>(p)) + ") does not lead with its cycle");
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace fano
