#pragma once

// Deformation classes of Fano threefolds with Picard group Z.
//
// A class is keyed by (index, degree) where degree = H^3 for the ample
// generator H. Index 1 classes also carry the genus g with degree = 2g - 2.

#include "fano/arith.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fano {

class FanoDescriptor {
 public:
  int index() const { return index_; }
  int degree() const { return degree_; }
  std::optional<int> genus() const {
    if (index_ != 1) return std::nullopt;
    return degree_ / 2 + 1;
  }

  /// Short conventional name: P3, Q3, Y1..Y5, X2..X22.
  std::string name() const {
    switch (index_) {
      case 4: return "P3";
      case 3: return "Q3";
      case 2: return "Y" + std::to_string(degree_);
      default: return "X" + std::to_string(degree_);
    }
  }

  friend bool operator==(const FanoDescriptor&, const FanoDescriptor&) = default;
  friend auto operator<=>(const FanoDescriptor&, const FanoDescriptor&) = default;

 private:
  FanoDescriptor(int index, int degree) : index_(index), degree_(degree) {}
  friend FanoDescriptor validate(int index, int degree);

  int index_;
  int degree_;
};

/// Returns the descriptor for (index, degree) or throws ValidationError
/// naming the classification constraint that fails.
inline FanoDescriptor validate(int index, int degree) {
  if (index < 1) throw ValidationError("index must be >= 1, got " + std::to_string(index));
  if (degree < 1) throw ValidationError("degree must be >= 1, got " + std::to_string(degree));
  switch (index) {
    case 4:
      if (degree != 1) throw ValidationError("index 4 forces P^3, which has degree 1");
      break;
    case 3:
      if (degree != 2) throw ValidationError("index 3 forces the quadric Q^3, which has degree 2");
      break;
    case 2:
      if (degree > 5) throw ValidationError("index 2 requires 1 <= degree <= 5, got " + std::to_string(degree));
      break;
    case 1: {
      if (degree % 2 != 0)
        throw ValidationError("index 1 requires even degree 2g - 2, got " + std::to_string(degree));
      int g = degree / 2 + 1;
      if (g > 12) throw ValidationError("index 1 requires genus 2 <= g <= 12, got g = " + std::to_string(g));
      if (g == 11) throw ValidationError("index 1 excludes genus 11 (degree 20)");
      break;
    }
    default:
      throw ValidationError("a Fano threefold has index <= 4, got " + std::to_string(index));
  }
  return FanoDescriptor(index, degree);
}

inline FanoDescriptor validate_genus(int genus) {
  if (genus < 2) throw ValidationError("index 1 requires genus >= 2, got " + std::to_string(genus));
  return validate(1, 2 * genus - 2);
}

namespace detail {

struct RegistryEntry {
  int index;
  int degree;
  std::string_view description;
};

inline constexpr std::array<RegistryEntry, 17> kRegistry{{
    {4, 1, "projective space P^3"},
    {3, 2, "smooth quadric Q^3 in P^4"},
    {2, 1, "hypersurface of degree 6 in the weighted projective space P(3,2,1,1,1)"},
    {2, 2, "double covering of P^3 ramified in a quartic"},
    {2, 3, "cubic hypersurface in P^4"},
    {2, 4, "intersection of two 4-dimensional quadrics in P^5"},
    {2, 5, "linear section of codimension 3 of Gr(2,5) in P^9"},
    {1, 2, "double covering of P^3 ramified in a sextic"},
    {1, 4, "quartic in P^4, or double cover of a quadric in P^4 ramified in its intersection with a quartic"},
    {1, 6, "intersection of a quadric and a cubic in P^5"},
    {1, 8, "intersection of three 5-dimensional quadrics in P^6"},
    {1, 10, "quadric section of a linear section of codimension 2 of Gr(2,5), or double cover of Y_5 ramified in a quadric"},
    {1, 12, "linear section of codimension 7 of the orthogonal Lagrangian Grassmannian OGr+(5,10) in P^15"},
    {1, 14, "linear section of codimension 5 of Gr(2,6) in P^14"},
    {1, 16, "linear section of codimension 3 of the Lagrangian Grassmannian LGr(3,6) in P^13"},
    {1, 18, "linear section of codimension 2 of the G2-Grassmannian G2Gr(2,7) in P^13"},
    {1, 22, "zero locus of a section of three copies of the bundle Lambda^2 U^* on Gr(3,7), U tautological of rank 3"},
}};

}  // namespace detail

/// All 17 classes ordered by descending index, then ascending degree.
inline std::vector<FanoDescriptor> all_descriptors() {
  std::vector<FanoDescriptor> out;
  out.reserve(detail::kRegistry.size());
  for (const auto& e : detail::kRegistry) out.push_back(validate(e.index, e.degree));
  return out;
}

struct Description {
  FanoDescriptor descriptor;
  std::string text;
  int index;
  int degree;
  std::optional<int> genus;
};

inline Description describe(const FanoDescriptor& f) {
  for (const auto& e : detail::kRegistry)
    if (e.index == f.index() && e.degree == f.degree())
      return {f, std::string(e.description), f.index(), f.degree(), f.genus()};
  // validate() admits exactly the registry entries
  throw std::logic_error("descriptor missing from registry: " + f.name());
}

}  // namespace fano
