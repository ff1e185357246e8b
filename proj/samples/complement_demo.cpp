// Prints the right-orthogonal complements on Y_5 and X_22 and an isometry
// between them.

#include "fano/fano.hpp"

#include <iostream>

int main() {
  using namespace fano;

  for (const auto& f : {validate(2, 5), validate(1, 22)}) {
    const auto collection = standard_collection(f);
    const auto complement = right_orthogonal(collection);
    std::cout << f.name() << " (" << describe(f).text << ")\n";
    std::cout << "  exceptional collection:";
    for (const auto& c : collection) std::cout << "  [" << c.ch() << "]";
    std::cout << "\n  complement basis:";
    for (const auto& b : complement.basis) std::cout << "  [" << b.ch() << "]";
    std::cout << "\n  Gram " << complement.gram.matrix << "\n";
  }

  const auto rep = verify_complement_isometry(5);
  std::cout << "isometries with entries in [-3, 3]:";
  for (const auto& a : rep.witnesses) std::cout << " " << a;
  std::cout << "\n" << (rep.passed() ? "complements agree" : "complements DISAGREE") << "\n";
  return rep.passed() ? 0 : 2;
}
