#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vinwit/coxeter.hpp"

namespace vinwit {

/// Word in a free group: letter +(g+1) is generator g, -(g+1) its inverse.
using FreeWord = std::vector<int>;

inline int letter_generator(int letter) { return (letter > 0 ? letter : -letter) - 1; }

/// Finite presentation. A generator is treated as an involution whenever the
/// relators contain its square; its inverse letter is then normalised away.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::size_t generators, std::vector<FreeWord> relators);

  std::size_t generators() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  bool is_involution(std::size_t g) const { return involution_[g]; }
  bool all_involutions() const;

  /// Normalises involution letters to positive and cancels adjacent inverse pairs.
  FreeWord reduce(const FreeWord& w) const;
  FreeWord inverse(const FreeWord& w) const;
  FreeWord power(const FreeWord& w, long k) const;

  std::string word_str(const FreeWord& w) const;

 private:
  std::size_t generators_ = 0;
  std::vector<FreeWord> relators_;
  std::vector<bool> involution_;
};

/// Generators s_1..s_n; relators s_i^2 then (s_i s_j)^{m_ij} for i < j with m_ij > 1.
Presentation coxeter_presentation(const CoxeterDiagram& d);
Presentation free_group_presentation(std::size_t rank);

/// Plain free reduction (no involution information).
FreeWord free_reduce(const FreeWord& w);

/// Converts a word in involutive generators to 0-based generator indices.
std::vector<int> to_generator_indices(const FreeWord& w);

}  // namespace vinwit
