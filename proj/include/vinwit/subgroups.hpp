#pragma once

// Finite-index subgroups of finitely presented groups: Reidemeister-Schreier
// presentations, abelianization, maps onto Z, torsion and orientation tests
// for Coxeter groups, and sampling of kernel elements.
//
// Cosets are 0-based here; coset 0 is the subgroup.

#include <optional>
#include <string>
#include <vector>

#include "vinwit/coset.hpp"
#include "vinwit/coxeter.hpp"
#include "vinwit/presentation.hpp"

namespace vinwit {

struct SchreierGenerator {
  int coset = 0;
  int generator = 0;  // 0-based
};

struct SubgroupPresentation {
  Presentation presentation;
  /// Each subgroup generator as a reduced word in the parent generators.
  std::vector<FreeWord> generator_words;
  std::vector<SchreierGenerator> origin;
  /// Every Schreier generator (coset * n + g) as a word in the subgroup
  /// generators; empty for tree edges and eliminated-to-trivial ones.
  std::vector<FreeWord> schreier_images;
};

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

/// Rewrites a parent word lying in the subgroup into subgroup generators.
/// Throws InvalidInput if the word does not fix coset 0.
FreeWord rewrite(const SubgroupPresentation& sub, const CosetTable& t, const Presentation& p, const FreeWord& w);

struct AbelianizationReport {
  std::vector<Integer> invariant_factors;  // each >= 2, divisibility chain
  std::size_t betti = 0;
};

/// Relator exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relator_matrix(const Presentation& p);
AbelianizationReport abelianization(const Presentation& p);

/// Homomorphism onto Z given by integer images of the generators.
struct Epimorphism {
  std::vector<Integer> images;
};

/// One epimorphism per free factor of the abelianization.
std::vector<Epimorphism> maps_to_Z(const Presentation& p);

Integer phi_of_subgroup_word(const Epimorphism& phi, const FreeWord& w);
/// phi of a parent word lying in the subgroup.
Integer phi_value(const SubgroupPresentation& sub, const CosetTable& t, const Presentation& p,
                  const Epimorphism& phi, const FreeWord& w);

struct TorsionReport {
  bool torsion_free = true;
  /// First witness: nontrivial parabolic element fixing a coset.
  std::optional<FreeWord> element;
  int fixed_coset = -1;
  /// Maximal parabolics examined, by dropped vertex (0-based), with their orders.
  std::vector<std::pair<int, std::size_t>> parabolic_orders;
};

/// Throws InvalidInput if some maximal proper parabolic is infinite.
TorsionReport torsion_report(const CosetTable& t, const CoxeterDiagram& d, const Presentation& p);
bool is_torsion_free(const CosetTable& t, const CoxeterDiagram& d, const Presentation& p);

/// Subgroup lies in the kernel of the word-length parity character.
/// Requires every generator to be an involution.
bool orientation_preserving(const CosetTable& t, const Presentation& p);

/// Kernel elements of phi as reduced parent words: the phi-zero subgroup
/// generators, and for radius >= 1 also g t^-phi(g) and the conjugates
/// t^a k t^-a (1 <= |a| <= radius), where t has phi-value 1.
std::vector<FreeWord> kernel_sample(const SubgroupPresentation& sub, const CosetTable& t, const Presentation& p,
                                    const Epimorphism& phi, int radius);

struct SubgroupFinding {
  CosetTable table;
  std::size_t index = 0;
  bool torsion_free = false;
  bool orientation_preserving = false;
  AbelianizationReport abelianization;
  std::size_t subgroup_generators = 0;
};

SubgroupFinding analyze_subgroup(const CosetTable& t, const CoxeterDiagram& d, const Presentation& p);

}  // namespace vinwit
