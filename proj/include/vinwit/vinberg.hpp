#pragma once

// Reflection representations built from Cartan matrices.
//
// For a Cartan matrix A the i-th generator acts by v -> v - (v^T A e_i) e_i, so
// its matrix is the identity with row i replaced by e_i - (column i of A)^T.

#include <optional>
#include <vector>

#include "vinwit/coxeter.hpp"
#include "vinwit/matrix.hpp"

namespace vinwit {

/// Sequence of 0-based generator indices.
using Word = std::vector<int>;

/// A matrix together with the word that produced it.
template <class T>
struct Element {
  Matrix<T> matrix;
  Word word;
};

using GroupElement = Element<Integer>;
using FieldElement = Element<AlgNum>;

template <class T>
Matrix<T> reflection_matrix(const Matrix<T>& cartan, std::size_t i);

/// Integer generators; requires an integral Cartan matrix with diagonal 2.
std::vector<GroupElement> reflection_generators(const CartanMatrix& a);
/// Field-valued generators (used for the symmetric Cartan matrix).
std::vector<FieldElement> reflection_generators_field(const CartanMatrix& a);

struct RelationEntry {
  std::size_t i = 0, j = 0;
  int expected = 0;
  std::optional<int> order;  // empty when the order exceeds the cap
  bool pass = false;
};

struct RelationReport {
  int cap = 0;
  std::vector<RelationEntry> pairs;
  bool all_pass = true;
  /// First failing pair, if any.
  std::optional<RelationEntry> first_failure() const;
};

/// Order of g_i g_j for every pair i < j, compared against the diagram labels.
template <class T>
RelationReport verify_relations(const std::vector<Element<T>>& gens, const CoxeterDiagram& d, int cap = 50);

/// Ordered product of generators; the empty word gives the identity.
template <class T>
Element<T> evaluate_word(const std::vector<Element<T>>& gens, const Word& word);

/// Basis of {B : g^T B g = B for every generator g}. With no generators the
/// dimension argument sets the matrix size and the whole space is returned.
std::vector<RatMatrix> invariant_bilinear_forms(const std::vector<GroupElement>& gens, std::size_t dim = 0);
std::vector<AlgMatrix> invariant_bilinear_forms(const std::vector<FieldElement>& gens, std::size_t dim = 0);

/// g_i g_j for i < j; these generate the even-length subgroup of a group
/// generated by involutions.
std::vector<GroupElement> even_subgroup_generators(const std::vector<GroupElement>& gens);

struct CompatibilityEntry {
  std::size_t i = 0, j = 0;
  AlgNum product;   // A'_ij A'_ji
  AlgNum expected;  // A_ij^2
  bool pass = false;
};

/// A'_ij A'_ji = A_ij^2 for i < j, where A = cartan_from_diagram(d).
std::vector<CompatibilityEntry> compatibility_audit(const CartanMatrix& integer_cartan, const CoxeterDiagram& d);

}  // namespace vinwit
