#pragma once

// Coxeter diagrams, Cartan matrices, exact signatures, Vinberg's type
// trichotomy, Lannér enumeration and the Galois-conjugate arithmeticity check.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vinwit/matrix.hpp"
#include "vinwit/numfield.hpp"

namespace vinwit {

/// Symmetric label matrix with 1 on the diagonal and labels in {2,...,6} off it.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  /// Rank-n diagram with every pair commuting (label 2).
  explicit CoxeterDiagram(std::size_t rank);
  static CoxeterDiagram from_labels(const std::vector<std::vector<int>>& labels);

  std::size_t rank() const { return rank_; }
  int label(std::size_t i, std::size_t j) const { return labels_[i * rank_ + j]; }
  void set_label(std::size_t i, std::size_t j, int m);

  CoxeterDiagram induced(const std::vector<std::size_t>& vertices) const;
  bool connected() const;
  /// Vertex sets of the connected components, each sorted.
  std::vector<std::vector<std::size_t>> components() const;

  /// Upper-triangle labels, row by row.
  std::vector<int> upper_triangle() const;
  /// Lexicographically minimal upper triangle over all vertex permutations.
  std::vector<int> canonical_form() const;
  CoxeterDiagram canonical() const;
  bool isomorphic(const CoxeterDiagram& o) const;

  /// Text format: "rank = n" then "edge i j m" lines (1-based, label-2 pairs omitted).
  std::string to_text() const;
  static CoxeterDiagram parse(std::istream& in);
  static CoxeterDiagram parse_text(const std::string& text);

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<int> labels_;
};

/// The pentagon diagram: cycle 1-2-3-4-5-1 with label 4 on {1,2}, 3 elsewhere.
CoxeterDiagram pentagon_diagram();
/// Path diagram with the given consecutive labels (so rank = labels.size() + 1).
CoxeterDiagram path_diagram(const std::vector<int>& labels);

struct CartanMatrix {
  enum class Kind { symmetric_standard, vinberg_compatible };
  AlgMatrix entries;
  Kind kind = Kind::symmetric_standard;

  std::size_t rank() const { return entries.rows(); }
  bool is_integral() const;
  /// Integer entries; throws if some entry is not an integer.
  IntMatrix to_integer() const;
  static CartanMatrix from_integer(const IntMatrix& m);
};

struct SignatureReport {
  std::size_t positives = 0, zeros = 0, negatives = 0;
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

enum class CartanType { positive, zero, negative };
const char* to_string(CartanType t);

struct CartanTypeResult {
  CartanType type;
  /// Positive witness vector u with Au > 0, = 0 or < 0 respectively.
  std::vector<AlgNum> witness;
  /// Largest achievable margin min(u_i, |(Au)_i|) with sum(u) = 1 (0 for the zero type).
  AlgNum margin;
};

struct SubdiagramClass {
  std::vector<std::size_t> vertices;
  SignatureReport signature;
  bool elliptic = false;
};

struct GaloisConjugateReport {
  GaloisMap map;
  SignatureReport signature;
  bool positive_definite = false;
};

struct ArithmeticityReport {
  /// Human-readable name of the field generated by the Cartan entries, e.g. "Q(sqrt(2))".
  std::string field;
  /// Radicands generating that field (empty for Q).
  std::vector<int> field_generators;
  std::vector<GaloisConjugateReport> conjugates;
  bool all_conjugates_positive_definite = true;
};

/// Entries A_ii = 2, A_ij = -2 cos(π / m_ij).
CartanMatrix cartan_from_diagram(const CoxeterDiagram& d);

/// Sylvester inertia by exact symmetric congruence reduction.
SignatureReport signature(const AlgMatrix& m);
SignatureReport signature(const RatMatrix& m);

bool is_elliptic(const CoxeterDiagram& d);
/// Every proper nonempty vertex subset, ordered by size then lexicographically.
std::vector<SubdiagramClass> classify_subdiagrams(const CoxeterDiagram& d);
bool is_lanner(const CoxeterDiagram& d);

/// Connected Lannér diagrams of the given rank (4, 5 or 6), one per isomorphism
/// class, in increasing order of canonical form.
std::vector<CoxeterDiagram> enumerate_lanner(std::size_t rank);
/// Keeps the diagrams whose labels all satisfy 4cos²(π/m) ∈ Z, i.e. m ∈ {2,3,4,6}.
std::vector<CoxeterDiagram> integrality_filter(const std::vector<CoxeterDiagram>& ds);

ArithmeticityReport arithmeticity_report(const CoxeterDiagram& d);
ArithmeticityReport arithmeticity_report(const AlgMatrix& symmetric_cartan);

/// Vinberg's trichotomy for an indecomposable Cartan matrix.
CartanTypeResult cartan_type(const CartanMatrix& a);

/// A_ij A_ji = 4 cos²(π/m_ij) and A_ij = 0 iff A_ji = 0, for all i != j.
bool is_compatible(const CartanMatrix& a, const CoxeterDiagram& d);

}  // namespace vinwit
