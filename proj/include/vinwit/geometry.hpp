#pragma once

// Orbits of the reflection group on R^5, half-space witnesses that an orbit
// lies in a properly convex cone, and float sampling of the limit set.
//
// Everything up to the properness witness is exact; floats only appear in
// limit_set_sample and render, and never flow back.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vinwit/vinberg.hpp"

namespace vinwit {

using IntVector = std::vector<Integer>;

IntVector act_on(const IntMatrix& m, const IntVector& v);
/// Divides by the (positive) gcd of the entries; keeps the direction.
IntVector primitive(const IntVector& v);
/// Primitive with first nonzero entry positive: the projective class key.
IntVector projective_key(const IntVector& v);
Integer pairing(const IntVector& w, const IntVector& x);

struct SeedVector {
  IntVector u;
  IntVector image;  // A u, entrywise negative
};

/// Positive integer u with A u < 0. Throws InvalidInput unless A is of negative type.
SeedVector negative_type_seed(const CartanMatrix& a);

/// A point in the open fundamental chamber of the integer representation:
/// u > 0 with A^T u < 0, i.e. every simple root is negative on u.
SeedVector chamber_seed(const CartanMatrix& a);

struct OrbitCloud {
  /// Primitive representatives, oriented as images of the seed (no sign flip).
  std::vector<IntVector> points;
  /// Word length at which each point was first reached.
  std::vector<std::size_t> depth_of;
  /// A word (0-based generator indices) reaching each point.
  std::vector<Word> words;
  std::size_t depth = 0;
  bool truncated = false;  // point ceiling hit; closure not guaranteed
  /// Depth at which some image was the negative of a stored point, if ever.
  /// Such a cloud lies in no open half-space.
  std::optional<std::size_t> antipodal_depth;
};

struct OrbitBudget {
  std::size_t max_depth = 10;
  std::size_t max_points = 2000000;
};

/// Images of the seed under all words of length <= depth, deduplicated projectively.
OrbitCloud orbit(const std::vector<GroupElement>& gens, const IntVector& seed, std::size_t depth,
                 const OrbitBudget& budget = {});

/// Every generator maps each point of depth < cloud.depth into the cloud.
bool orbit_closed(const OrbitCloud& cloud, const std::vector<GroupElement>& gens);

struct ProperWitness {
  bool found = false;
  IntVector w;          // primitive integer functional, <w, x> >= 1 on the cloud
  Integer margin = 0;   // min <w, x> over the cloud
  /// When not found: least depth whose sub-cloud admits no witness.
  std::size_t violating_depth = 0;
  std::size_t lp_rounds = 0;
};

ProperWitness properness_witness(const OrbitCloud& cloud);
/// Exact recheck of <w, x> >= 1 for every stored point.
bool revalidate_witness(const OrbitCloud& cloud, const IntVector& w);

/// Two commuting hyperbolic matrices B (+) I_3 and -(B (+) I_3), B = [[2,1],[1,1]];
/// their orbits contain antipodal vectors, so no half-space witness exists.
std::vector<GroupElement> nonconvex_toy_generators();

struct LimitPoint {
  std::vector<double> x;  // unit vector
  Word word;
  bool proximal = false;
  double gap_ratio = 1.0;  // |lambda_1| / |lambda_2|
  bool converged = false;
  std::size_t iterations = 0;
};

struct SampleConfig {
  std::size_t count = 200;
  std::size_t word_length = 40;
  std::uint64_t seed = 1;
  /// When present, each point is oriented so that <w, x> > 0.
  std::optional<IntVector> chart;
  /// Point in the open fundamental chamber of reflection generators. When
  /// present, words are geodesic in the Coxeter group: s may follow w only
  /// if l(ws) > l(w). Otherwise words only avoid immediate repeats of
  /// involutions, and many collapse to short or finite-order elements.
  std::optional<IntVector> chamber;
};

/// Dominant eigendirection by power iteration on the exact product of a
/// pseudorandom word, with an eigenvalue-gap proximality flag.
std::vector<LimitPoint> limit_set_sample(const std::vector<GroupElement>& gens, const SampleConfig& cfg);

struct RenderOptions {
  /// Chart functional; defaults to (1,...,1) when absent.
  std::optional<IntVector> chart;
  std::size_t axis_u = 0, axis_v = 1;
};

struct RenderResult {
  std::string svg;
  std::string csv;
  std::vector<std::string> warnings;
};

/// SVG scatter of coordinates (axis_u, axis_v) in the affine chart <w, x> = 1,
/// plus CSV: x1..x5, chart_u, chart_v, word, proximal.
RenderResult render(const std::vector<LimitPoint>& points, const RenderOptions& opt = {});

}  // namespace vinwit
