#pragma once

// Coset enumeration (HLT with lookahead) and low-index subgroup search (Sims).

#include <cstddef>
#include <optional>
#include <vector>

#include "vinwit/presentation.hpp"

namespace vinwit {

/// Complete action of the generators on the cosets of a finite-index subgroup.
/// Cosets are 0-based; coset 0 is the subgroup itself.
class CosetTable {
 public:
  CosetTable() = default;
  /// action[g][c] = coset c acted on by generator g; each row must be a permutation.
  explicit CosetTable(std::vector<std::vector<int>> action);

  std::size_t index() const { return action_.empty() ? 0 : action_[0].size(); }
  std::size_t generators() const { return action_.size(); }
  const std::vector<std::vector<int>>& action() const { return action_; }

  int act(int coset, int letter) const;
  int act(int coset, const FreeWord& w) const;

  /// Every relator fixes every coset and every generator row is a permutation.
  bool valid_for(const Presentation& p) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  friend bool operator<(const CosetTable& a, const CosetTable& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a.action_ < b.action_;
  }

 private:
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<int>> inverse_;
};

enum class EnumerationStatus { complete, resource_limit };

struct CosetEnumeration {
  EnumerationStatus status = EnumerationStatus::resource_limit;
  std::optional<CosetTable> table;
  /// Peak number of live cosets.
  std::size_t peak = 0;
  std::size_t defined = 0;
};

/// Enumerates cosets of the subgroup generated by `subgroup_generators`.
/// `max_cosets` bounds the number of simultaneously live cosets.
CosetEnumeration todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup_generators,
                              std::size_t max_cosets = 1000000);

struct LowIndexResult {
  EnumerationStatus status = EnumerationStatus::complete;
  /// One table per conjugacy class, ordered by index then table contents.
  std::vector<CosetTable> tables;
  std::size_t nodes = 0;
};

/// Conjugacy classes of subgroups of index <= max_index. `node_budget` caps the
/// number of search nodes; exceeding it returns resource_limit with the
/// classes found so far.
LowIndexResult low_index_subgroups(const Presentation& p, std::size_t max_index,
                                   std::size_t node_budget = 20000000);

/// BFS transversal words: reps[c] maps coset 0 to coset c.
std::vector<FreeWord> coset_representatives(const CosetTable& t, const Presentation& p);

}  // namespace vinwit
