#include "vinwit/coset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "vinwit/error.hpp"

namespace vinwit {

// ---------------------------------------------------------------- CosetTable

CosetTable::CosetTable(std::vector<std::vector<int>> action) : action_(std::move(action)) {
  std::size_t n = index();
  inverse_.assign(action_.size(), std::vector<int>(n, -1));
  for (std::size_t g = 0; g < action_.size(); ++g) {
    if (action_[g].size() != n) throw InvalidInput("CosetTable: rows of different length");
    for (std::size_t c = 0; c < n; ++c) {
      int d = action_[g][c];
      if (d < 0 || static_cast<std::size_t>(d) >= n || inverse_[g][static_cast<std::size_t>(d)] != -1)
        throw InvalidInput("CosetTable: generator " + std::to_string(g + 1) + " does not act as a permutation");
      inverse_[g][static_cast<std::size_t>(d)] = static_cast<int>(c);
    }
  }
}

int CosetTable::act(int coset, int letter) const {
  auto g = static_cast<std::size_t>(letter_generator(letter));
  return letter > 0 ? action_[g][static_cast<std::size_t>(coset)] : inverse_[g][static_cast<std::size_t>(coset)];
}

int CosetTable::act(int coset, const FreeWord& w) const {
  for (int x : w) coset = act(coset, x);
  return coset;
}

bool CosetTable::valid_for(const Presentation& p) const {
  if (generators() != p.generators()) return false;
  for (std::size_t c = 0; c < index(); ++c)
    for (const auto& r : p.relators())
      if (act(static_cast<int>(c), r) != static_cast<int>(c)) return false;
  return true;
}

namespace {

// Column layout shared by the enumerators: generator g owns column 2g and,
// unless it is an involution, column 2g + 1 for its inverse.
struct Columns {
  explicit Columns(const Presentation& p) : pres(&p) {
    for (std::size_t g = 0; g < p.generators(); ++g) {
      active.push_back(static_cast<int>(2 * g));
      if (!p.is_involution(g)) active.push_back(static_cast<int>(2 * g + 1));
    }
  }
  int of(int letter) const {
    auto g = static_cast<std::size_t>(letter_generator(letter));
    if (pres->is_involution(g) || letter > 0) return static_cast<int>(2 * g);
    return static_cast<int>(2 * g + 1);
  }
  int inverse(int col) const {
    auto g = static_cast<std::size_t>(col / 2);
    return pres->is_involution(g) ? col : (col ^ 1);
  }
  std::vector<int> to_cols(const FreeWord& w) const {
    std::vector<int> out;
    for (int x : pres->reduce(w)) out.push_back(of(x));
    return out;
  }
  std::size_t width() const { return 2 * pres->generators(); }

  const Presentation* pres;
  std::vector<int> active;
};

CosetTable table_from_rows(const std::vector<std::vector<int>>& rows, std::size_t ngens) {
  std::vector<std::vector<int>> action(ngens, std::vector<int>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c)
    for (std::size_t g = 0; g < ngens; ++g) action[g][c] = rows[c][2 * g];
  return CosetTable(std::move(action));
}

// Renumbers cosets in order of first appearance scanning rows then columns.
std::vector<std::vector<int>> standardize(const std::vector<std::vector<int>>& rows, const Columns& cols) {
  std::size_t n = rows.size();
  std::vector<int> order{0}, label(n, -1);
  label[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x : cols.active) {
      int d = rows[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(x)];
      if (label[static_cast<std::size_t>(d)] < 0) {
        label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  std::vector<std::vector<int>> out(n, std::vector<int>(cols.width(), -1));
  for (std::size_t c = 0; c < n; ++c)
    for (int x : cols.active) {
      int d = rows[c][static_cast<std::size_t>(x)];
      out[static_cast<std::size_t>(label[c])][static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(d)];
    }
  return out;
}

// ---------------------------------------------------------------- HLT

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets) : cols_(p), max_(max_cosets) {
    for (const auto& r : p.relators()) relators_.push_back(cols_.to_cols(r));
    new_row();
  }

  // Returns false on resource limit.
  bool run(const std::vector<FreeWord>& subgens) {
    for (const auto& w : subgens)
      if (!scan_and_fill(0, cols_.to_cols(w))) return false;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        if (!scan_and_fill(c, r)) return false;
      }
      if (!alive(c)) continue;
      for (int x : cols_.active) {
        if (!alive(c)) break;
        if (table_[c][static_cast<std::size_t>(x)] < 0 && !define(c, x)) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<int>> live_rows() const {
    std::vector<int> label(table_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) label[c] = k++;
    std::vector<std::vector<int>> out;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      std::vector<int> row(cols_.width(), -1);
      for (int x : cols_.active) row[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(table_[c][static_cast<std::size_t>(x)])];
      out.push_back(std::move(row));
    }
    return out;
  }

  const Columns& columns() const { return cols_; }
  std::size_t peak() const { return peak_; }
  std::size_t defined() const { return table_.size(); }

 private:
  bool alive(std::size_t c) const { return forward_[c] == static_cast<int>(c); }

  void new_row() {
    table_.emplace_back(cols_.width(), -1);
    forward_.push_back(static_cast<int>(forward_.size()));
    ++live_;
    peak_ = std::max(peak_, live_);
  }

  bool define(std::size_t c, int x) {
    if (live_ >= max_) {
      lookahead();
      if (!alive(c) || table_[c][static_cast<std::size_t>(x)] >= 0) return true;
      if (live_ >= max_) return false;
    }
    std::size_t d = table_.size();
    new_row();
    table_[c][static_cast<std::size_t>(x)] = static_cast<int>(d);
    table_[d][static_cast<std::size_t>(cols_.inverse(x))] = static_cast<int>(c);
    return true;
  }

  // Relator scan from every live coset without defining anything new.
  void lookahead() {
    for (std::size_t c = 0; c < table_.size(); ++c)
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r, false);
      }
  }

  bool scan_and_fill(std::size_t c, const std::vector<int>& w) { return scan(c, w, true); }

  // Returns false only on resource limit.
  bool scan(std::size_t c, const std::vector<int>& w, bool fill) {
    if (w.empty()) return true;
    for (;;) {
      int f = static_cast<int>(c), b = static_cast<int>(c);
      std::size_t i = 0, j = w.size();
      while (i < j && table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w[i])] >= 0)
        f = table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w[i++])];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(cols_.inverse(w[j - 1]))] >= 0)
        b = table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(cols_.inverse(w[--j]))];
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(w[i])] = b;
        table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(cols_.inverse(w[i]))] = f;
        return true;
      }
      if (!fill) return true;
      if (!define(static_cast<std::size_t>(f), w[i])) return false;
      if (!alive(c)) return true;
    }
  }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      int next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      for (int x : cols_.active) {
        int f = table_[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)];
        if (f < 0) continue;
        int xi = cols_.inverse(x);
        if (table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(xi)] == e)
          table_[static_cast<std::size_t>(f)][static_cast<std::size_t>(xi)] = -1;
        int e1 = rep(e), f1 = rep(f);
        int ex = table_[static_cast<std::size_t>(e1)][static_cast<std::size_t>(x)];
        int fxi = table_[static_cast<std::size_t>(f1)][static_cast<std::size_t>(xi)];
        if (ex >= 0) {
          merge(f1, ex, queue);
        } else if (fxi >= 0) {
          merge(e1, fxi, queue);
        } else {
          table_[static_cast<std::size_t>(e1)][static_cast<std::size_t>(x)] = f1;
          table_[static_cast<std::size_t>(f1)][static_cast<std::size_t>(xi)] = e1;
        }
      }
    }
  }

  Columns cols_;
  std::size_t max_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
  std::size_t live_ = 0, peak_ = 0;
};

// ---------------------------------------------------------------- Sims search

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index, std::size_t budget)
      : cols_(p), max_(max_index), budget_(budget) {
    for (const auto& r : p.relators()) relators_.push_back(cols_.to_cols(r));
  }

  LowIndexResult run() {
    State s;
    s.n = 1;
    s.rows.assign(max_, std::vector<int>(cols_.width(), -1));
    recurse(s);
    std::sort(result_.tables.begin(), result_.tables.end());
    if (aborted_) result_.status = EnumerationStatus::resource_limit;
    result_.nodes = nodes_;
    return std::move(result_);
  }

 private:
  struct State {
    std::size_t n = 0;
    std::vector<std::vector<int>> rows;
  };

  int& at(State& s, int c, int x) { return s.rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  bool set(State& s, int c, int x, int d) {
    int xi = cols_.inverse(x);
    int& fwd = at(s, c, x);
    int& back = at(s, d, xi);
    if (fwd >= 0 && fwd != d) return false;
    if (back >= 0 && back != c) return false;
    fwd = d;
    back = c;
    return true;
  }

  // Scans every relator from every coset, filling forced entries.
  bool deduce(State& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c0 = 0; c0 < s.n; ++c0)
        for (const auto& w : relators_) {
          int f = static_cast<int>(c0), b = static_cast<int>(c0);
          std::size_t i = 0, j = w.size();
          while (i < j && at(s, f, w[i]) >= 0) f = at(s, f, w[i++]);
          if (i == j) {
            if (f != b) return false;
            continue;
          }
          while (j > i && at(s, b, cols_.inverse(w[j - 1])) >= 0) b = at(s, b, cols_.inverse(w[--j]));
          if (j == i) {
            if (f != b) return false;
            continue;
          }
          if (j == i + 1) {
            if (!set(s, f, w[i], b)) return false;
            changed = true;
          }
        }
    }
    return true;
  }

  // False if rebasing at some coset yields a lexicographically smaller table.
  bool canonical(const State& s) const {
    std::vector<int> to_new(s.n), to_old(s.n);
    for (std::size_t base = 1; base < s.n; ++base) {
      std::fill(to_new.begin(), to_new.end(), -1);
      to_new[base] = 0;
      to_old[0] = static_cast<int>(base);
      std::size_t next = 1;
      bool decided = false;
      for (std::size_t c = 0; c < s.n && !decided; ++c) {
        if (c >= next) break;
        for (int x : cols_.active) {
          int a = s.rows[c][static_cast<std::size_t>(x)];
          int e_old = s.rows[static_cast<std::size_t>(to_old[c])][static_cast<std::size_t>(x)];
          if (a < 0 || e_old < 0) {
            decided = true;
            break;
          }
          if (to_new[static_cast<std::size_t>(e_old)] < 0) {
            to_new[static_cast<std::size_t>(e_old)] = static_cast<int>(next);
            to_old[next++] = e_old;
          }
          int e = to_new[static_cast<std::size_t>(e_old)];
          if (e < a) return false;
          if (e > a) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void recurse(State& s) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (!deduce(s) || !canonical(s)) return;
    for (std::size_t c = 0; c < s.n; ++c)
      for (int x : cols_.active) {
        if (s.rows[c][static_cast<std::size_t>(x)] >= 0) continue;
        int xi = cols_.inverse(x);
        for (std::size_t d = 0; d < s.n; ++d) {
          if (s.rows[d][static_cast<std::size_t>(xi)] >= 0) continue;
          State t = s;
          if (set(t, static_cast<int>(c), x, static_cast<int>(d))) recurse(t);
          if (aborted_) return;
        }
        if (s.n < max_) {
          State t = s;
          ++t.n;
          set(t, static_cast<int>(c), x, static_cast<int>(s.n));
          recurse(t);
        }
        return;
      }
    // Complete table.
    std::vector<std::vector<int>> rows(s.rows.begin(), s.rows.begin() + static_cast<long>(s.n));
    result_.tables.push_back(table_from_rows(rows, cols_.pres->generators()));
  }

  Columns cols_;
  std::size_t max_, budget_;
  std::vector<std::vector<int>> relators_;
  LowIndexResult result_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CosetEnumeration todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup_generators,
                              std::size_t max_cosets) {
  if (max_cosets == 0) throw InvalidInput("todd_coxeter: max_cosets must be positive");
  Enumerator e(p, max_cosets);
  CosetEnumeration out;
  bool ok = e.run(subgroup_generators);
  out.peak = e.peak();
  out.defined = e.defined();
  if (!ok) return out;
  auto rows = standardize(e.live_rows(), e.columns());
  CosetTable t = table_from_rows(rows, p.generators());
  for (const auto& w : subgroup_generators)
    if (t.act(0, p.reduce(w)) != 0) throw Error("todd_coxeter: internal error, subgroup generator moves coset 0");
  if (!t.valid_for(p)) throw Error("todd_coxeter: internal error, relator acts nontrivially");
  out.status = EnumerationStatus::complete;
  out.table = std::move(t);
  return out;
}

LowIndexResult low_index_subgroups(const Presentation& p, std::size_t max_index, std::size_t node_budget) {
  if (max_index == 0) throw InvalidInput("low_index_subgroups: max_index must be positive");
  return LowIndexSearch(p, max_index, node_budget).run();
}

std::vector<FreeWord> coset_representatives(const CosetTable& t, const Presentation& p) {
  std::vector<FreeWord> reps(t.index());
  std::vector<bool> seen(t.index(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::vector<int> letters;
  for (std::size_t g = 0; g < p.generators(); ++g) {
    letters.push_back(static_cast<int>(g + 1));
    if (!p.is_involution(g)) letters.push_back(-static_cast<int>(g + 1));
  }
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int x : letters) {
      int d = t.act(c, x);
      if (seen[static_cast<std::size_t>(d)]) continue;
      seen[static_cast<std::size_t>(d)] = true;
      reps[static_cast<std::size_t>(d)] = reps[static_cast<std::size_t>(c)];
      reps[static_cast<std::size_t>(d)].push_back(x);
      queue.push_back(d);
    }
  }
  return reps;
}

}  // namespace vinwit
