#include "vinwit/coxeter.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "vinwit/error.hpp"
#include "vinwit/lp.hpp"

namespace vinwit {

// ---------------------------------------------------------------- diagrams

CoxeterDiagram::CoxeterDiagram(std::size_t rank) : rank_(rank), labels_(rank * rank, 2) {
  for (std::size_t i = 0; i < rank; ++i) labels_[i * rank + i] = 1;
}

CoxeterDiagram CoxeterDiagram::from_labels(const std::vector<std::vector<int>>& labels) {
  CoxeterDiagram d(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].size() != labels.size()) throw InvalidInput("CoxeterDiagram: label matrix not square");
    if (labels[i][i] != 1) throw InvalidInput("CoxeterDiagram: diagonal labels must be 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i][j] != labels[j][i]) throw InvalidInput("CoxeterDiagram: label matrix not symmetric");
      d.set_label(i, j, labels[i][j]);
    }
  }
  return d;
}

void CoxeterDiagram::set_label(std::size_t i, std::size_t j, int m) {
  if (i >= rank_ || j >= rank_ || i == j) throw InvalidInput("CoxeterDiagram: bad vertex pair");
  if (m < 2 || m > 6)
    throw InvalidInput("CoxeterDiagram: label " + std::to_string(m) + " unsupported; supported labels are {2, 3, 4, 5, 6}");
  labels_[i * rank_ + j] = m;
  labels_[j * rank_ + i] = m;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<std::size_t>& vertices) const {
  CoxeterDiagram d(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b) d.set_label(a, b, label(vertices[a], vertices[b]));
  return d;
}

std::vector<std::vector<std::size_t>> CoxeterDiagram::components() const {
  std::vector<int> comp(rank_, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < rank_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < rank_; ++w)
        if (w != v && comp[w] < 0 && label(v, w) != 2) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool CoxeterDiagram::connected() const { return rank_ > 0 && components().size() == 1; }

std::vector<int> CoxeterDiagram::upper_triangle() const {
  std::vector<int> out;
  out.reserve(rank_ * (rank_ - 1) / 2);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j) out.push_back(label(i, j));
  return out;
}

std::vector<int> CoxeterDiagram::canonical_form() const {
  std::vector<std::size_t> perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = upper_triangle(), cur(best.size());
  do {
    std::size_t k = 0;
    bool smaller = false, larger = false;
    for (std::size_t i = 0; i < rank_ && !larger && !smaller; ++i)
      for (std::size_t j = i + 1; j < rank_; ++j, ++k) {
        cur[k] = label(perm[i], perm[j]);
        if (cur[k] != best[k]) {
          (cur[k] < best[k] ? smaller : larger) = true;
          break;
        }
      }
    if (smaller) {
      k = 0;
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j) best[k++] = label(perm[i], perm[j]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CoxeterDiagram CoxeterDiagram::canonical() const {
  auto form = canonical_form();
  CoxeterDiagram d(rank_);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j) d.set_label(i, j, form[k++]);
  return d;
}

bool CoxeterDiagram::isomorphic(const CoxeterDiagram& o) const {
  return rank_ == o.rank_ && canonical_form() == o.canonical_form();
}

std::string CoxeterDiagram::to_text() const {
  std::ostringstream out;
  out << "rank = " << rank_ << "\n";
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (label(i, j) != 2) out << "edge " << i + 1 << " " << j + 1 << " " << label(i, j) << "\n";
  return out.str();
}

CoxeterDiagram CoxeterDiagram::parse(std::istream& in) {
  std::optional<CoxeterDiagram> d;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "rank") {
      std::string eq;
      long n = 0;
      if (!(ls >> eq) || eq != "=" || !(ls >> n) || n <= 0)
        throw ParseError("expected 'rank = n' with n >= 1", lineno);
      if (d) throw ParseError("duplicate rank line", lineno);
      d.emplace(static_cast<std::size_t>(n));
    } else if (word == "edge") {
      if (!d) throw ParseError("edge before rank line", lineno);
      long i = 0, j = 0, m = 0;
      if (!(ls >> i >> j >> m)) throw ParseError("expected 'edge i j m'", lineno);
      long n = static_cast<long>(d->rank());
      if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw ParseError("edge endpoints must be distinct vertices in 1.." + std::to_string(n), lineno);
      if (m < 2 || m > 6)
        throw ParseError("label " + std::to_string(m) + " unsupported; supported labels are {2, 3, 4, 5, 6}", lineno);
      d->set_label(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<int>(m));
    } else {
      throw ParseError("unknown directive '" + word + "'", lineno);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing text '" + rest + "'", lineno);
  }
  if (!d) throw ParseError("missing 'rank = n' line");
  return *d;
}

CoxeterDiagram CoxeterDiagram::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

CoxeterDiagram pentagon_diagram() {
  CoxeterDiagram d(5);
  d.set_label(0, 1, 4);
  d.set_label(1, 2, 3);
  d.set_label(2, 3, 3);
  d.set_label(3, 4, 3);
  d.set_label(4, 0, 3);
  return d;
}

CoxeterDiagram path_diagram(const std::vector<int>& labels) {
  CoxeterDiagram d(labels.size() + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) d.set_label(i, i + 1, labels[i]);
  return d;
}

// ---------------------------------------------------------------- Cartan matrices

bool CartanMatrix::is_integral() const {
  for (const auto& x : entries.data())
    if (!x.is_rational() || x.rational_part().get_den() != 1) return false;
  return true;
}

IntMatrix CartanMatrix::to_integer() const {
  if (!is_integral()) throw InvalidInput("Cartan matrix has non-integer entries");
  return entries.map([](const AlgNum& x) { return Integer(x.rational_part().get_num()); });
}

CartanMatrix CartanMatrix::from_integer(const IntMatrix& m) {
  return {to_field(m), CartanMatrix::Kind::vinberg_compatible};
}

CartanMatrix cartan_from_diagram(const CoxeterDiagram& d) {
  std::size_t n = d.rank();
  AlgMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      AlgNum v = -(AlgNum(2) * cos_pi_over(d.label(i, j)));
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return {std::move(a), CartanMatrix::Kind::symmetric_standard};
}

bool is_compatible(const CartanMatrix& a, const CoxeterDiagram& d) {
  std::size_t n = d.rank();
  if (a.rank() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.entries(i, i) == AlgNum(2))) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const AlgNum &x = a.entries(i, j), &y = a.entries(j, i);
      if (x.is_zero() != y.is_zero()) return false;
      if (x.sign() > 0 || y.sign() > 0) return false;
      AlgNum c = cos_pi_over(d.label(i, j));
      if (!(x * y == AlgNum(4) * c * c)) return false;
    }
  }
  return true;
}

const char* to_string(CartanType t) {
  switch (t) {
    case CartanType::positive:
      return "positive";
    case CartanType::zero:
      return "zero";
    case CartanType::negative:
      return "negative";
  }
  return "?";
}

// ---------------------------------------------------------------- signature

namespace {

template <class T>
SignatureReport congruence_signature(Matrix<T> m) {
  if (!m.is_symmetric()) throw InvalidInput("signature: matrix is not symmetric");
  SignatureReport rep;
  std::vector<std::size_t> live(m.rows());
  std::iota(live.begin(), live.end(), 0);
  auto count = [&rep](int s) {
    if (s > 0)
      ++rep.positives;
    else if (s < 0)
      ++rep.negatives;
    else
      ++rep.zeros;
  };
  while (!live.empty()) {
    // Prefer a nonzero diagonal pivot.
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return !is_zero(m(i, i)); });
    if (diag != live.end()) {
      std::size_t p = *diag;
      T piv = m(p, p);
      count(sign_of(piv));
      live.erase(diag);
      T inv = T(1) / piv;
      for (std::size_t i : live) {
        if (is_zero(m(i, p))) continue;
        T f = m(i, p) * inv;
        for (std::size_t j : live) m(i, j) -= f * m(p, j);
      }
      continue;
    }
    // Zero diagonal: look for a hyperbolic pair.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < live.size() && !pair; ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (!is_zero(m(live[a], live[b]))) {
          pair.emplace(live[a], live[b]);
          break;
        }
    if (!pair) {
      rep.zeros += live.size();
      break;
    }
    auto [p, q] = *pair;
    ++rep.positives;
    ++rep.negatives;
    T inv = T(1) / m(p, q);
    live.erase(std::remove_if(live.begin(), live.end(), [&](std::size_t i) { return i == p || i == q; }), live.end());
    // Schur complement of [[0, b], [b, 0]]: M -= (c_p c_q^T + c_q c_p^T) / b.
    std::vector<T> cp, cq;
    for (std::size_t i : live) {
      cp.push_back(m(i, p));
      cq.push_back(m(i, q));
    }
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = 0; b < live.size(); ++b) {
        T corr = (cp[a] * cq[b] + cq[a] * cp[b]) * inv;
        if (!is_zero(corr)) m(live[a], live[b]) -= corr;
      }
  }
  return rep;
}

std::uint64_t label_key(const CoxeterDiagram& d, const std::vector<std::size_t>& vs) {
  std::uint64_t key = vs.size();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) key = key * 8 + static_cast<std::uint64_t>(d.label(vs[a], vs[b]));
  return key;
}

/// Memoised ellipticity of induced subdiagrams, keyed by their label pattern.
class EllipticCache {
 public:
  bool elliptic(const CoxeterDiagram& d, const std::vector<std::size_t>& vs) {
    if (vs.size() <= 2) return true;  // dihedral groups with finite labels are finite
    std::uint64_t key = label_key(d, vs);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool e = is_elliptic(d.induced(vs));
    cache_.emplace(key, e);
    return e;
  }

 private:
  std::unordered_map<std::uint64_t, bool> cache_;
};

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CoxeterDiagram extend(const CoxeterDiagram& base, const std::vector<int>& new_labels) {
  std::size_t n = base.rank();
  CoxeterDiagram d(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.set_label(i, j, base.label(i, j));
  for (std::size_t i = 0; i < n; ++i) d.set_label(i, n, new_labels[i]);
  return d;
}

// Calls f for every vector in {2,...,6}^len.
template <class F>
void for_each_label_vector(std::size_t len, F&& f) {
  std::vector<int> v(len, 2);
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < len && v[i] == 6) v[i++] = 2;
    if (i == len) return;
    ++v[i];
  }
}

// Elliptic diagrams of the given rank, one per isomorphism class.
std::vector<CoxeterDiagram> elliptic_classes(std::size_t rank, EllipticCache& cache) {
  if (rank == 1) return {CoxeterDiagram(1)};
  std::vector<CoxeterDiagram> out;
  std::set<std::vector<int>> seen;
  std::vector<std::size_t> all(rank);
  std::iota(all.begin(), all.end(), 0);
  for (const auto& base : elliptic_classes(rank - 1, cache))
    for_each_label_vector(rank - 1, [&](const std::vector<int>& v) {
      CoxeterDiagram d = extend(base, v);
      if (!cache.elliptic(d, all)) return;
      auto form = d.canonical_form();
      if (seen.insert(form).second) out.push_back(d.canonical());
    });
  return out;
}

}  // namespace

SignatureReport signature(const AlgMatrix& m) { return congruence_signature(m); }
SignatureReport signature(const RatMatrix& m) { return congruence_signature(m); }

bool is_elliptic(const CoxeterDiagram& d) {
  return signature(cartan_from_diagram(d).entries) == SignatureReport{d.rank(), 0, 0};
}

std::vector<SubdiagramClass> classify_subdiagrams(const CoxeterDiagram& d) {
  if (d.rank() > 12) throw InvalidInput("classify_subdiagrams: rank above 12 unsupported");
  std::vector<SubdiagramClass> out;
  AlgMatrix a = cartan_from_diagram(d).entries;
  for (std::size_t k = 1; k < d.rank(); ++k)
    for (auto& vs : subsets_of_size(d.rank(), k)) {
      SubdiagramClass c;
      c.signature = signature(a.principal(vs));
      c.elliptic = c.signature == SignatureReport{k, 0, 0};
      c.vertices = std::move(vs);
      out.push_back(std::move(c));
    }
  return out;
}

bool is_lanner(const CoxeterDiagram& d) {
  if (!d.connected()) throw InvalidInput("is_lanner: diagram is disconnected");
  std::size_t n = d.rank();
  if (signature(cartan_from_diagram(d).entries) != SignatureReport{n - 1, 0, 1}) return false;
  for (const auto& c : classify_subdiagrams(d))
    if (!c.elliptic) return false;
  return true;
}

std::vector<CoxeterDiagram> enumerate_lanner(std::size_t rank) {
  if (rank < 4 || rank > 6) throw InvalidInput("enumerate_lanner: rank must be 4, 5 or 6");
  EllipticCache cache;
  // Deleting the last vertex of a Lannér diagram leaves an elliptic diagram, so
  // it suffices to extend one representative per elliptic isomorphism class.
  auto bases = elliptic_classes(rank - 1, cache);
  std::vector<std::vector<std::vector<std::size_t>>> proper_with_last;
  for (std::size_t k = 3; k < rank; ++k) {
    std::vector<std::vector<std::size_t>> group;
    for (auto vs : subsets_of_size(rank - 1, k - 1)) {
      vs.push_back(rank - 1);
      group.push_back(std::move(vs));
    }
    proper_with_last.push_back(std::move(group));
  }
  std::set<std::vector<int>> seen;
  for (const auto& base : bases)
    for_each_label_vector(rank - 1, [&](const std::vector<int>& v) {
      CoxeterDiagram d = extend(base, v);
      if (!d.connected()) return;
      for (const auto& group : proper_with_last)
        for (const auto& vs : group)
          if (!cache.elliptic(d, vs)) return;
      if (signature(cartan_from_diagram(d).entries) != SignatureReport{rank - 1, 0, 1}) return;
      seen.insert(d.canonical_form());
    });
  std::vector<CoxeterDiagram> out;
  for (const auto& form : seen) {
    CoxeterDiagram d(rank);
    std::size_t k = 0;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i + 1; j < rank; ++j) d.set_label(i, j, form[k++]);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<CoxeterDiagram> integrality_filter(const std::vector<CoxeterDiagram>& ds) {
  std::vector<CoxeterDiagram> out;
  for (const auto& d : ds) {
    auto tri = d.upper_triangle();
    if (std::none_of(tri.begin(), tri.end(), [](int m) { return m == 5; })) out.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------- arithmeticity

ArithmeticityReport arithmeticity_report(const AlgMatrix& a) {
  // Span (under XOR) of the masks carried by the entries = Galois group dual
  // of the entry field.
  std::vector<unsigned> basis;
  auto in_span = [&](unsigned mask) {
    for (unsigned sub = 0; sub < (1u << basis.size()); ++sub) {
      unsigned x = 0;
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (sub & (1u << b)) x ^= basis[b];
      if (x == mask) return true;
    }
    return false;
  };
  unsigned support = 0;
  for (const auto& x : a.data()) support |= x.support();
  for (std::size_t pub = 1; pub < AlgNum::kDim; ++pub) {
    unsigned mask = AlgNum::kPublicToMask[pub];
    if ((support & (1u << mask)) && !in_span(mask)) basis.push_back(mask);
  }
  ArithmeticityReport rep;
  if (basis.empty()) {
    rep.field = "Q";
  } else {
    rep.field = "Q(";
    for (std::size_t b = 0; b < basis.size(); ++b) {
      int r = AlgNum::kRadicandOfMask[basis[b]];
      rep.field_generators.push_back(r);
      rep.field += (b ? ", sqrt(" : "sqrt(") + std::to_string(r) + ")";
    }
    rep.field += ")";
  }
  std::set<std::vector<int>> characters;
  for (const auto& g : GaloisMap::all()) {
    std::vector<int> chi;
    bool trivial = true;
    for (unsigned m : basis) {
      chi.push_back(g.sign_on_mask(m));
      trivial = trivial && chi.back() == 1;
    }
    if (trivial || !characters.insert(chi).second) continue;
    GaloisConjugateReport c;
    c.map = g;
    c.signature = signature(a.map([&](const AlgNum& x) { return x.apply(g); }));
    c.positive_definite = c.signature == SignatureReport{a.rows(), 0, 0};
    rep.all_conjugates_positive_definite = rep.all_conjugates_positive_definite && c.positive_definite;
    rep.conjugates.push_back(c);
  }
  return rep;
}

ArithmeticityReport arithmeticity_report(const CoxeterDiagram& d) {
  return arithmeticity_report(cartan_from_diagram(d).entries);
}

// ---------------------------------------------------------------- Vinberg type

CartanTypeResult cartan_type(const CartanMatrix& cm) {
  const AlgMatrix& a = cm.entries;
  std::size_t n = a.rows();
  if (n == 0 || !a.is_square()) throw InvalidInput("cartan_type: empty or non-square matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a(i, i) == AlgNum(2))) throw InvalidInput("cartan_type: diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a(i, j).sign() > 0) throw InvalidInput("cartan_type: positive off-diagonal entry");
  }
  // Indecomposability: the graph of nonzero off-diagonal entries is connected.
  CoxeterDiagram pattern(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!a(i, j).is_zero() || !a(j, i).is_zero()) pattern.set_label(i, j, 3);
  auto comps = pattern.components();
  if (comps.size() > 1) {
    std::string msg = "cartan_type: matrix is decomposable, components:";
    for (const auto& c : comps) {
      msg += " {";
      for (std::size_t k = 0; k < c.size(); ++k) msg += (k ? "," : "") + std::to_string(c[k] + 1);
      msg += "}";
    }
    throw InvalidInput(msg);
  }

  // Variables (u_1..u_n, t) >= 0; maximise t.
  auto solve = [&](CartanType type) {
    std::vector<std::vector<AlgNum>> rows;
    std::vector<AlgNum> rhs;
    auto row = [&](std::vector<AlgNum> r, AlgNum b) {
      rows.push_back(std::move(r));
      rhs.push_back(std::move(b));
    };
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<AlgNum> r(n + 1);
      r[i] = -1;
      r[n] = 1;
      row(r, 0);  // t <= u_i
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<AlgNum> au(n + 1);
      for (std::size_t j = 0; j < n; ++j) au[j] = a(i, j);
      std::vector<AlgNum> neg = au;
      for (auto& x : neg) x = -x;
      switch (type) {
        case CartanType::negative:  // (Au)_i + t <= 0
          au[n] = 1;
          row(au, 0);
          break;
        case CartanType::positive:  // -(Au)_i + t <= 0
          neg[n] = 1;
          row(neg, 0);
          break;
        case CartanType::zero:  // (Au)_i = 0
          row(au, 0);
          row(neg, 0);
          break;
      }
    }
    std::vector<AlgNum> sum(n + 1, 1), nsum(n + 1, -1);
    sum[n] = 0;
    nsum[n] = 0;
    row(sum, 1);
    row(nsum, -1);
    std::vector<AlgNum> obj(n + 1);
    obj[n] = 1;
    return maximize(rows, rhs, obj);
  };

  for (CartanType type : {CartanType::positive, CartanType::zero, CartanType::negative}) {
    auto res = solve(type);
    if (res.status != LpStatus::optimal || res.value.sign() <= 0) continue;
    CartanTypeResult out{type, {}, res.value};
    out.witness.assign(res.x.begin(), res.x.begin() + static_cast<long>(n));
    return out;
  }
  throw InvalidInput("cartan_type: no type certificate found (matrix is not a Cartan matrix)");
}

}  // namespace vinwit
