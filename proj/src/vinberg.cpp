#include "vinwit/vinberg.hpp"

#include <algorithm>

#include "vinwit/error.hpp"
#include "vinwit/linalg.hpp"

namespace vinwit {

template <class T>
Matrix<T> reflection_matrix(const Matrix<T>& cartan, std::size_t i) {
  std::size_t n = cartan.rows();
  if (!cartan.is_square() || i >= n) throw InvalidInput("reflection_matrix: bad index or shape");
  if (!(cartan(i, i) == T(2)))
    throw InvalidInput("reflection_matrix: diagonal entry " + std::to_string(i + 1) + " is not 2");
  Matrix<T> g = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) g(i, k) -= cartan(k, i);
  return g;
}

template IntMatrix reflection_matrix(const IntMatrix&, std::size_t);
template AlgMatrix reflection_matrix(const AlgMatrix&, std::size_t);

std::vector<GroupElement> reflection_generators(const CartanMatrix& a) {
  IntMatrix m = a.to_integer();
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back({reflection_matrix(m, i), {static_cast<int>(i)}});
  return out;
}

std::vector<FieldElement> reflection_generators_field(const CartanMatrix& a) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back({reflection_matrix(a.entries, i), {static_cast<int>(i)}});
  return out;
}

std::optional<RelationEntry> RelationReport::first_failure() const {
  for (const auto& p : pairs)
    if (!p.pass) return p;
  return std::nullopt;
}

template <class T>
RelationReport verify_relations(const std::vector<Element<T>>& gens, const CoxeterDiagram& d, int cap) {
  if (gens.size() != d.rank()) throw InvalidInput("verify_relations: generator count differs from diagram rank");
  int max_label = 2;
  for (int m : d.upper_triangle()) max_label = std::max(max_label, m);
  if (cap < 2 * max_label) throw InvalidInput("verify_relations: cap must be at least twice the largest label");
  RelationReport rep;
  rep.cap = cap;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      RelationEntry e;
      e.i = i;
      e.j = j;
      e.expected = d.label(i, j);
      Matrix<T> prod = gens[i].matrix * gens[j].matrix;
      Matrix<T> power = prod;
      for (int k = 1; k <= cap; ++k) {
        if (power.is_identity()) {
          e.order = k;
          break;
        }
        power = power * prod;
      }
      e.pass = e.order && *e.order == e.expected;
      rep.all_pass = rep.all_pass && e.pass;
      rep.pairs.push_back(e);
    }
  return rep;
}

template RelationReport verify_relations(const std::vector<GroupElement>&, const CoxeterDiagram&, int);
template RelationReport verify_relations(const std::vector<FieldElement>&, const CoxeterDiagram&, int);

template <class T>
Element<T> evaluate_word(const std::vector<Element<T>>& gens, const Word& word) {
  if (gens.empty()) throw InvalidInput("evaluate_word: empty generator list");
  Element<T> out{Matrix<T>::identity(gens[0].matrix.rows()), {}};
  for (int letter : word) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= gens.size())
      throw InvalidInput("evaluate_word: generator index " + std::to_string(letter) + " out of range");
    out.matrix = out.matrix * gens[static_cast<std::size_t>(letter)].matrix;
    const Word& w = gens[static_cast<std::size_t>(letter)].word;
    out.word.insert(out.word.end(), w.begin(), w.end());
  }
  return out;
}

template GroupElement evaluate_word(const std::vector<GroupElement>&, const Word&);
template FieldElement evaluate_word(const std::vector<FieldElement>&, const Word&);

namespace {

template <class T>
std::vector<Matrix<T>> invariant_forms(const std::vector<Matrix<T>>& gens, std::size_t n) {
  std::size_t nn = n * n;
  Matrix<T> system(gens.size() * nn, nn);
  // Row (r, c) of block g: sum_{k,l} g_kr g_lc B_kl - B_rc.
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Matrix<T>& g = gens[gi];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t row = gi * nn + r * n + c;
        for (std::size_t k = 0; k < n; ++k) {
          if (is_zero(g(k, r))) continue;
          for (std::size_t l = 0; l < n; ++l)
            if (!is_zero(g(l, c))) system(row, k * n + l) += g(k, r) * g(l, c);
        }
        system(row, r * n + c) -= T(1);
      }
  }
  std::vector<Matrix<T>> out;
  for (auto& v : null_space(std::move(system))) out.emplace_back(n, n, std::move(v));
  return out;
}

}  // namespace

std::vector<RatMatrix> invariant_bilinear_forms(const std::vector<GroupElement>& gens, std::size_t dim) {
  std::size_t n = gens.empty() ? dim : gens[0].matrix.rows();
  std::vector<RatMatrix> ms;
  for (const auto& g : gens) ms.push_back(to_rational(g.matrix));
  return invariant_forms(ms, n);
}

std::vector<AlgMatrix> invariant_bilinear_forms(const std::vector<FieldElement>& gens, std::size_t dim) {
  std::size_t n = gens.empty() ? dim : gens[0].matrix.rows();
  std::vector<AlgMatrix> ms;
  for (const auto& g : gens) ms.push_back(g.matrix);
  return invariant_forms(ms, n);
}

std::vector<GroupElement> even_subgroup_generators(const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Word w = gens[i].word;
      w.insert(w.end(), gens[j].word.begin(), gens[j].word.end());
      out.push_back({gens[i].matrix * gens[j].matrix, std::move(w)});
    }
  return out;
}

std::vector<CompatibilityEntry> compatibility_audit(const CartanMatrix& integer_cartan, const CoxeterDiagram& d) {
  if (integer_cartan.rank() != d.rank()) throw InvalidInput("compatibility_audit: rank mismatch");
  AlgMatrix sym = cartan_from_diagram(d).entries;
  const AlgMatrix& a = integer_cartan.entries;
  std::vector<CompatibilityEntry> out;
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = i + 1; j < d.rank(); ++j) {
      CompatibilityEntry e{i, j, a(i, j) * a(j, i), sym(i, j) * sym(i, j), false};
      e.pass = e.product == e.expected;
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace vinwit
