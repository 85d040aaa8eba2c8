#include "vinwit/zariski.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "vinwit/error.hpp"
#include "vinwit/linalg.hpp"

namespace vinwit {

namespace {

std::vector<Rational> flatten(const IntMatrix& m) {
  std::vector<Rational> v;
  v.reserve(m.data().size());
  for (const auto& x : m.data()) v.emplace_back(x);
  return v;
}

std::string pattern_str(const std::vector<int>& degrees) {
  std::string s = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s + "}";
}

// All positive divisors of |n| (n != 0), via trial division.
std::vector<Integer> divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<std::pair<Integer, int>> factors;
  for (unsigned long d = 2; d <= 1000000 && Integer(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(Integer(d), e);
  }
  if (n > 1) {
    if (n > Integer("1000000000000"))
      throw ResourceLimit("irreducibility test: constant term too large to factor by trial division");
    factors.emplace_back(n, 1);
  }
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subset sums of a multiset of degrees, restricted to 1..total-1.
std::set<int> proper_subset_sums(const std::vector<int>& degrees, int total) {
  std::set<int> sums{0};
  for (int d : degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  std::set<int> out;
  for (int s : sums)
    if (s > 0 && s < total) out.insert(s);
  return out;
}

// Calls visit(word, matrix) for words over `gens` of lengths 1..max_len in
// shortlex order, skipping words with two adjacent copies of an involution.
// Stops when visit returns true or after max_words words.
void for_each_word(const std::vector<GroupElement>& gens, std::size_t max_len, std::size_t max_words,
                   const std::function<bool(const Word&, const IntMatrix&)>& visit) {
  std::size_t k = gens.size(), seen = 0;
  if (k == 0) return;
  IntMatrix id = IntMatrix::identity(gens[0].matrix.rows());
  std::vector<bool> involution(k);
  for (std::size_t g = 0; g < k; ++g) involution[g] = gens[g].matrix * gens[g].matrix == id;
  bool stop = false;
  Word word;
  std::function<void(std::size_t, const IntMatrix&)> extend = [&](std::size_t remaining, const IntMatrix& m) {
    for (std::size_t g = 0; g < k && !stop; ++g) {
      if (!word.empty() && static_cast<std::size_t>(word.back()) == g && involution[g]) continue;
      word.push_back(static_cast<int>(g));
      IntMatrix next = m * gens[g].matrix;
      if (remaining == 1) {
        if (seen++ >= max_words || visit(word, next)) stop = true;
      } else {
        extend(remaining - 1, next);
      }
      word.pop_back();
    }
  };
  for (std::size_t len = 1; len <= max_len && !stop; ++len) extend(len, id);
}

Word expand(const std::vector<GroupElement>& gens, const Word& w) {
  Word out;
  for (int i : w) {
    const Word& g = gens[static_cast<std::size_t>(i)].word;
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

}  // namespace

std::size_t burnside_span_dim(const std::vector<GroupElement>& gens, std::size_t dim) {
  std::size_t n = gens.empty() ? dim : gens[0].matrix.rows();
  if (n == 0) return 0;
  EchelonBasis<Rational> basis(n * n);
  std::deque<IntMatrix> queue;
  IntMatrix id = IntMatrix::identity(n);
  basis.insert(flatten(id));
  queue.push_back(id);
  while (!queue.empty() && basis.size() < n * n) {
    IntMatrix b = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      IntMatrix p = b * g.matrix;
      if (basis.insert(flatten(p))) queue.push_back(std::move(p));
    }
  }
  return basis.size();
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidInput("char_poly: matrix not square");
  std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    IntMatrix am = a * m;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  return IntPolynomial(std::move(c));
}

FactorPattern factor_pattern_mod_p(const IntPolynomial& f, std::uint64_t prime) {
  if (!is_prime(prime)) throw InvalidInput("factor_pattern_mod_p: " + std::to_string(prime) + " is not prime");
  if (f.degree() < 0) throw InvalidInput("factor_pattern_mod_p: zero polynomial");
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), prime) != 0)
    throw InvalidInput("factor_pattern_mod_p: prime " + std::to_string(prime) + " divides the leading coefficient");
  modp::Poly fp = modp::make_monic(modp::reduce(f, prime), prime);
  FactorPattern out;
  modp::Poly g = modp::gcd(fp, modp::derivative(fp, prime), prime);
  out.squarefree = g.size() == 1;
  for (const auto& [part, mult] : modp::squarefree_decomposition(fp, prime))
    for (const auto& [prod, d] : modp::distinct_degree(part, prime)) {
      int count = (static_cast<int>(prod.size()) - 1) / d;
      for (int k = 0; k < count * mult; ++k) out.degrees.push_back(d);
    }
  std::sort(out.degrees.rbegin(), out.degrees.rend());
  return out;
}

IrreducibilityResult irreducibility_over_q(const IntPolynomial& f) {
  int deg = f.degree();
  if (deg < 1) throw InvalidInput("irreducibility_over_q: constant polynomial");
  if (deg == 1) return {Irreducibility::irreducible, "degree 1"};
  if (!squarefree_over_q(f)) return {Irreducibility::reducible, "repeated factor (gcd(f, f') nonconstant)"};

  // Mod-p shortcut: a single factor, or factor degrees that no subset can sum to.
  std::set<int> possible;
  for (int d = 1; d < deg; ++d) possible.insert(d);
  std::size_t tried = 0;
  for (std::uint64_t p : primes_up_to(2000)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) continue;
    FactorPattern pat = factor_pattern_mod_p(f, p);
    if (!pat.squarefree) continue;
    if (pat.degrees.size() == 1) return {Irreducibility::irreducible, "pattern {" + std::to_string(deg) + "} mod " + std::to_string(p)};
    std::set<int> sums = proper_subset_sums(pat.degrees, deg), kept;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(), std::inserter(kept, kept.begin()));
    possible = std::move(kept);
    if (possible.empty()) return {Irreducibility::irreducible, "no factor degree compatible with patterns mod primes <= " + std::to_string(p)};
    // Exact search below settles degree <= 5; keep scanning only when it cannot.
    if (++tried >= 12 && deg <= 5 && f.is_monic()) break;
  }

  if (deg > 5) throw ResourceLimit("irreducibility_over_q: undecided for degree > 5");
  if (!f.is_monic()) throw ResourceLimit("irreducibility_over_q: exact search requires a monic polynomial");
  // Every proper factorisation of a degree <= 5 polynomial has a factor of degree 1 or 2.
  if (f.coeff(0) == 0) return {Irreducibility::reducible, "rational root 0"};
  auto divs = divisors(f.coeff(0));
  for (const auto& d : divs)
    for (const Integer& r : {Integer(d), Integer(-d)})
      if (f.evaluate(r) == 0) return {Irreducibility::reducible, "rational root " + r.get_str()};
  if (!possible.contains(2) && !possible.contains(deg - 2))
    return {Irreducibility::irreducible, "no rational root; no quadratic factor compatible with patterns mod small primes"};
  Integer bound = 0;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, Integer(abs(f.coeff(static_cast<std::size_t>(k)))));
  bound += 1;  // Cauchy bound on |roots| of a monic polynomial
  if (bound > 250000) throw ResourceLimit("irreducibility_over_q: coefficients too large for the quadratic-factor search");
  long b_max = 2 * bound.get_si();
  Integer c_max = bound * bound;
  for (const auto& d : divs) {
    if (d > c_max) break;
    for (const Integer& c : {Integer(d), Integer(-d)})
      for (long b = -b_max; b <= b_max; ++b) {
        IntPolynomial quad({c, Integer(b), Integer(1)}), q, r;
        divide_by_monic(f, quad, q, r);
        if (r.is_zero()) return {Irreducibility::reducible, "quadratic factor " + quad.str()};
      }
  }
  return {Irreducibility::irreducible, "no rational root and no quadratic factor"};
}

S5Certificate galois_s5_certificate(const IntPolynomial& f, std::uint64_t prime_budget) {
  if (f.degree() != 5) throw InvalidInput("galois_s5_certificate: polynomial must have degree 5");
  auto irr = irreducibility_over_q(f);
  if (irr.verdict == Irreducibility::reducible)
    throw InvalidInput("galois_s5_certificate: reducible over Q (" + irr.reason + ")");
  S5Certificate cert;
  for (std::uint64_t p : primes_up_to(prime_budget)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) != 0) continue;
    FactorPattern pat = factor_pattern_mod_p(f, p);
    if (!pat.squarefree) continue;
    if (!cert.five_cycle_prime && pat.degrees == std::vector<int>{5}) cert.five_cycle_prime = p;
    if (!cert.transposition_prime && pat.degrees == std::vector<int>{2, 1, 1, 1}) cert.transposition_prime = p;
    if (cert.found()) break;
  }
  return cert;
}

DensityCertificate certify_zariski_dense(const std::vector<GroupElement>& gens, const DensityBudget& budget) {
  DensityCertificate cert;
  if (gens.empty()) {
    cert.inconclusive.push_back("no generators");
    return cert;
  }
  std::size_t n = gens[0].matrix.rows();
  if (n != 5) throw InvalidInput("certify_zariski_dense: only 5x5 matrices are supported");
  for (const auto& g : gens) {
    Integer det = determinant(g.matrix);
    if (det != 1 && det != -1) throw InvalidInput("certify_zariski_dense: generator with determinant " + det.get_str());
  }
  cert.dimension = n;
  cert.span_dimension = burnside_span_dim(gens);
  cert.invariant_form_dimension = invariant_bilinear_forms(gens).size();
  if (cert.span_dimension != n * n)
    cert.inconclusive.push_back("span dimension " + std::to_string(cert.span_dimension) + " < " + std::to_string(n * n));
  if (cert.invariant_form_dimension != 0)
    cert.inconclusive.push_back("invariant bilinear form space has dimension " + std::to_string(cert.invariant_form_dimension));

  for_each_word(gens, budget.word_length, budget.max_words, [&](const Word& w, const IntMatrix& m) {
    ++cert.words_examined;
    IntPolynomial cp = char_poly(m);
    if (!squarefree_over_q(cp)) return false;
    S5Certificate s5;
    try {
      if (irreducibility_over_q(cp).verdict != Irreducibility::irreducible) return false;
      s5 = galois_s5_certificate(cp, budget.prime_bound);
    } catch (const ResourceLimit&) {
      return false;  // undecided; try the next word
    }
    if (!s5.found()) return false;
    cert.witness_word = w;
    cert.witness_expanded = expand(gens, w);
    cert.witness_matrix = m;
    cert.witness_poly = cp;
    cert.prime_irreducible = *s5.five_cycle_prime;
    cert.prime_transposition = *s5.transposition_prime;
    return true;
  });
  if (!cert.witness_word) {
    cert.inconclusive.push_back("no element with an S5 Galois certificate among words of length <= " +
                                std::to_string(budget.word_length) + " (primes <= " + std::to_string(budget.prime_bound) +
                                ", at most " + std::to_string(budget.max_words) + " words)");
    return cert;
  }

  const IntMatrix& wm = cert.witness_matrix;
  for_each_word(gens, budget.word_length, budget.max_words, [&](const Word& w, const IntMatrix& m) {
    if (wm * m == m * wm) return false;
    IntPolynomial cp = char_poly(m);
    if (!squarefree_over_q(cp)) return false;
    cert.companion_word = w;
    cert.companion_expanded = expand(gens, w);
    cert.companion_matrix = m;
    cert.companion_poly = cp;
    return true;
  });
  if (!cert.companion_word)
    cert.inconclusive.push_back("no regular element commuting-independent of the witness within the word budget");
  return cert;
}

std::vector<std::string> revalidate(const DensityCertificate& cert, const std::vector<GroupElement>& gens) {
  std::vector<std::string> failures;
  if (!cert.complete()) failures.push_back("certificate is not complete");
  if (gens.empty()) {
    failures.push_back("no generators");
    return failures;
  }
  std::size_t n = gens[0].matrix.rows();
  if (burnside_span_dim(gens) != n * n || cert.span_dimension != n * n) failures.push_back("span dimension");
  if (!invariant_bilinear_forms(gens).empty() || cert.invariant_form_dimension != 0) failures.push_back("invariant forms");
  if (!cert.witness_word || !cert.companion_word) {
    failures.push_back("missing witness or companion");
    return failures;
  }
  auto product = [&](const Word& w) {
    IntMatrix m = IntMatrix::identity(n);
    for (int i : w) {
      if (i < 0 || static_cast<std::size_t>(i) >= gens.size()) throw InvalidInput("revalidate: word index out of range");
      m = m * gens[static_cast<std::size_t>(i)].matrix;
    }
    return m;
  };
  IntMatrix wm = product(*cert.witness_word), cm = product(*cert.companion_word);
  if (wm != cert.witness_matrix) failures.push_back("witness matrix does not match its word");
  if (cm != cert.companion_matrix) failures.push_back("companion matrix does not match its word");
  if (char_poly(wm) != cert.witness_poly) failures.push_back("witness characteristic polynomial");
  if (!is_prime(cert.prime_irreducible) ||
      factor_pattern_mod_p(cert.witness_poly, cert.prime_irreducible).degrees != std::vector<int>{5})
    failures.push_back("witness not irreducible mod " + std::to_string(cert.prime_irreducible));
  if (is_prime(cert.prime_transposition)) {
    FactorPattern pat = factor_pattern_mod_p(cert.witness_poly, cert.prime_transposition);
    if (!pat.squarefree || pat.degrees != std::vector<int>{2, 1, 1, 1})
      failures.push_back("witness pattern mod " + std::to_string(cert.prime_transposition) + " is " + pattern_str(pat.degrees));
  } else {
    failures.push_back("transposition prime is not prime");
  }
  if (char_poly(cm) != cert.companion_poly || !squarefree_over_q(cert.companion_poly))
    failures.push_back("companion characteristic polynomial not squarefree");
  if (wm * cm == cm * wm) failures.push_back("companion commutes with witness");
  return failures;
}

}  // namespace vinwit
