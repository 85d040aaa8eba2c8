#include "vinwit/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vinwit/error.hpp"
#include "vinwit/smith.hpp"

namespace vinwit {

namespace {

FreeWord invert(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

FreeWord cyclic_reduce(FreeWord w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return FreeWord(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b));
}

// Least rotation of w or of its inverse; identifies cyclic conjugates.
FreeWord cyclic_canonical(const FreeWord& w) {
  FreeWord best = w;
  for (const FreeWord& v : {w, invert(w)})
    for (std::size_t i = 0; i < v.size(); ++i) {
      FreeWord r(v.begin() + static_cast<long>(i), v.end());
      r.insert(r.end(), v.begin(), v.begin() + static_cast<long>(i));
      best = std::min(best, r);
    }
  return best;
}

// Replaces generator k (0-based) by `with` everywhere in w.
FreeWord substitute(const FreeWord& w, int k, const FreeWord& with) {
  FreeWord out;
  FreeWord inv = invert(with);
  for (int x : w) {
    if (letter_generator(x) != k) {
      out.push_back(x);
      continue;
    }
    const FreeWord& r = x > 0 ? with : inv;
    out.insert(out.end(), r.begin(), r.end());
  }
  return free_reduce(out);
}

struct Transversal {
  std::vector<FreeWord> reps;
  // parent[c] = (previous coset, letter)
  std::vector<std::pair<int, int>> parent;
};

Transversal transversal(const CosetTable& t, const Presentation& p) {
  Transversal tr;
  std::size_t n = t.index();
  tr.reps.assign(n, {});
  tr.parent.assign(n, {-1, 0});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < p.generators(); ++g)
      for (int sgn : {1, -1}) {
        if (sgn < 0 && p.is_involution(g)) continue;
        int x = sgn * static_cast<int>(g + 1);
        int d = t.act(c, x);
        if (seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = true;
        tr.parent[static_cast<std::size_t>(d)] = {c, x};
        tr.reps[static_cast<std::size_t>(d)] = tr.reps[static_cast<std::size_t>(c)];
        tr.reps[static_cast<std::size_t>(d)].push_back(x);
        queue.push_back(d);
      }
  }
  return tr;
}

FreeWord expand(const SubgroupPresentation& sub, const Presentation& p, const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    const FreeWord& g = sub.generator_words[static_cast<std::size_t>(letter_generator(x))];
    FreeWord piece = x > 0 ? g : invert(g);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return p.reduce(out);
}

}  // namespace

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  if (t.generators() != p.generators()) throw InvalidInput("reidemeister_schreier: table and presentation disagree");
  std::size_t n = p.generators(), index = t.index();
  Transversal tr = transversal(t, p);

  auto tree_edge = [&](int c, int g) {
    int d = t.act(c, g + 1);
    auto [pc, px] = tr.parent[static_cast<std::size_t>(d)];
    if (pc == c && px == g + 1) return true;
    auto [qc, qx] = tr.parent[static_cast<std::size_t>(c)];
    if (qc == d && (qx == -(g + 1) || (qx == g + 1 && p.is_involution(static_cast<std::size_t>(g))))) return true;
    return false;
  };

  // Schreier generator (c, g) -> provisional generator id, or -1 when trivial.
  std::vector<int> id(index * n, -1);
  std::vector<SchreierGenerator> origin;
  for (std::size_t c = 0; c < index; ++c)
    for (std::size_t g = 0; g < n; ++g)
      if (!tree_edge(static_cast<int>(c), static_cast<int>(g))) {
        id[c * n + g] = static_cast<int>(origin.size());
        origin.push_back({static_cast<int>(c), static_cast<int>(g)});
      }

  std::vector<FreeWord> images(index * n);
  for (std::size_t k = 0; k < id.size(); ++k)
    if (id[k] >= 0) images[k] = {id[k] + 1};

  // Relators are traced letter by letter; reducing them first would cancel s s.
  auto rewrite_from = [&](int c, const FreeWord& w) {
    FreeWord out;
    for (int x : w) {
      auto g = static_cast<std::size_t>(letter_generator(x));
      if (x > 0 || p.is_involution(g)) {
        const FreeWord& im = images[static_cast<std::size_t>(c) * n + g];
        out.insert(out.end(), im.begin(), im.end());
        c = t.act(c, x);
      } else {
        int d = t.act(c, x);
        FreeWord im = invert(images[static_cast<std::size_t>(d) * n + g]);
        out.insert(out.end(), im.begin(), im.end());
        c = d;
      }
    }
    return out;
  };

  std::vector<FreeWord> relators;
  for (std::size_t c = 0; c < index; ++c)
    for (const auto& r : p.relators()) {
      FreeWord w = cyclic_reduce(rewrite_from(static_cast<int>(c), r));
      if (!w.empty()) relators.push_back(std::move(w));
    }

  // Tietze: eliminate generators occurring in relators of length 1, or of
  // length 2 in two distinct generators.
  std::vector<bool> alive(origin.size(), true);
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& r : relators) {
      int k = -1;
      FreeWord with;
      if (r.size() == 1) {
        k = letter_generator(r[0]);
      } else if (r.size() == 2 && letter_generator(r[0]) != letter_generator(r[1])) {
        k = letter_generator(r[0]);
        // r0 r1 = 1: x = r1^-1 or x^-1 = r1^-1
        with = r[0] > 0 ? FreeWord{-r[1]} : FreeWord{r[1]};
      }
      if (k < 0) continue;
      alive[static_cast<std::size_t>(k)] = false;
      for (auto& im : images) im = substitute(im, k, with);
      std::vector<FreeWord> next;
      for (const auto& s : relators) {
        FreeWord w = cyclic_reduce(substitute(s, k, with));
        if (!w.empty()) next.push_back(std::move(w));
      }
      relators = std::move(next);
      progress = true;
      break;
    }
  }

  std::vector<int> renumber(origin.size(), -1);
  SubgroupPresentation sub;
  for (std::size_t k = 0; k < origin.size(); ++k) {
    if (!alive[k]) continue;
    renumber[k] = static_cast<int>(sub.origin.size());
    sub.origin.push_back(origin[k]);
    auto [c, g] = origin[k];
    FreeWord w = tr.reps[static_cast<std::size_t>(c)];
    w.push_back(g + 1);
    FreeWord back = invert(tr.reps[static_cast<std::size_t>(t.act(c, g + 1))]);
    w.insert(w.end(), back.begin(), back.end());
    sub.generator_words.push_back(p.reduce(w));
  }
  auto relabel = [&](const FreeWord& w) {
    FreeWord out;
    for (int x : w) {
      int k = renumber[static_cast<std::size_t>(letter_generator(x))];
      if (k < 0) throw Error("reidemeister_schreier: internal error, eliminated generator survived");
      out.push_back(x > 0 ? k + 1 : -(k + 1));
    }
    return out;
  };
  std::set<FreeWord> seen;
  std::vector<FreeWord> final_relators;
  for (const auto& r : relators) {
    FreeWord w = relabel(r);
    if (seen.insert(cyclic_canonical(w)).second) final_relators.push_back(std::move(w));
  }
  for (auto& im : images) sub.schreier_images.push_back(relabel(im));
  sub.presentation = Presentation(sub.origin.size(), std::move(final_relators));
  return sub;
}

FreeWord rewrite(const SubgroupPresentation& sub, const CosetTable& t, const Presentation& p, const FreeWord& w) {
  std::size_t n = p.generators();
  int c = 0;
  FreeWord out;
  for (int x : p.reduce(w)) {
    auto g = static_cast<std::size_t>(letter_generator(x));
    if (x > 0) {
      const FreeWord& im = sub.schreier_images[static_cast<std::size_t>(c) * n + g];
      out.insert(out.end(), im.begin(), im.end());
      c = t.act(c, x);
    } else {
      int d = t.act(c, x);
      FreeWord im = invert(sub.schreier_images[static_cast<std::size_t>(d) * n + g]);
      out.insert(out.end(), im.begin(), im.end());
      c = d;
    }
  }
  if (c != 0) throw InvalidInput("rewrite: word " + p.word_str(w) + " is not in the subgroup");
  return free_reduce(out);
}

IntMatrix relator_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (int x : p.relators()[r]) m(r, static_cast<std::size_t>(letter_generator(x))) += x > 0 ? 1 : -1;
  return m;
}

AbelianizationReport abelianization(const Presentation& p) {
  AbelianizationReport rep;
  SmithForm s = smith_normal_form(relator_matrix(p));
  for (const auto& d : s.diagonal())
    if (d > 1) rep.invariant_factors.push_back(d);
  rep.betti = p.generators() - s.rank;
  return rep;
}

std::vector<Epimorphism> maps_to_Z(const Presentation& p) {
  SmithForm s = smith_normal_form(relator_matrix(p));
  std::vector<Epimorphism> out;
  for (std::size_t j = s.rank; j < p.generators(); ++j) {
    Epimorphism e;
    for (std::size_t g = 0; g < p.generators(); ++g) e.images.push_back(s.v_inv(j, g));
    out.push_back(std::move(e));
  }
  return out;
}

Integer phi_of_subgroup_word(const Epimorphism& phi, const FreeWord& w) {
  Integer v = 0;
  for (int x : w) {
    const Integer& im = phi.images.at(static_cast<std::size_t>(letter_generator(x)));
    if (x > 0)
      v += im;
    else
      v -= im;
  }
  return v;
}

Integer phi_value(const SubgroupPresentation& sub, const CosetTable& t, const Presentation& p,
                  const Epimorphism& phi, const FreeWord& w) {
  return phi_of_subgroup_word(phi, rewrite(sub, t, p, w));
}

TorsionReport torsion_report(const CosetTable& t, const CoxeterDiagram& d, const Presentation& p) {
  if (d.rank() != p.generators() || t.generators() != p.generators())
    throw InvalidInput("torsion_report: diagram, presentation and table disagree");
  TorsionReport rep;
  std::size_t n = d.rank(), index = t.index();
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<std::size_t> J;
    for (std::size_t v = 0; v < n; ++v)
      if (v != drop) J.push_back(v);
    CoxeterDiagram sub = d.induced(J);
    if (!is_elliptic(sub))
      throw InvalidInput("torsion_report: parabolic without vertex " + std::to_string(drop + 1) +
                         " is infinite; unsupported");
    Presentation q = coxeter_presentation(sub);
    auto e = todd_coxeter(q, {});
    if (!e.table) throw ResourceLimit("torsion_report: could not enumerate a finite parabolic");
    const CosetTable& local = *e.table;
    rep.parabolic_orders.emplace_back(static_cast<int>(drop), local.index());

    // BFS over the parabolic, carrying each element's permutation of t's cosets.
    std::vector<std::vector<int>> perm(local.index());
    std::vector<FreeWord> word(local.index());
    perm[0].resize(index);
    for (std::size_t x = 0; x < index; ++x) perm[0][x] = static_cast<int>(x);
    std::vector<bool> seen(local.index(), false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (std::size_t a = 0; a < J.size(); ++a) {
        int dd = local.act(c, static_cast<int>(a + 1));
        if (seen[static_cast<std::size_t>(dd)]) continue;
        seen[static_cast<std::size_t>(dd)] = true;
        int g = static_cast<int>(J[a]) + 1;
        auto& pd = perm[static_cast<std::size_t>(dd)];
        pd.resize(index);
        const auto& pc = perm[static_cast<std::size_t>(c)];
        for (std::size_t x = 0; x < index; ++x) pd[x] = t.act(pc[x], g);
        word[static_cast<std::size_t>(dd)] = word[static_cast<std::size_t>(c)];
        word[static_cast<std::size_t>(dd)].push_back(g);
        if (rep.torsion_free)
          for (std::size_t x = 0; x < index; ++x)
            if (pd[x] == static_cast<int>(x)) {
              rep.torsion_free = false;
              rep.element = word[static_cast<std::size_t>(dd)];
              rep.fixed_coset = static_cast<int>(x);
              break;
            }
        queue.push_back(dd);
      }
      perm[static_cast<std::size_t>(c)].clear();
      perm[static_cast<std::size_t>(c)].shrink_to_fit();
    }
  }
  return rep;
}

bool is_torsion_free(const CosetTable& t, const CoxeterDiagram& d, const Presentation& p) {
  return torsion_report(t, d, p).torsion_free;
}

bool orientation_preserving(const CosetTable& t, const Presentation& p) {
  if (!p.all_involutions()) throw InvalidInput("orientation_preserving: requires involutive generators");
  Transversal tr = transversal(t, p);
  for (std::size_t c = 0; c < t.index(); ++c)
    for (std::size_t g = 0; g < p.generators(); ++g) {
      int d = t.act(static_cast<int>(c), static_cast<int>(g + 1));
      if ((tr.reps[c].size() + 1 + tr.reps[static_cast<std::size_t>(d)].size()) % 2 != 0) return false;
    }
  return true;
}

std::vector<FreeWord> kernel_sample(const SubgroupPresentation& sub, const CosetTable& t, const Presentation& p,
                                    const Epimorphism& phi, int radius) {
  std::size_t m = sub.generator_words.size();
  if (phi.images.size() != m) throw InvalidInput("kernel_sample: epimorphism does not match the subgroup");
  if (radius < 0) throw InvalidInput("kernel_sample: radius must be nonnegative");

  std::vector<FreeWord> base;
  for (std::size_t k = 0; k < m; ++k)
    if (phi.images[k] == 0) base.push_back(sub.generator_words[k]);

  if (radius > 0) {
    // t with phi(t) = 1, by extended gcd over the images
    Integer v = 0;
    FreeWord tw;
    for (std::size_t k = 0; k < m; ++k) {
      const Integer& b = phi.images[k];
      if (b == 0) continue;
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), v.get_mpz_t(), b.get_mpz_t());
      FreeWord next;
      FreeWord tp = x >= 0 ? tw : invert(tw);
      for (Integer i = 0; i < abs(x); ++i) next.insert(next.end(), tp.begin(), tp.end());
      int letter = y >= 0 ? static_cast<int>(k + 1) : -static_cast<int>(k + 1);
      for (Integer i = 0; i < abs(y); ++i) next.push_back(letter);
      tw = free_reduce(next);
      v = g;
    }
    if (v != 1) throw InvalidInput("kernel_sample: homomorphism is not onto Z");
    FreeWord tp = expand(sub, p, tw), tinv = p.inverse(tp);

    auto power = [&](long a) { return a >= 0 ? p.power(tp, a) : p.power(tinv, -a); };
    for (std::size_t k = 0; k < m; ++k) {
      if (phi.images[k] == 0) continue;
      FreeWord w = sub.generator_words[k];
      FreeWord tail = power(-phi.images[k].get_si());
      w.insert(w.end(), tail.begin(), tail.end());
      base.push_back(p.reduce(w));
    }
    std::vector<FreeWord> conj;
    for (long a = 1; a <= radius; ++a)
      for (long s : {a, -a})
        for (const auto& k : base) {
          FreeWord w = power(s), mid = k, back = power(-s);
          w.insert(w.end(), mid.begin(), mid.end());
          w.insert(w.end(), back.begin(), back.end());
          conj.push_back(p.reduce(w));
        }
    base.insert(base.end(), conj.begin(), conj.end());
  }

  std::set<FreeWord> seen;
  std::vector<FreeWord> out;
  for (auto& w : base) {
    w = p.reduce(w);
    if (w.empty() || !seen.insert(w).second) continue;
    if (t.act(0, w) != 0 || phi_value(sub, t, p, phi, w) != 0)
      throw Error("kernel_sample: internal error, sampled word " + p.word_str(w) + " is not in the kernel");
    out.push_back(std::move(w));
  }
  return out;
}

SubgroupFinding analyze_subgroup(const CosetTable& t, const CoxeterDiagram& d, const Presentation& p) {
  SubgroupFinding f;
  f.table = t;
  f.index = t.index();
  f.torsion_free = is_torsion_free(t, d, p);
  f.orientation_preserving = p.all_involutions() && orientation_preserving(t, p);
  auto sub = reidemeister_schreier(p, t);
  f.abelianization = abelianization(sub.presentation);
  f.subgroup_generators = sub.generator_words.size();
  return f;
}

}  // namespace vinwit
