#include "vinwit/presentation.hpp"

#include <algorithm>

#include "vinwit/error.hpp"

namespace vinwit {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Presentation::Presentation(std::size_t generators, std::vector<FreeWord> relators)
    : generators_(generators), involution_(generators, false) {
  for (const auto& r : relators)
    for (int x : r)
      if (x == 0 || static_cast<std::size_t>(letter_generator(x)) >= generators)
        throw InvalidInput("Presentation: letter " + std::to_string(x) + " out of range");
  for (const auto& r : relators)
    if (r.size() == 2 && r[0] == r[1]) involution_[static_cast<std::size_t>(letter_generator(r[0]))] = true;
  for (const auto& r : relators) {
    FreeWord red = free_reduce(r);
    // Keep squares of involutions verbatim; they carry the involution flag.
    if (r.size() == 2 && r[0] == r[1]) {
      relators_.push_back({std::abs(r[0]), std::abs(r[0])});
      continue;
    }
    red = reduce(red);
    if (!red.empty()) relators_.push_back(std::move(red));
  }
}

bool Presentation::all_involutions() const {
  return std::all_of(involution_.begin(), involution_.end(), [](bool b) { return b; });
}

FreeWord Presentation::reduce(const FreeWord& w) const {
  FreeWord out;
  for (int x : w) {
    int g = letter_generator(x);
    if (involution_[static_cast<std::size_t>(g)]) x = g + 1;
    if (!out.empty() && (out.back() == -x || (x > 0 && out.back() == x && involution_[static_cast<std::size_t>(g)])))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FreeWord Presentation::inverse(const FreeWord& w) const {
  FreeWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return reduce(out);
}

FreeWord Presentation::power(const FreeWord& w, long k) const {
  FreeWord base = k >= 0 ? w : inverse(w), out;
  for (long i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce(out);
}

std::string Presentation::word_str(const FreeWord& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(letter_generator(w[i]) + 1);
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

Presentation coxeter_presentation(const CoxeterDiagram& d) {
  std::vector<FreeWord> rels;
  int n = static_cast<int>(d.rank());
  for (int i = 1; i <= n; ++i) rels.push_back({i, i});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int m = d.label(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      FreeWord r;
      for (int k = 0; k < m; ++k) {
        r.push_back(i);
        r.push_back(j);
      }
      rels.push_back(std::move(r));
    }
  return Presentation(d.rank(), std::move(rels));
}

Presentation free_group_presentation(std::size_t rank) { return Presentation(rank, {}); }

std::vector<int> to_generator_indices(const FreeWord& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) out.push_back(letter_generator(x));
  return out;
}

}  // namespace vinwit
