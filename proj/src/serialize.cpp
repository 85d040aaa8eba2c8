#include "vinwit/serialize.hpp"

#include "vinwit/error.hpp"

namespace vinwit {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return Json(to_string(q));
}

Json to_json(const AlgNum& a) { return Json(a.str()); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

namespace {

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, F&& entry) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix: each row must be an array");
    std::vector<T> row;
    for (const auto& e : r) row.push_back(entry(e));
    rows.push_back(std::move(row));
  }
  try {
    return Matrix<T>::from_rows(rows);
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

}  // namespace

Json to_json(const IntMatrix& m) { return matrix_json(m); }
Json to_json(const RatMatrix& m) { return matrix_json(m); }
Json to_json(const AlgMatrix& m) { return matrix_json(m); }

Json to_json(const IntPolynomial& p) {
  Json out;
  out["coefficients_low_to_high"] = Json::array();
  for (const auto& c : p.coeffs()) out["coefficients_low_to_high"].push_back(to_json(c));
  out["text"] = p.str();
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<Integer>(j, integer_from_json); }

AlgMatrix alg_matrix_from_json(const Json& j) {
  return matrix_from_json<AlgNum>(j, [](const Json& e) {
    if (e.is_number_integer()) return AlgNum(Rational(e.get<long>()));
    if (e.is_string()) return AlgNum::parse(e.get<std::string>());
    throw ParseError("matrix entry must be an integer or a string, got " + e.dump());
  });
}

CartanMatrix cartan_from_json(const Json& j) {
  const Json& m = j.is_object() ? (j.contains("cartan") ? j.at("cartan") : throw ParseError("missing key \"cartan\"")) : j;
  CartanMatrix a;
  a.entries = alg_matrix_from_json(m);
  if (!a.entries.is_square()) throw ParseError("cartan: matrix is not square");
  a.kind = a.entries.is_symmetric() ? CartanMatrix::Kind::symmetric_standard : CartanMatrix::Kind::vinberg_compatible;
  return a;
}

Json cartan_to_json(const CartanMatrix& a) {
  Json out;
  out["kind"] = a.kind == CartanMatrix::Kind::symmetric_standard ? "symmetric_standard" : "vinberg_compatible";
  out["cartan"] = a.is_integral() ? to_json(a.to_integer()) : to_json(a.entries);
  return out;
}

Json to_json(const CoxeterDiagram& d) {
  Json out;
  out["rank"] = d.rank();
  out["edges"] = Json::array();
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = i + 1; j < d.rank(); ++j)
      if (d.label(i, j) != 2) out["edges"].push_back({i + 1, j + 1, d.label(i, j)});
  return out;
}

CoxeterDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank")) throw ParseError("diagram: expected {\"rank\": n, \"edges\": [...]}");
  std::size_t n = j.at("rank").get<std::size_t>();
  if (n == 0) throw ParseError("diagram: rank must be positive");
  CoxeterDiagram d(n);
  for (const auto& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 3) throw ParseError("diagram: each edge is [i, j, m]");
    auto a = e[0].get<long>(), b = e[1].get<long>();
    int m = e[2].get<int>();
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n || a == b)
      throw ParseError("diagram: bad edge " + e.dump());
    try {
      d.set_label(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1), m);
    } catch (const InvalidInput& ex) {
      throw ParseError(std::string("diagram: ") + ex.what());
    }
  }
  return d;
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (int g : w) out.push_back(g + 1);
  return out;
}

Json free_word_json(const FreeWord& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(x);
  return out;
}

Json to_json(const SignatureReport& s) {
  return Json{{"positive", s.positives}, {"zero", s.zeros}, {"negative", s.negatives}};
}

Json to_json(const CartanTypeResult& t) {
  Json out;
  out["type"] = to_string(t.type);
  out["witness"] = Json::array();
  for (const auto& u : t.witness) out["witness"].push_back(to_json(u));
  out["margin"] = to_json(t.margin);
  return out;
}

Json to_json(const ArithmeticityReport& r) {
  Json out;
  out["field"] = r.field;
  out["field_generators"] = r.field_generators;
  out["conjugates"] = Json::array();
  for (const auto& c : r.conjugates)
    out["conjugates"].push_back(
        {{"signs", c.map.signs}, {"signature", to_json(c.signature)}, {"positive_definite", c.positive_definite}});
  out["all_conjugates_positive_definite"] = r.all_conjugates_positive_definite;
  return out;
}

Json to_json(const RelationReport& r) {
  Json out;
  out["cap"] = r.cap;
  out["pairs"] = Json::array();
  for (const auto& e : r.pairs) {
    Json p{{"i", e.i + 1}, {"j", e.j + 1}, {"expected", e.expected}};
    p["order"] = e.order ? Json(*e.order) : Json(nullptr);
    p["pass"] = e.pass;
    out["pairs"].push_back(std::move(p));
  }
  out["all_pass"] = r.all_pass;
  return out;
}

Json to_json(const std::vector<CompatibilityEntry>& audit) {
  Json out = Json::array();
  for (const auto& e : audit)
    out.push_back({{"i", e.i + 1},
                   {"j", e.j + 1},
                   {"product", to_json(e.product)},
                   {"expected", to_json(e.expected)},
                   {"pass", e.pass}});
  return out;
}

Json to_json(const DensityCertificate& c) {
  Json out;
  out["complete"] = c.complete();
  out["dimension"] = c.dimension;
  out["span_dimension"] = c.span_dimension;
  out["invariant_form_dimension"] = c.invariant_form_dimension;
  auto element = [](const std::optional<Word>& w, const Word& expanded, const IntMatrix& m, const IntPolynomial& p) {
    if (!w) return Json(nullptr);
    return Json{{"word", word_json(*w)},
                {"expanded_word", word_json(expanded)},
                {"matrix", to_json(m)},
                {"char_poly", to_json(p)}};
  };
  out["witness"] = element(c.witness_word, c.witness_expanded, c.witness_matrix, c.witness_poly);
  if (c.witness_word) {
    out["witness"]["prime_irreducible"] = c.prime_irreducible;
    out["witness"]["prime_transposition"] = c.prime_transposition;
  }
  out["companion"] = element(c.companion_word, c.companion_expanded, c.companion_matrix, c.companion_poly);
  out["words_examined"] = c.words_examined;
  out["inconclusive"] = c.inconclusive;
  return out;
}

Json to_json(const Presentation& p) {
  Json out;
  out["generators"] = p.generators();
  out["relators"] = Json::array();
  for (const auto& r : p.relators()) out["relators"].push_back(free_word_json(r));
  return out;
}

Presentation presentation_from_json(const Json& j) {
  std::vector<FreeWord> rels;
  for (const auto& r : j.at("relators")) rels.push_back(r.get<FreeWord>());
  return Presentation(j.at("generators").get<std::size_t>(), std::move(rels));
}

Json to_json(const CosetTable& t) {
  Json out;
  out["index"] = t.index();
  out["action"] = Json::array();
  for (const auto& row : t.action()) {
    Json r = Json::array();
    for (int c : row) r.push_back(c + 1);
    out["action"].push_back(std::move(r));
  }
  return out;
}

CosetTable coset_table_from_json(const Json& j) {
  std::vector<std::vector<int>> action;
  for (const auto& row : j.at("action")) {
    std::vector<int> r;
    for (const auto& c : row) r.push_back(c.get<int>() - 1);
    action.push_back(std::move(r));
  }
  CosetTable t(std::move(action));
  if (j.contains("index") && j.at("index").get<std::size_t>() != t.index())
    throw ParseError("coset table: index does not match the permutations");
  return t;
}

Json to_json(const AbelianizationReport& a) {
  Json out;
  out["invariant_factors"] = Json::array();
  for (const auto& d : a.invariant_factors) out["invariant_factors"].push_back(to_json(d));
  out["betti"] = a.betti;
  return out;
}

Json to_json(const Epimorphism& e) {
  Json out;
  out["images"] = Json::array();
  for (const auto& x : e.images) out["images"].push_back(to_json(x));
  return out;
}

Json to_json(const SubgroupFinding& f) {
  Json out;
  out["index"] = f.index;
  out["torsion_free"] = f.torsion_free;
  out["orientation_preserving"] = f.orientation_preserving;
  out["abelianization"] = to_json(f.abelianization);
  out["subgroup_generators"] = f.subgroup_generators;
  out["table"] = to_json(f.table);
  return out;
}

Json to_json(const TorsionReport& r) {
  Json out;
  out["torsion_free"] = r.torsion_free;
  out["element"] = r.element ? free_word_json(*r.element) : Json(nullptr);
  out["fixed_coset"] = r.fixed_coset >= 0 ? Json(r.fixed_coset + 1) : Json(nullptr);
  out["parabolic_orders"] = Json::array();
  for (auto [v, order] : r.parabolic_orders) out["parabolic_orders"].push_back({{"dropped_vertex", v + 1}, {"order", order}});
  return out;
}

Json to_json(const ProperWitness& w) {
  Json out;
  out["found"] = w.found;
  if (w.found) {
    out["functional"] = to_json(w.w);
    out["margin"] = to_json(w.margin);
  } else {
    out["violating_depth"] = w.violating_depth;
  }
  out["lp_rounds"] = w.lp_rounds;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vinwit
