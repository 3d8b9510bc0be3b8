#include "rigid/serialize.hpp"

#include <limits>

#include "rigid/error.hpp"

namespace rigid {

Json bigint_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad integer");
    return x;
  }
  throw InvalidArgument("expected an integer");
}

Json to_json(const SolvableElement& e) {
  Json j;
  j["m"] = e.rank();
  j["n"] = e.cls();
  if (e.cls() == 1) {
    j["vec"] = e.exponents();
  } else if (e.cls() >= 2) {
    const auto& p = e.matrix();
    j["top"] = to_json(p.top);
    j["coords"] = Json::array();
    for (const auto& c : p.coords) j["coords"].push_back(to_json(c));
  }
  return j;
}

SolvableElement solvable_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  if (n == 0) return SolvableElement::identity({m, 0});
  if (n == 1) {
    return SolvableElement::from_exponents(m, j.at("vec").get<std::vector<std::int64_t>>());
  }
  SolvableElement::Matrix p{solvable_from_json(j.at("top")), {}};
  for (const auto& c : j.at("coords")) p.coords.push_back(ring_from_json(c, {m, n - 1}));
  return SolvableElement::from_matrix(m, n, std::move(p));
}

Json to_json(const SolvableRing& r) {
  Json j = Json::array();
  for (const auto& [key, term] : r.terms()) {
    j.push_back({{"coeff", bigint_json(term.coeff)}, {"element", to_json(term.element)}});
  }
  return j;
}

SolvableRing ring_from_json(const Json& j, const SolvableAmbient& ambient) {
  SolvableRing r(ambient);
  for (const auto& t : j) {
    r.add_term(solvable_from_json(t.at("element")), bigint_from_json(t.at("coeff")));
  }
  return r;
}

Json to_json(const SplitMatrix<SolvableElement>& p) {
  Json j;
  j["top"] = to_json(p.top);
  j["coords"] = Json::array();
  for (const auto& c : p.coords) j["coords"].push_back(to_json(c));
  return j;
}

namespace {

Json vector_json(const WreathElement::Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(bigint_json(x));
  return j;
}

}  // namespace

Json to_json(const WreathElement& w) {
  Json j;
  j["m"] = w.rank();
  j["level"] = w.level();
  if (w.level() == 0) {
    j["vec"] = w.exponents();
    return j;
  }
  j["top"] = to_json(w.top());
  j["base"] = Json::array();
  for (const auto& [key, e] : w.base()) {
    j["base"].push_back({{"at", to_json(e.at)}, {"vec", vector_json(e.vec)}});
  }
  return j;
}

WreathElement wreath_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  const int level = j.at("level").get<int>();
  if (level == 0) {
    return WreathElement::abelian(m, j.at("vec").get<std::vector<std::int64_t>>());
  }
  std::vector<WreathElement::BaseEntry> entries;
  for (const auto& e : j.at("base")) {
    WreathElement::Vector v;
    for (const auto& x : e.at("vec")) v.push_back(bigint_from_json(x));
    entries.push_back({wreath_from_json(e.at("at")), std::move(v)});
  }
  return WreathElement::from_parts(m, level, entries, wreath_from_json(j.at("top")));
}

Json to_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (const auto& [exps, c] : p.terms()) {
    j.push_back({{"exps", exps},
                 {"num", bigint_json(c.get_num())},
                 {"den", bigint_json(c.get_den())}});
  }
  return j;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t variables) {
  LaurentPoly p(variables);
  for (const auto& t : j) {
    const auto exps = t.at("exps").get<LaurentPoly::Exponents>();
    const BigInt den = bigint_from_json(t.at("den"));
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational c(bigint_from_json(t.at("num")), den);
    c.canonicalize();
    p.add_term(exps, c);
  }
  return p;
}

Json to_json(const LaurentMatrix& m) {
  Json j;
  j["variables"] = m.rows() > 0 && m.cols() > 0 ? m(0, 0).variables() : 0;
  j["rows"] = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    j["rows"].push_back(std::move(row));
  }
  return j;
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
  const auto variables = j.at("variables").get<std::size_t>();
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& r : j.at("rows")) {
    std::vector<LaurentPoly> row;
    for (const auto& p : r) row.push_back(laurent_from_json(p, variables));
    rows.push_back(std::move(row));
  }
  return LaurentMatrix::from_rows(rows);
}

Json to_json(const PrincipalDimension& d) { return Json(d.ranks); }

Json to_json(const SolutionSet& s) {
  Json j;
  j["params"] = {{"m", s.m}, {"n", s.n}, {"radius", s.radius}, {"variables", s.variables}};
  j["count"] = s.assignments.size();
  j["assignments"] = Json::array();
  for (const auto& a : s.assignments) {
    Json tuple = Json::array();
    for (const auto& g : a) tuple.push_back(to_json(g));
    j["assignments"].push_back(std::move(tuple));
  }
  return j;
}

}  // namespace rigid
