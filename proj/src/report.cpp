#include "toral/report.hpp"

#include "toral/error.hpp"
#include "toral/parse.hpp"

namespace toral::report {

Json to_json(const GaussianRational &z) { return z.to_string(); }

Json to_json(const LatticeVector &v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json to_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_int64(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const LaurentPoly &p, std::span<const std::string> vars) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"exponent", to_json(it->first)}, {"coefficient", to_json(it->second)}});
  return Json{{"text", p.to_string(vars)}, {"terms", std::move(terms)}};
}

Json to_json(const ProblemInput &problem) {
  Json gens = Json::array();
  for (const auto &g : problem.generators) gens.push_back(to_json(g, problem.variables));
  return Json{{"variables", problem.variables}, {"generators", std::move(gens)}};
}

namespace {

Json big(const mpz_class &z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json optional_big(const std::optional<mpz_class> &z) { return z ? big(*z) : Json(nullptr); }

} // namespace

std::string describe_finite_part(const Quasitorus &q) {
  if (q.finite_factors.empty()) return "1";
  std::string s;
  for (const auto &b : q.finite_factors) {
    if (!s.empty()) s += " × ";
    s += "Z/" + b.get_str();
  }
  return s;
}

Json to_json(const Quasitorus &q) {
  Json factors = Json::array();
  for (const auto &b : q.finite_factors) factors.push_back(big(b));
  return Json{{"finite_factors", std::move(factors)},
              {"torus_rank", q.torus_rank},
              {"order", optional_big(q.order())},
              {"description", describe_finite_part(q)}};
}

Json to_json(const SplitResult &split, std::span<const std::string> vars) {
  Json residual = Json::array();
  const std::size_t l = vars.size() - split.torus_rank;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < l; ++k) names.push_back("y" + std::to_string(k + 1));
  for (const auto &g : split.residual_generators) residual.push_back(to_json(g, names));
  return Json{{"change_of_basis", to_json(split.change_of_basis)},
              {"torus_rank", split.torus_rank},
              {"residual_variables", names},
              {"residual_generators", std::move(residual)},
              {"is_torus", split.is_torus}};
}

Json to_json(const GaffGroup &group) {
  Json support = Json::array();
  for (const auto &m : group.support) support.push_back(to_json(m));
  Json elements = Json::array();
  for (std::size_t k = 0; k < group.elements.size(); ++k) {
    Json perm = Json::array();
    for (auto j : group.perm_action[k]) perm.push_back(j);
    elements.push_back(Json{{"linear", to_json(group.elements[k].linear())},
                            {"translation", to_json(group.elements[k].translation())},
                            {"permutation", std::move(perm)},
                            {"cycles", cycle_notation(group.perm_action[k])},
                            {"order", permutation_order(group.perm_action[k])}});
  }
  return Json{{"support", std::move(support)},
              {"order", group.order()},
              {"abelian", group.is_abelian()},
              {"element_orders", group.element_orders()},
              {"elements", std::move(elements)}};
}

Json to_json(const AutStructure &a) {
  Json notes = Json::array();
  for (const auto &n : a.notes) notes.push_back(n);
  return Json{{"torus_rank_s", a.torus_rank_s},
              {"rank_E_Y", a.rank_E_Y},
              {"is_torus", a.is_torus},
              {"h_y", to_json(a.h_y)},
              {"gaff_order", optional_big(a.gaff_order)},
              {"gaff_abelian", a.gaff_abelian ? Json(*a.gaff_abelian) : Json(nullptr)},
              {"gaff_element_orders", a.gaff_element_orders},
              {"aut_y_order", optional_big(a.aut_y_order)},
              {"formula",
               Json{{"aut_y", a.formula.aut_y}, {"s", a.formula.s}, {"rank_E_Y", a.formula.rank_E_Y},
                    {"text", a.formula.text}}},
              {"notes", std::move(notes)}};
}

Json to_json(const AutoCertificate &cert) {
  Json basis = Json::array();
  for (const auto &f : cert.basis_f) basis.push_back(to_json(f));
  Json values = Json::array();
  for (const auto &c : cert.constraint_values) values.push_back(to_json(c));
  Json lambda = nullptr;
  if (cert.explicit_lambda) {
    lambda = Json::array();
    for (const auto &x : cert.explicit_lambda->values()) lambda.push_back(to_json(x));
  }
  Json prop = nullptr;
  if (cert.proportionality)
    prop = Json{{"alpha", to_json(cert.proportionality->alpha)}, {"v", to_json(cert.proportionality->v)}};
  return Json{{"linear", to_json(cert.linear)},         {"translation_v", to_json(cert.translation_v)},
              {"basis_f", std::move(basis)},            {"constraint_values", std::move(values)},
              {"explicit_lambda", std::move(lambda)},   {"proportionality", std::move(prop)}};
}

namespace {

IntMatrix matrix_from_json(const Json &j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty matrix");
  IntMatrix m(j.size(), j.front().size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw InputError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<long>(j[r][c].get<std::int64_t>());
  }
  return m;
}

LatticeVector vector_from_json(const Json &j) {
  if (!j.is_array()) throw InputError("expected an integer vector");
  return LatticeVector(j.get<std::vector<std::int64_t>>());
}

GaussianRational scalar_from_json(const Json &j) {
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  if (!j.is_string()) throw InputError("expected a Gaussian rational string");
  return parse_gaussian(j.get<std::string>());
}

std::vector<GaussianRational> scalars_from_json(const Json &j) {
  if (!j.is_array()) throw InputError("expected an array of Gaussian rationals");
  std::vector<GaussianRational> out;
  for (const auto &x : j) out.push_back(scalar_from_json(x));
  return out;
}

} // namespace

AutoCertificate certificate_from_json(const Json &j, const LaurentPoly &h) {
  try {
    if (j.contains("monomial_map")) {
      const Json &m = j.at("monomial_map");
      MonomialMap psi{matrix_from_json(m.at("exponents")), ScalarTuple(scalars_from_json(m.at("scalars")))};
      return certificate_from_monomial_map(h, psi);
    }
    AutoCertificate cert;
    cert.linear = matrix_from_json(j.at("linear"));
    cert.translation_v = vector_from_json(j.at("translation_v"));
    for (const auto &f : j.at("basis_f")) cert.basis_f.push_back(vector_from_json(f));
    cert.constraint_values = scalars_from_json(j.at("constraint_values"));
    if (j.contains("explicit_lambda") && !j.at("explicit_lambda").is_null())
      cert.explicit_lambda = ScalarTuple(scalars_from_json(j.at("explicit_lambda")));
    if (j.contains("proportionality") && !j.at("proportionality").is_null()) {
      const Json &p = j.at("proportionality");
      cert.proportionality =
          AutoCertificate::Proportionality{scalar_from_json(p.at("alpha")), vector_from_json(p.at("v"))};
    }
    return cert;
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace toral::report
