#include "ssnm/report.hpp"

#include <sstream>

#include "ssnm/products.hpp"

namespace ssnm {

namespace {

const char* kFours[] = {"R", "C", "K", "W", "P"};

std::string sign_str(int eps) { return eps > 0 ? "+1" : "-1"; }

}  // namespace

bool first_pair_antisymmetric(const Tensor& t) {
  for (std::size_t f = 0; f < t.size(); ++f) {
    std::vector<int> idx = t.unflat(f);
    std::swap(idx[0], idx[1]);
    if (!(t[f] + t.get(idx)).is_zero()) return false;
  }
  return true;
}

bool last_pair_antisymmetric(const Tensor& t) {
  const int r = t.rank();
  for (std::size_t f = 0; f < t.size(); ++f) {
    std::vector<int> idx = t.unflat(f);
    std::swap(idx[static_cast<std::size_t>(r - 2)], idx[static_cast<std::size_t>(r - 1)]);
    if (!(t[f] + t.get(idx)).is_zero()) return false;
  }
  return true;
}

Pipeline compute(const RunConfig& config) {
  Pipeline p;
  p.config = config;
  p.problem = build_problem(config);
  const ConnectionCoeffs c = ssnm_connection(p.problem.metric, p.problem.P);
  p.curvatures = compute_curvatures(p.problem.metric, c);
  p.products = compute_products(p.curvatures, p.problem.metric);
  p.classification = classify(p.curvatures, p.products, p.problem.metric, p.problem.alphas);
  return p;
}

const Tensor* find_tensor(const Pipeline& p, const std::string& name) {
  const auto& cs = p.curvatures;
  if (name == "Gamma") return &cs.connection.gamma;
  if (name == "g") return &cs.g;
  if (name == "Ric") return &cs.Ric;
  if (name == "dRic") return &cs.dRic;
  for (const char* f : kFours) {
    if (name == f) return &cs.four(f);
    if (name == std::string("d") + f) return &cs.derivative(f);
  }
  if (auto it = p.products.dots.find(name); it != p.products.dots.end()) return &it->second;
  if (auto it = p.products.tachibanas.find(name); it != p.products.tachibanas.end())
    return &it->second;
  return nullptr;
}

std::vector<std::string> tensor_names(const Pipeline&) {
  std::vector<std::string> names = {"Gamma", "g", "R", "Ric", "C", "K", "W", "P",
                                    "dR",    "dRic", "dC", "dK", "dW", "dP"};
  for (const char* e : kFours)
    for (const char* f : kFours) names.push_back(std::string(e) + "." + f);
  for (const char* z : {"g", "Ric"})
    for (const char* f : kFours) names.push_back("Q(" + std::string(z) + "," + f + ")");
  return names;
}

std::vector<std::string> invariant_violations(const Pipeline& p) {
  std::vector<std::string> bad;
  const auto& cs = p.curvatures;
  const int n = p.problem.metric.dim();
  if (!last_pair_antisymmetric(cs.R)) bad.push_back("R is not antisymmetric in its last pair");
  // E.F inherits (u1,u2) antisymmetry only from E(u1,u2,.,.); the SSNM curvature
  // may lack it, so the check is conditional.
  for (const auto& [name, t] : p.products.dots) {
    const Tensor& E = cs.four(name.substr(0, name.find('.')));
    if (first_pair_antisymmetric(E) && !last_pair_antisymmetric(t))
      bad.push_back(name + " is not antisymmetric in (u1,u2)");
  }
  for (const auto& [name, t] : p.products.tachibanas)
    if (!last_pair_antisymmetric(t)) bad.push_back(name + " is not antisymmetric in (u1,u2)");
  const Tensor gg = kulkarni(cs.g, cs.g);
  const Tensor rebuilt =
      tensor_add(cs.K, tensor_scale(gg, cs.kappa.scaled(Rational(1, 2 * (n - 1) * (n - 2)))));
  if (!(rebuilt == cs.C)) bad.push_back("C differs from K + kappa/(2(n-1)(n-2)) g^g");
  if (p.classification.roter.generalized && !p.classification.roter.residual_zero)
    bad.push_back("Roter decomposition has a nonzero residual");
  for (const auto& [name, r] : p.classification.recurrence)
    if (r.recurrent && !r.verified) bad.push_back("recurrence for " + name + " failed verification");
  return bad;
}

std::string relation_text(const RelationEntry& r) {
  const std::string lhs = r.E + "." + r.F;
  const std::string q = "Q(" + r.Z + "," + r.F + ")";
  switch (r.result.kind) {
    case ProportionalityResult::Kind::zero:
      return lhs + " = 0";
    case ProportionalityResult::Kind::proportional:
      return lhs + " = (" + r.result.coefficient.str() + ") " + q;
    case ProportionalityResult::Kind::independent:
      break;
  }
  return lhs + " independent of " + q;
}

Json report_json(const Pipeline& p, const GoldenSummary* golden, const NumericSummary* numeric) {
  const auto& c = p.config;
  const auto& cs = p.curvatures;
  const auto& cl = p.classification;
  Json j;

  Json cfg;
  cfg["preset"] = c.preset;
  cfg["epsilon"] = c.epsilon;
  cfg["dimension"] = c.dimension;
  cfg["metric_diagonal"] = c.metric_diagonal;
  cfg["p_vector"] = c.p_vector;
  cfg["declared_symbols"] = c.declared_symbols;
  cfg["alphas"] = c.alphas;
  j["config"] = cfg;

  Json comps = Json::object();
  for (const auto& name : tensor_names(p)) {
    const Tensor* t = find_tensor(p, name);
    Json entries = Json::object();
    for (std::size_t f = 0; f < t->size(); ++f)
      if (!(*t)[f].is_zero()) entries[index_label(t->unflat(f))] = (*t)[f].str();
    comps[name] = entries;
    if (name == "Ric") comps["kappa"] = Json{{"-", cs.kappa.str()}};
  }
  j["components"] = comps;

  Json rel = Json::array();
  for (const auto& r : cl.relations) {
    Json e;
    e["E"] = r.E;
    e["F"] = r.F;
    e["Z"] = r.Z;
    e["kind"] = kind_name(r.result.kind);
    if (r.result.kind != ProportionalityResult::Kind::independent) {
      e["coefficient"] = r.result.coefficient.str();
      e["constant"] = r.result.is_constant;
    }
    e["statement"] = relation_text(r);
    rel.push_back(e);
  }
  j["relations"] = rel;

  Json el;
  if (cl.einstein.level) {
    el["level"] = *cl.einstein.level;
    Json co = Json::object();
    for (std::size_t i = 0; i < cl.einstein.coefficients.size(); ++i)
      co[cl.einstein.labels[i]] = cl.einstein.coefficients[i].str();
    el["coefficients"] = co;
    el["minimality_certified"] = cl.einstein.lower_level_inconsistent;
  } else {
    el["level"] = nullptr;
  }
  j["einstein_level"] = el;

  Json qe;
  Json cands = Json::array();
  for (const auto& cand : cl.quasi.candidates)
    cands.push_back({{"alpha", cand.alpha.str()}, {"rank", cand.rank}, {"eigenvalue", cand.eigenvalue}});
  qe["candidates"] = cands;
  qe["nonconstant_factor"] = cl.quasi.nonconstant_roots;
  qe["minimal_rank"] = cl.quasi.minimal_rank;
  qe["minimal_alpha"] = cl.quasi.minimal_alpha.str();
  qe["ricci_simple"] = cl.quasi.ricci_simple;
  if (cl.quasi.ricci_simple) {
    qe["alpha"] = cl.quasi.simple_alpha.str();
    Json eta = Json::array();
    for (const auto& e : cl.quasi.eta) eta.push_back(e.str());
    qe["eta"] = eta;
  }
  j["quasi_einstein"] = qe;

  Json ro;
  ro["reduced"] = cl.roter.reduced;
  if (cl.roter.reduced) {
    ro["reduced_mu"] = {{"Ric^Ric", cl.roter.reduced_mu[0].str()},
                        {"g^Ric", cl.roter.reduced_mu[1].str()},
                        {"g^g", cl.roter.reduced_mu[2].str()}};
  }
  ro["generalized"] = cl.roter.generalized;
  if (cl.roter.generalized) {
    const char* names[] = {"mu11", "mu12", "mu13", "mu22", "mu23", "mu33"};
    Json mu = Json::object();
    for (std::size_t i = 0; i < 6; ++i) mu[names[i]] = cl.roter.mu[i].str();
    ro["mu"] = mu;
    ro["residual_zero"] = cl.roter.residual_zero;
  }
  j["roter"] = ro;

  j["ricci_derivative_flags"] = {{"codazzi", cl.ricci_flags.codazzi},
                                 {"cyclic_parallel", cl.ricci_flags.cyclic_parallel}};

  Json comp = Json::object();
  for (const char* f : kFours) comp[f] = cl.compatibility.at(f);
  j["compatibility"] = comp;

  Json rec = Json::object();
  for (const char* f : kFours) {
    const auto& r = cl.recurrence.at(f);
    Json e;
    e["recurrent"] = r.recurrent;
    e["trivial"] = r.trivial;
    if (r.recurrent) {
      Json s = Json::array();
      for (const auto& v : r.sigma) s.push_back(v.str());
      e["sigma"] = s;
    }
    rec[f] = e;
  }
  j["recurrence"] = rec;

  if (golden) {
    Json g;
    g["total"] = golden->total;
    g["matched"] = golden->matched;
    g["suspect_total"] = golden->suspect_total;
    g["suspect_matched"] = golden->suspect_matched;
    g["hard_diffs"] = golden->hard_diffs();
    Json diffs = Json::array();
    for (const auto& d : golden->diffs) {
      diffs.push_back({{"line", d.entry.line},
                       {"tensor", d.entry.tensor},
                       {"indices", d.entry.indices},
                       {"expected", d.expected},
                       {"computed", d.computed},
                       {"suspect", d.entry.suspect}});
    }
    g["diffs"] = diffs;
    j["golden_diffs"] = g;
  } else {
    j["golden_diffs"] = nullptr;
  }

  if (numeric) {
    j["numeric_check"] = {{"samples", numeric->samples},
                          {"seed", numeric->seed},
                          {"points_tested", numeric->points_tested},
                          {"components_compared", numeric->components_compared},
                          {"max_relative_error", numeric->max_relative_error},
                          {"worst_component", numeric->worst_component},
                          {"worst_x3", numeric->worst_x3},
                          {"tolerance", numeric->tolerance},
                          {"passed", numeric->passed}};
  } else {
    j["numeric_check"] = nullptr;
  }
  return j;
}

std::string report_text(const Pipeline& p, const GoldenSummary* golden,
                        const NumericSummary* numeric) {
  const auto& cl = p.classification;
  std::ostringstream os;
  os << "preset " << p.config.preset << ", epsilon " << sign_str(p.config.epsilon) << "\n";
  os << "metric diag(";
  for (std::size_t i = 0; i < p.problem.metric.diagonal.size(); ++i)
    os << (i ? ", " : "") << p.problem.metric.diagonal[i].str();
  os << "), P = (";
  for (std::size_t i = 0; i < p.problem.P.size(); ++i) os << (i ? ", " : "") << p.problem.P[i].str();
  os << ")\n";
  os << "kappa = " << p.curvatures.kappa.str() << "\n";
  for (const char* name : {"Ric"}) {
    const Tensor* t = find_tensor(p, name);
    for (std::size_t f = 0; f < t->size(); ++f)
      if (!(*t)[f].is_zero())
        os << name << "_" << index_label(t->unflat(f)) << " = " << (*t)[f].str() << "\n";
  }

  os << "\nrelations\n";
  for (const auto& r : cl.relations)
    if (r.result.kind == ProportionalityResult::Kind::proportional ||
        (r.result.kind == ProportionalityResult::Kind::zero && r.Z == "g"))
      os << "  " << relation_text(r) << (r.result.kind == ProportionalityResult::Kind::proportional &&
                                                 !r.result.is_constant
                                             ? "  [non-constant]"
                                             : "")
         << "\n";

  os << "\nEinstein level: ";
  if (cl.einstein.level) {
    os << *cl.einstein.level;
    for (std::size_t i = 0; i < cl.einstein.coefficients.size(); ++i)
      os << ", " << cl.einstein.labels[i] << " = " << cl.einstein.coefficients[i].str();
  } else {
    os << "none up to 4";
  }
  os << "\nquasi-Einstein:";
  for (const auto& c : cl.quasi.candidates)
    os << " rank(Ric - " << c.alpha.str() << " g) = " << c.rank << ";";
  os << "\n";
  for (const auto& f : cl.quasi.nonconstant_roots) os << "  remaining factor: " << f << "\n";
  os << "Ricci simple: " << (cl.quasi.ricci_simple ? "yes" : "no");
  if (cl.quasi.ricci_simple) {
    os << ", alpha = " << cl.quasi.simple_alpha.str() << ", eta = (";
    for (std::size_t i = 0; i < cl.quasi.eta.size(); ++i) os << (i ? ", " : "") << cl.quasi.eta[i].str();
    os << ")";
  }
  os << "\nRoter: ";
  if (cl.roter.reduced) {
    os << "R = (" << cl.roter.reduced_mu[0].str() << ") Ric^Ric + (" << cl.roter.reduced_mu[1].str()
       << ") g^Ric + (" << cl.roter.reduced_mu[2].str() << ") g^g";
  } else if (cl.roter.generalized) {
    os << "generalized only";
  } else {
    os << "no decomposition";
  }
  os << "\nCodazzi: " << (cl.ricci_flags.codazzi ? "yes" : "no")
     << ", cyclic parallel: " << (cl.ricci_flags.cyclic_parallel ? "yes" : "no") << "\n";
  os << "Ric-compatible:";
  for (const char* f : kFours) os << " " << f << "=" << (cl.compatibility.at(f) ? "yes" : "no");
  os << "\nrecurrent:";
  for (const char* f : kFours) {
    const auto& r = cl.recurrence.at(f);
    os << " " << f << "=";
    if (!r.recurrent) {
      os << "no";
      continue;
    }
    os << "(";
    for (std::size_t i = 0; i < r.sigma.size(); ++i) os << (i ? ", " : "") << r.sigma[i].str();
    os << ")";
  }
  os << "\n";
  if (golden) {
    os << "\ngolden: " << golden->matched << "/" << golden->total << " match, "
       << golden->hard_diffs() << " hard diffs, " << golden->suspect_total << " suspect entries\n";
    for (const auto& d : golden->diffs)
      os << "  line " << d.entry.line << ": " << d.entry.tensor << " " << d.entry.indices
         << (d.entry.suspect ? " [suspect]" : "") << " expected " << d.expected << ", computed "
         << d.computed << "\n";
  }
  if (numeric) {
    os << "\nnumeric check: " << numeric->points_tested << " points, "
       << numeric->components_compared << " components, max relative error "
       << numeric->max_relative_error << " at " << numeric->worst_component << " -> "
       << (numeric->passed ? "ok" : "FAILED") << "\n";
  }
  return os.str();
}

}  // namespace ssnm
