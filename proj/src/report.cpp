#include "riflab/report.hpp"

#include "riflab/kernels.hpp"

namespace riflab {

const char* version() { return RIFLAB_VERSION; }

namespace {

Json rational_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return Json{{"num", r->num}, {"den", r->den}};
}

std::optional<Rational> rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational{j.at("num").get<long>(), j.at("den").get<long>()};
}

Membership membership_from(const std::string& s) {
  if (s == "member") return Membership::member;
  if (s == "not_member") return Membership::not_member;
  return Membership::inconclusive;
}

Json config_json(const AnalyzeConfig& c) {
  Json alphas = Json::array();
  for (double a : c.alphas) alphas.push_back(real_to_json(a));
  return Json{{"seed", c.seed},
              {"tol", real_to_json(c.tol)},
              {"grid", c.grid},
              {"max_order", c.max_order},
              {"alphas", alphas},
              {"h1", c.h1},
              {"agler_samples", c.agler_samples},
              {"exec", c.exec == Exec::parallel ? "parallel" : "serial"}};
}

AnalyzeConfig config_from(const Json& j) {
  AnalyzeConfig c;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.tol = real_from_json(j.at("tol"));
  c.grid = j.at("grid").get<int>();
  c.max_order = j.at("max_order").get<int>();
  c.alphas.clear();
  for (const auto& a : j.at("alphas")) c.alphas.push_back(real_from_json(a));
  c.h1 = j.at("h1").get<bool>();
  c.agler_samples = j.at("agler_samples").get<int>();
  c.exec = j.at("exec").get<std::string>() == "parallel" ? Exec::parallel : Exec::serial;
  return c;
}

SingularPoint singular_from(const Json& j) {
  SingularPoint s;
  s.tau1 = complex_from_json(j.at("tau1"));
  s.tau2 = complex_from_json(j.at("tau2"));
  s.residual_p = real_from_json(j.at("residual_p"));
  s.residual_ptilde = real_from_json(j.at("residual_ptilde"));
  s.cluster_size = j.at("cluster_size").get<int>();
  return s;
}

}  // namespace

Json to_json(const SingularPoint& s) {
  return Json{{"tau1", complex_to_json(s.tau1)},
              {"tau2", complex_to_json(s.tau2)},
              {"residual_p", real_to_json(s.residual_p)},
              {"residual_ptilde", real_to_json(s.residual_ptilde)},
              {"cluster_size", s.cluster_size}};
}

Json to_json(const ContactReport& c) {
  Json sing = Json::array(), fits = Json::array();
  for (const auto& s : c.singularities) sing.push_back(to_json(s));
  for (const auto& f : c.fits)
    fits.push_back(Json{{"axis", index_of(f.axis) + 1},
                        {"tau", to_json(f.tau)},
                        {"samples", f.samples.size()},
                        {"slope", real_to_json(f.slope)},
                        {"slope_stderr", real_to_json(f.slope_stderr)},
                        {"slope_plus", real_to_json(f.slope_plus)},
                        {"slope_minus", real_to_json(f.slope_minus)},
                        {"K", rational_json(f.K_rational)}});
  return Json{{"singularities", sing},
              {"fits", fits},
              {"K1", real_to_json(c.K1)},
              {"K2", real_to_json(c.K2)},
              {"K1_rational", rational_json(c.K1_rational)},
              {"K2_rational", rational_json(c.K2_rational)},
              {"hp_threshold_1", real_to_json(c.hp_threshold_1)},
              {"hp_threshold_2", real_to_json(c.hp_threshold_2)}};
}

Json to_json(const QuadratureResult& q) {
  Json levels = Json::array();
  for (const auto& l : q.levels) levels.push_back(Json{{"n", l.n}, {"estimate", real_to_json(l.estimate)}});
  return Json{{"value", real_to_json(q.value)},
              {"classification", to_string(q.classification)},
              {"growth_exponent", real_to_json(q.growth_exponent)},
              {"tolerance_achieved", real_to_json(q.tolerance_achieved)},
              {"tail_ratio", real_to_json(q.tail_ratio)},
              {"levels", levels}};
}

Json to_json(const MembershipReport& m) {
  return Json{{"singular", m.singular},
              {"hp_sup_1", real_to_json(m.hp_sup_1)},
              {"hp_sup_2", real_to_json(m.hp_sup_2)},
              {"excludes_three_halves", m.excludes_three_halves},
              {"d_p0_sup", real_to_json(m.d_p0_sup)},
              {"d_0p_sup", real_to_json(m.d_0p_sup)},
              {"d_alpha_sup", real_to_json(m.d_alpha_sup)},
              {"aniso_sup_1", real_to_json(m.aniso_sup_1)},
              {"aniso_sup_2", real_to_json(m.aniso_sup_2)}};
}

Json to_json(const DirichletTail& t, bool include_annular) {
  Json ps = Json::array();
  for (const auto& [n, s] : t.partial_sums) ps.push_back(Json{{"N", n}, {"sum", real_to_json(s)}});
  Json j{{"alpha1", real_to_json(t.alpha1)},
         {"alpha2", real_to_json(t.alpha2)},
         {"partial_sums", ps},
         {"tail_exponent", real_to_json(t.tail_exponent)},
         {"verdict", to_string(t.verdict)},
         {"theorem_override", t.theorem_override}};
  if (include_annular) {
    Json a = Json::array();
    for (double x : t.annular) a.push_back(real_to_json(x));
    j["annular"] = a;
  }
  return j;
}

AnalysisReport analyze(const PolyInput& in, const std::string& source, const std::optional<AglerVectors>& agler,
                       const AnalyzeConfig& cfg) {
  AnalysisReport r;
  r.tool_version = version();
  r.source = source;
  r.input = in;
  r.config = cfg;
  const Rif phi = make_rif(in.p, in.degree);

  ContactConfig cc;
  cc.scan.angles = cfg.grid;
  cc.scan.exec = cfg.exec;
  cc.fit.exec = cfg.exec;
  const ContactReport contact = contact_report(phi, cc);
  r.singularities = contact.singularities;
  for (const auto& f : contact.fits)
    r.fits.push_back(
        {f.axis, f.tau.tau1, f.tau.tau2, int(f.samples.size()), f.slope, f.slope_stderr, f.slope_plus, f.slope_minus, f.K_rational});
  r.K1 = contact.K1, r.K2 = contact.K2;
  r.K1_rational = contact.K1_rational, r.K2_rational = contact.K2_rational;
  r.hp_threshold_1 = contact.hp_threshold_1, r.hp_threshold_2 = contact.hp_threshold_2;
  r.membership = membership_table(contact);

  if (cfg.h1) {
    QuadConfig qc;
    qc.rel_tol = cfg.tol;
    qc.scan = cc.scan;
    qc.exec = cfg.exec;
    H1Check h;
    h.value1 = hp_norm_derivative(phi, Axis::z1, 1.0, contact.singularities, qc).value;
    h.value2 = hp_norm_derivative(phi, Axis::z2, 1.0, contact.singularities, qc).value;
    h.m = phi.degree().m, h.n = phi.degree().n;
    r.h1 = h;
  }

  const SeriesGrid series = taylor(phi, cfg.max_order, cfg.exec);
  for (double a : cfg.alphas) {
    DirichletTail t = dirichlet_partial(series, a, a, cfg.max_order, {.exec = cfg.exec});
    apply_contact_override(t, contact);
    r.dirichlet.push_back({a, cfg.max_order, t.partial_sums.back().second, t.tail_exponent, t.verdict, t.theorem_override});
  }

  if (agler) {
    const auto st = verify_agler(phi, *agler, cfg.agler_samples, cfg.seed, cfg.exec);
    r.agler = AglerSummary{st.sample_count, st.max_abs, st.mean_abs};
    r.local_dirichlet = LocalDirichletSummary{0.0, 0.0, local_dirichlet_boundary(phi, 0.0, 0.0).value,
                                              local_dirichlet_kernel(phi, *agler, 0.0, 0.0).value};
  }
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json sing = Json::array(), fits = Json::array(), dir = Json::array();
  for (const auto& s : r.singularities) sing.push_back(to_json(s));
  for (const auto& f : r.fits)
    fits.push_back(Json{{"axis", index_of(f.axis) + 1},
                        {"tau1", complex_to_json(f.tau1)},
                        {"tau2", complex_to_json(f.tau2)},
                        {"samples", f.samples},
                        {"slope", real_to_json(f.slope)},
                        {"slope_stderr", real_to_json(f.slope_stderr)},
                        {"slope_plus", real_to_json(f.slope_plus)},
                        {"slope_minus", real_to_json(f.slope_minus)},
                        {"K", rational_json(f.K)}});
  for (const auto& d : r.dirichlet)
    dir.push_back(Json{{"alpha", real_to_json(d.alpha)},
                       {"N", d.N},
                       {"partial_sum", real_to_json(d.partial_sum)},
                       {"tail_exponent", real_to_json(d.tail_exponent)},
                       {"verdict", to_string(d.verdict)},
                       {"theorem_override", d.theorem_override}});
  Json j{{"schema", kReportSchema},
         {"tool_version", r.tool_version},
         {"source", r.source},
         {"input", poly_to_json(r.input.p, r.input.degree)},
         {"config", config_json(r.config)},
         {"singularities", sing},
         {"contact",
          Json{{"fits", fits},
               {"K1", real_to_json(r.K1)},
               {"K2", real_to_json(r.K2)},
               {"K1_rational", rational_json(r.K1_rational)},
               {"K2_rational", rational_json(r.K2_rational)},
               {"hp_threshold_1", real_to_json(r.hp_threshold_1)},
               {"hp_threshold_2", real_to_json(r.hp_threshold_2)}}},
         {"membership", to_json(r.membership)},
         {"dirichlet", dir}};
  j["h1"] = r.h1 ? Json{{"value1", real_to_json(r.h1->value1)},
                        {"value2", real_to_json(r.h1->value2)},
                        {"m", r.h1->m},
                        {"n", r.h1->n}}
                 : Json(nullptr);
  j["agler"] = r.agler ? Json{{"samples", r.agler->samples},
                              {"max_abs", real_to_json(r.agler->max_abs)},
                              {"mean_abs", real_to_json(r.agler->mean_abs)}}
                       : Json(nullptr);
  j["local_dirichlet"] = r.local_dirichlet ? Json{{"z1", complex_to_json(r.local_dirichlet->z1)},
                                                  {"z2", complex_to_json(r.local_dirichlet->z2)},
                                                  {"boundary", real_to_json(r.local_dirichlet->boundary)},
                                                  {"kernel", real_to_json(r.local_dirichlet->kernel)}}
                                           : Json(nullptr);
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  try {
    if (j.at("schema").get<int>() != kReportSchema) throw Error(ErrorCode::parse, "unsupported report schema");
    AnalysisReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.source = j.at("source").get<std::string>();
    r.input = poly_from_json(j.at("input"));
    r.config = config_from(j.at("config"));
    for (const auto& s : j.at("singularities")) r.singularities.push_back(singular_from(s));
    const auto& c = j.at("contact");
    for (const auto& f : c.at("fits"))
      r.fits.push_back({axis_from_int(f.at("axis").get<int>()), complex_from_json(f.at("tau1")),
                        complex_from_json(f.at("tau2")), f.at("samples").get<int>(), real_from_json(f.at("slope")),
                        real_from_json(f.at("slope_stderr")), real_from_json(f.at("slope_plus")),
                        real_from_json(f.at("slope_minus")), rational_from(f.at("K"))});
    r.K1 = real_from_json(c.at("K1"));
    r.K2 = real_from_json(c.at("K2"));
    r.K1_rational = rational_from(c.at("K1_rational"));
    r.K2_rational = rational_from(c.at("K2_rational"));
    r.hp_threshold_1 = real_from_json(c.at("hp_threshold_1"));
    r.hp_threshold_2 = real_from_json(c.at("hp_threshold_2"));
    const auto& m = j.at("membership");
    r.membership.singular = m.at("singular").get<bool>();
    r.membership.hp_sup_1 = real_from_json(m.at("hp_sup_1"));
    r.membership.hp_sup_2 = real_from_json(m.at("hp_sup_2"));
    r.membership.excludes_three_halves = m.at("excludes_three_halves").get<bool>();
    r.membership.d_p0_sup = real_from_json(m.at("d_p0_sup"));
    r.membership.d_0p_sup = real_from_json(m.at("d_0p_sup"));
    r.membership.d_alpha_sup = real_from_json(m.at("d_alpha_sup"));
    r.membership.aniso_sup_1 = real_from_json(m.at("aniso_sup_1"));
    r.membership.aniso_sup_2 = real_from_json(m.at("aniso_sup_2"));
    for (const auto& d : j.at("dirichlet"))
      r.dirichlet.push_back({real_from_json(d.at("alpha")), d.at("N").get<int>(), real_from_json(d.at("partial_sum")),
                             real_from_json(d.at("tail_exponent")), membership_from(d.at("verdict").get<std::string>()),
                             d.at("theorem_override").get<bool>()});
    if (const auto& h = j.at("h1"); !h.is_null())
      r.h1 = H1Check{real_from_json(h.at("value1")), real_from_json(h.at("value2")), h.at("m").get<int>(),
                     h.at("n").get<int>()};
    if (const auto& a = j.at("agler"); !a.is_null())
      r.agler = AglerSummary{a.at("samples").get<int>(), real_from_json(a.at("max_abs")), real_from_json(a.at("mean_abs"))};
    if (const auto& l = j.at("local_dirichlet"); !l.is_null())
      r.local_dirichlet = LocalDirichletSummary{complex_from_json(l.at("z1")), complex_from_json(l.at("z2")),
                                                real_from_json(l.at("boundary")), real_from_json(l.at("kernel"))};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace riflab
