// riflab command-line front end.
//
// Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 numerical failure.
// CSV schemas (column order is fixed):
//   contact --csv       fit,axis,delta,eps
//   dirichlet --csv     n,T_n
//   trace-level         x,y,residual
//   taylor --csv        k,l,re,im
//   hpnorm --csv        n,estimate

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "riflab/halfplane.hpp"
#include "riflab/registry.hpp"
#include "riflab/report.hpp"

using namespace riflab;

namespace {

struct Source {
  std::string path;
  std::string example;
};

struct Common {
  Source src;
  double tol = -1.0;  // negative: subcommand default
  std::uint64_t seed = 42;
  int grid = 4096;
  int max_order = -1;
  bool json = false;
  bool csv = false;
  std::string out;
  bool serial = false;
};

void add_common(CLI::App* c, Common& o, bool with_input = true) {
  if (with_input) {
    c->add_option("input", o.src.path, "polynomial JSON file {\"m\",\"n\",\"coeffs\"}");
    c->add_option("--example,-e", o.src.example, "registry entry: favorite, amy, psi, continuous, monomial");
  }
  c->add_option("--tol", o.tol, "tolerance (meaning depends on the subcommand)");
  c->add_option("--seed", o.seed, "random seed")->capture_default_str();
  c->add_option("--grid", o.grid, "angles of the singularity cross-check scan")->capture_default_str();
  c->add_option("--max-order", o.max_order, "series order");
  c->add_flag("--json", o.json, "JSON output");
  c->add_flag("--csv", o.csv, "CSV output");
  c->add_option("--out,-o", o.out, "write output to this file instead of stdout");
  c->add_flag("--serial", o.serial, "disable OpenMP parallelism");
}

Exec exec_of(const Common& o) { return o.serial ? Exec::serial : Exec::parallel; }

PolyInput load_input(const Source& s) {
  if (!s.example.empty() && !s.path.empty()) throw Error(ErrorCode::invalid_argument, "give a file or --example, not both");
  if (!s.example.empty()) {
    const auto& e = registry_entry(s.example);
    return {e.p, e.degree};
  }
  if (s.path.empty()) throw Error(ErrorCode::invalid_argument, "no input: give a polynomial file or --example");
  return poly_from_json(read_json_file(s.path));
}

std::string source_name(const Source& s) { return s.example.empty() ? s.path : s.example; }

std::optional<AglerVectors> load_vectors(const Source& s, const std::string& vectors_path) {
  if (!vectors_path.empty()) return agler_from_json(read_json_file(vectors_path));
  if (!s.example.empty()) return registry_entry(s.example).expected.agler;
  return std::nullopt;
}

Complex parse_complex(const std::string& text) {
  std::stringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw Error(ErrorCode::parse, "expected re[,im], got '" + text + "'");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im)) throw Error(ErrorCode::parse, "expected re[,im], got '" + text + "'");
  }
  return {re, im};
}

void emit(const Common& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  // Write to a sibling and rename, so readers never see a partial file.
  const std::string tmp = o.out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot write '" + o.out + "'");
    f << text;
  }
  std::filesystem::rename(tmp, o.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::parse:
      return 1;
    case ErrorCode::zero_constant_term:
    case ErrorCode::unstable_denominator:
    case ErrorCode::zero_polynomial:
    case ErrorCode::invalid_exponent:
    case ErrorCode::point_too_close_to_boundary:
    case ErrorCode::singular_evaluation_point:
    case ErrorCode::pole_input:
    case ErrorCode::start_off_level:
    case ErrorCode::invalid_argument:
      return 2;
    default:
      return 3;
  }
}

Json expected_json(const RegistryEntry& e) {
  auto val = [](const std::optional<ExpectedValue>& v) -> Json {
    if (!v) return nullptr;
    return Json{{"value", real_to_json(v->value)}, {"tol", real_to_json(v->tol)}, {"note", v->note}};
  };
  Json j{{"K1", val(e.expected.K1)},
         {"K2", val(e.expected.K2)},
         {"hp_threshold", val(e.expected.hp_threshold)},
         {"dirichlet_cutoff", val(e.expected.dirichlet_cutoff)},
         {"inverse_dirichlet_cutoff", val(e.expected.inverse_dirichlet_cutoff)}};
  j["agler_vectors"] =
      e.expected.agler ? Json{{"vectors", agler_to_json(*e.expected.agler)}, {"note", e.expected.agler_note}} : Json(nullptr);
  j["pick_closed_form"] =
      e.expected.pick ? Json{{"f", rational_to_json(*e.expected.pick)}, {"note", e.expected.pick_note}} : Json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riflab: rational inner functions on the bidisk"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  Common o;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report: singularities, contact orders, memberships");
  add_common(analyze_cmd, o);
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::string vectors_path;
  bool no_h1 = false;
  analyze_cmd->add_option("--alpha", alphas, "isotropic Dirichlet exponents to test");
  analyze_cmd->add_option("--vectors", vectors_path, "Agler vectors JSON {\"E1\": [...], \"F2\": [...]}");
  analyze_cmd->add_flag("--no-h1", no_h1, "skip the H^1 quadrature");

  auto* contact_cmd = app.add_subcommand("contact", "contact orders (JSON) or (delta, eps) samples (--csv)");
  add_common(contact_cmd, o);

  auto* sing_cmd = app.add_subcommand("singularities", "common zeros of p and ptilde on the torus");
  add_common(sing_cmd, o);

  auto* hp_cmd = app.add_subcommand("hpnorm", "H^p norm of d phi / d z_axis with refinement ladder");
  add_common(hp_cmd, o);
  int axis = 1;
  double p_exp = 1.0;
  std::string rule = "blaschke";
  int ladder = 4;
  hp_cmd->add_option("--axis", axis, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  hp_cmd->add_option("--p", p_exp, "exponent p >= 1")->required();
  hp_cmd->add_option("--rule", rule, "fiber integrand: blaschke or quotient")->check(CLI::IsMember({"blaschke", "quotient"}));
  hp_cmd->add_option("--ladder", ladder, "refinement levels")->capture_default_str();

  auto* dir_cmd = app.add_subcommand("dirichlet", "weighted coefficient sums and tail verdict");
  add_common(dir_cmd, o);
  double alpha = 0.0;
  std::optional<double> alpha1, alpha2;
  bool inverse = false;
  dir_cmd->add_option("--alpha", alpha, "isotropic exponent")->capture_default_str();
  dir_cmd->add_option("--alpha1", alpha1, "anisotropic exponent in z1");
  dir_cmd->add_option("--alpha2", alpha2, "anisotropic exponent in z2");
  dir_cmd->add_flag("--inverse", inverse, "use the series of 1/p instead of phi");

  auto* agler_cmd = app.add_subcommand("verify-agler", "residual of the Agler identity at seeded points");
  add_common(agler_cmd, o);
  int samples = 1000;
  agler_cmd->add_option("--vectors", vectors_path, "Agler vectors JSON");
  agler_cmd->add_option("--samples", samples, "sample points")->capture_default_str();

  auto* ld_cmd = app.add_subcommand("local-dirichlet", "local Dirichlet integral, boundary and kernel forms");
  add_common(ld_cmd, o);
  std::string z1s = "0", z2s = "0";
  ld_cmd->add_option("--vectors", vectors_path, "Agler vectors JSON");
  ld_cmd->add_option("--z1", z1s, "re[,im]")->capture_default_str();
  ld_cmd->add_option("--z2", z2s, "re[,im]")->capture_default_str();

  auto* doug_cmd = app.add_subcommand("doug", "Doug functional by quadrature");
  add_common(doug_cmd, o);
  bool as_poly = false;
  doug_cmd->add_flag("--polynomial", as_poly, "treat the input as a polynomial f rather than the RIF built from it");

  auto* pick_cmd = app.add_subcommand("pick", "Pick transform as rational JSON");
  add_common(pick_cmd, o);
  std::string phase_s = "1";
  pick_cmd->add_option("--phase", phase_s, "unimodular c in alpha~(c phi(beta(w)))")->capture_default_str();

  auto* trace_cmd = app.add_subcommand("trace-level", "real level curve of the Pick transform (CSV x,y,residual)");
  add_common(trace_cmd, o);
  std::string start_s;
  std::optional<double> level;
  TraceConfig tc;
  trace_cmd->add_option("--start", start_s, "x,y")->required();
  trace_cmd->add_option("--level", level, "level value; defaults to f(start)");
  trace_cmd->add_option("--phase", phase_s, "unimodular phase of the Pick transform")->capture_default_str();
  trace_cmd->add_option("--step", tc.h, "initial step")->capture_default_str();
  trace_cmd->add_option("--box", tc.box, "bounding box half-width")->capture_default_str();
  std::string hint_s = "1,1";
  trace_cmd->add_option("--hint", hint_s, "dx,dy: the first step has a nonnegative component along this")
      ->capture_default_str();

  auto* taylor_cmd = app.add_subcommand("taylor", "Taylor coefficients a_kl, 0 <= k, l <= max-order");
  add_common(taylor_cmd, o);

  auto* rif_cmd = app.add_subcommand("rif", "RIF construction");
  rif_cmd->require_subcommand(1);
  auto* rif_new = rif_cmd->add_subcommand("new", "validate p and echo p and ptilde at the declared degree");
  add_common(rif_new, o);

  auto* ex_cmd = app.add_subcommand("examples", "list the registry with expected values");
  add_common(ex_cmd, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (o.json && o.csv) {
    std::cerr << "error: --json and --csv are exclusive\n";
    return 1;
  }

  try {
    const Exec ex = exec_of(o);
    if (*ex_cmd) {
      Json arr = Json::array();
      for (const auto& e : registry())
        arr.push_back(Json{{"name", e.name},
                           {"description", e.description},
                           {"p", poly_to_json(e.p, e.degree)},
                           {"expected", expected_json(e)}});
      emit(o, dump(arr));
      return 0;
    }

    const PolyInput in = load_input(o.src);

    if (*analyze_cmd) {
      AnalyzeConfig cfg;
      cfg.seed = o.seed;
      if (o.tol > 0) cfg.tol = o.tol;
      cfg.grid = o.grid;
      if (o.max_order > 0) cfg.max_order = o.max_order;
      cfg.alphas = alphas;
      cfg.h1 = !no_h1;
      cfg.exec = ex;
      emit(o, dump(to_json(analyze(in, source_name(o.src), load_vectors(o.src, vectors_path), cfg))));
      return 0;
    }

    if (*pick_cmd) {
      const PickFn f = pick_transform(make_rif(in.p, in.degree), parse_complex(phase_s));
      emit(o, dump(Json{{"phase", complex_to_json(f.phase)}, {"f", rational_to_json(f.f)}}));
      return 0;
    }

    if (*doug_cmd && as_poly) {
      DougConfig dc;
      dc.exec = ex;
      if (o.tol > 0) dc.rel_tol = o.tol;
      const auto q = doug_quadrature(RationalFn{in.p, BiPoly::constant(1.0)}, dc);
      emit(o, dump(Json{{"quadrature", to_json(q)}, {"coefficient_formula", real_to_json(doug_coefficients(in.p))}}));
      return 0;
    }

    const Rif phi = make_rif(in.p, in.degree);
    ScanConfig scan;
    scan.angles = o.grid;
    scan.exec = ex;

    if (*rif_new) {
      emit(o, dump(Json{{"degree", Json::array({phi.degree().m, phi.degree().n})},
                        {"p", poly_to_json(phi.p(), phi.degree())},
                        {"ptilde", poly_to_json(phi.ptilde(), phi.degree())}}));
      return 0;
    }

    if (*sing_cmd) {
      Json arr = Json::array();
      for (const auto& s : find_singularities(phi, scan)) arr.push_back(to_json(s));
      emit(o, dump(arr));
      return 0;
    }

    if (*contact_cmd) {
      ContactConfig cc;
      cc.scan = scan;
      cc.fit.exec = ex;
      if (o.tol > 0) cc.fit.snap_tol = o.tol;
      const ContactReport c = contact_report(phi, cc);
      if (o.csv) {
        std::ostringstream s;
        s << "fit,axis,delta,eps\n";
        s.precision(17);
        for (std::size_t i = 0; i < c.fits.size(); ++i)
          for (const auto& smp : c.fits[i].samples)
            s << i << ',' << index_of(c.fits[i].axis) + 1 << ',' << smp.delta << ',' << smp.eps << '\n';
        emit(o, s.str());
      } else {
        emit(o, dump(to_json(c)));
      }
      return 0;
    }

    if (*hp_cmd) {
      QuadConfig qc;
      qc.scan = scan;
      qc.exec = ex;
      qc.ladder = ladder;
      if (o.tol > 0) qc.rel_tol = o.tol;
      qc.rule = rule == "quotient" ? FiberRule::quotient : FiberRule::blaschke;
      const auto q = hp_norm_derivative(phi, axis_from_int(axis), p_exp, qc);
      if (o.csv) {
        std::ostringstream s;
        s.precision(17);
        s << "n,estimate\n";
        for (const auto& l : q.levels) s << l.n << ',' << l.estimate << '\n';
        emit(o, s.str());
      } else {
        emit(o, dump(Json{{"axis", axis}, {"p", p_exp}, {"result", to_json(q)}}));
      }
      return 0;
    }

    if (*dir_cmd) {
      const int N = o.max_order > 0 ? o.max_order : 512;
      DirichletConfig dc;
      dc.exec = ex;
      const double a1 = alpha1.value_or(alpha), a2 = alpha2.value_or(alpha);
      DirichletTail t = inverse ? dirichlet_partial(inv_series(in.p, N, ex), a1, a2, N, dc)
                                : dirichlet_partial(taylor(phi, N, ex), a1, a2, N, dc);
      if (!inverse && t.verdict == Membership::inconclusive) {
        ContactConfig cc;
        cc.scan = scan;
        cc.fit.exec = ex;
        apply_contact_override(t, contact_report(phi, cc));
      }
      if (o.csv) {
        std::ostringstream s;
        s.precision(17);
        s << "n,T_n\n";
        for (std::size_t n = 0; n < t.annular.size(); ++n) s << n << ',' << t.annular[n] << '\n';
        emit(o, s.str());
      } else {
        emit(o, dump(to_json(t, true)));
      }
      return 0;
    }

    if (*agler_cmd) {
      const auto v = load_vectors(o.src, vectors_path);
      if (!v) throw Error(ErrorCode::invalid_argument, "no Agler vectors: pass --vectors");
      const auto st = verify_agler(phi, *v, samples, o.seed, ex);
      const double tol = o.tol > 0 ? o.tol : 1e-12;
      emit(o, dump(Json{{"samples", st.sample_count},
                        {"seed", o.seed},
                        {"max_abs", real_to_json(st.max_abs)},
                        {"mean_abs", real_to_json(st.mean_abs)},
                        {"tol", tol},
                        {"passed", st.max_abs < tol}}));
      return st.max_abs < tol ? 0 : 3;
    }

    if (*ld_cmd) {
      const Complex z1 = parse_complex(z1s), z2 = parse_complex(z2s);
      const auto v = load_vectors(o.src, vectors_path);
      Json j{{"z1", complex_to_json(z1)}, {"z2", complex_to_json(z2)}};
      const bool interior = std::max(std::abs(z1), std::abs(z2)) <= 1.0 - 1e-3;
      if (!interior && !v) throw Error(ErrorCode::point_too_close_to_boundary, "boundary point needs Agler vectors");
      j["boundary_form"] = interior ? to_json(local_dirichlet_boundary(phi, z1, z2)) : Json(nullptr);
      j["kernel_form"] = v ? to_json(local_dirichlet_kernel(phi, *v, z1, z2)) : Json(nullptr);
      emit(o, dump(j));
      return 0;
    }

    if (*doug_cmd) {
      DougConfig dc;
      dc.exec = ex;
      if (o.tol > 0) dc.rel_tol = o.tol;
      emit(o, dump(Json{{"quadrature", to_json(doug_quadrature(phi, dc))}}));
      return 0;
    }

    if (*trace_cmd) {
      const PickFn f = pick_transform(phi, parse_complex(phase_s));
      const Complex st = parse_complex(start_s);
      const Complex hint = parse_complex(hint_s);
      tc.hint_x = hint.real(), tc.hint_y = hint.imag();
      const double lv = level.value_or(f(st.real(), st.imag()).real());
      const LevelCurve c = trace_level_curve(f, st.real(), st.imag(), lv, tc);
      if (o.json) {
        Json pts = Json::array();
        for (const auto& v : c.points) pts.push_back(Json::array({v.x, v.y, v.residual}));
        emit(o, dump(Json{{"level", lv}, {"terminated_reason", to_string(c.terminated_reason)}, {"points", pts}}));
      } else {
        std::ostringstream s;
        s.precision(17);
        s << "x,y,residual\n";
        for (const auto& v : c.points) s << v.x << ',' << v.y << ',' << v.residual << '\n';
        emit(o, s.str());
      }
      return 0;
    }

    if (*taylor_cmd) {
      const int N = o.max_order >= 0 ? o.max_order : 8;
      const SeriesGrid a = taylor(phi, N, ex);
      if (o.csv) {
        std::ostringstream s;
        s.precision(17);
        s << "k,l,re,im\n";
        for (int k = 0; k <= N; ++k)
          for (int l = 0; l <= N; ++l) s << k << ',' << l << ',' << a.at(k, l).real() << ',' << a.at(k, l).imag() << '\n';
        emit(o, s.str());
      } else {
        Json rows = Json::array();
        for (int k = 0; k <= N; ++k) {
          Json row = Json::array();
          for (int l = 0; l <= N; ++l) row.push_back(complex_to_json(a.at(k, l)));
          rows.push_back(row);
        }
        emit(o, dump(Json{{"N", N}, {"coeffs", rows}}));
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
