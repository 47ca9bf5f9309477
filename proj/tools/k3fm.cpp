// k3fm: exact lattice computations for polarized K3 surfaces. Reflexivity
// and assumption checks, nodal-class enumeration, the closed-form
// cohomological Fourier-Mukai transform and its Riemann-Roch oracle.
//
// Exit codes: 0 pass, 1 mathematical check failed, 2 input error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3fm/k3fm.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

ordered_json j_big(const k3fm::BigInt& v) { return v.to_string(); }

ordered_json j_coords(const k3fm::DivisorClass& d) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : d.coords()) arr.push_back(c.to_string());
  return arr;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

struct Report {
  ordered_json doc;
  bool any_failed = false;

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["inputs"] = ordered_json::object();
    doc["outputs"] = ordered_json::object();
    doc["checks"] = ordered_json::array();
  }

  void input(const std::string& key, ordered_json value) { doc["inputs"][key] = std::move(value); }
  void output(const std::string& key, ordered_json value) { doc["outputs"][key] = std::move(value); }

  void check(const std::string& name, bool pass, const std::string& detail) {
    doc["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    any_failed = any_failed || !pass;
  }

  void finish(int code) {
    doc["status"] = code == kPass ? "pass" : (code == kCheckFailed ? "fail" : "error");
    doc["exit"] = code;
  }
};

std::string render_value(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_human(const ordered_json& doc, std::ostream& os) {
  os << "k3fm " << doc["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : doc["inputs"].items())
    os << "  " << key << ": " << render_value(value) << "\n";
  if (!doc["outputs"].empty()) {
    os << "outputs:\n";
    for (const auto& [key, value] : doc["outputs"].items())
      os << "  " << key << " = " << render_value(value) << "\n";
  }
  for (const auto& c : doc["checks"])
    os << (c["pass"].get<bool>() ? "  [PASS] " : "  [FAIL] ") << c["name"].get<std::string>()
       << ": " << c["detail"].get<std::string>() << "\n";
  os << "result: " << doc["status"].get<std::string>() << " (exit " << doc["exit"].get<int>()
     << ")\n";
}

k3fm::SurfaceData load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw k3fm::ParseError(path + ": cannot open file");
  auto cfg = k3fm::parse_surface_config(in, path);
  return k3fm::build_surface_data(cfg);
}

void echo_surface(Report& report, const std::string& path, const k3fm::SurfaceData& s) {
  report.input("config", path);
  report.input("rank", s.lattice->rank());
  ordered_json gram = ordered_json::array();
  for (int i = 0; i < s.lattice->rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < s.lattice->rank(); ++j) row.push_back(s.lattice->gram(i, j).to_string());
    gram.push_back(row);
  }
  report.input("gram", gram);
  report.input("H", j_coords(s.H));
  report.input("ell", j_coords(s.ell));
}

int cmd_check(Report& report, const k3fm::SurfaceData& s, int max_degree) {
  using namespace k3fm;
  auto reflexivity = check_reflexive(s);
  report.check("reflexive", reflexivity.reflexive,
               reflexivity.reflexive ? "H.H=2, H.ell=0, ell.ell=-12, H primitive"
                                     : join(reflexivity.failures, "; "));

  MukaiVector v(2, s.ell, -3);
  report.output("v", format_mukai_vector(v));
  report.check("A1", check_a1(v, s.H), "v primitive, isotropic, gcd(r, deg c1, s) = 1");
  report.check("A2", check_a2(v, s.H), "deg c1 = 0 and r > 1");

  int dmax = std::max(3, max_degree);
  auto nodal = nodal_classes(s.H, dmax);
  ordered_json classes = ordered_json::array();
  for (const auto& d : nodal.classes)
    classes.push_back({{"coords", j_coords(d)}, {"degree", j_big(intersect(d, s.H))}});
  report.output("nodal_classes", classes);
  ordered_json box = ordered_json::array();
  for (const auto& b : nodal.box) box.push_back(b.to_string());
  report.output("nodal_search_box", box);

  auto cert = non_effectivity_certificate(s, nodal);
  report.output("E_square", j_big(cert.e_square));
  report.output("chi_E", j_big(cert.chi_e));
  report.check("non_effectivity_of_ell_plus_2H", cert.holds,
               cert.holds ? "no degree-1 obstruction up to degree " + std::to_string(dmax)
                          : "blocked by nodal class " + cert.blocking->to_string());

  auto a3 = a3_status(reflexivity.reflexive, cert.holds);
  report.check("A3", a3.granted, a3.reason);

  report.output("moduli_dim_v", j_big(moduli_dim(v)));
  return report.any_failed ? kCheckFailed : kPass;
}

int cmd_transform(Report& report, const k3fm::SurfaceData& s, const std::string& vector_text,
                  int wit, bool inverse, bool oracle) {
  using namespace k3fm;
  report.input("vector", vector_text);
  report.input("direction", inverse ? "backward" : "forward");
  ReflexiveSurface surface = ReflexiveSurface::create(s);  // NotReflexiveError -> exit 1
  MukaiVector u = parse_mukai_vector(vector_text, s.lattice);
  FmContext ctx(surface, inverse ? FmDirection::backward : FmDirection::forward);

  MukaiVector u_hat = fm_vector(ctx, u);
  report.output("u", format_mukai_vector(u));
  report.output("u_hat", format_mukai_vector(u_hat));
  report.output("chi_u", j_big(euler_char(u)));
  report.output("chi_u_hat", j_big(euler_char(u_hat)));
  report.output("deg_source", j_big(degree(u, ctx.source_polarization())));
  report.output("deg_target", j_big(degree(u_hat, ctx.target_polarization())));
  report.output("u_square", j_big(mukai_pair(u, u)));
  report.output("u_hat_square", j_big(mukai_pair(u_hat, u_hat)));

  bool chi_flip = euler_char(u_hat) == -euler_char(u);
  bool square_kept = mukai_pair(u_hat, u_hat) == mukai_pair(u, u);
  bool invertible = inverse_fm_vector(ctx, u_hat) == u;
  report.check("chi_sign_flip", chi_flip, "chi(u_hat) = -chi(u)");
  report.check("square_preserved", square_kept, "u_hat^2 = u^2");
  report.check("round_trip", invertible, "inverse transform recovers u");
  if (!chi_flip || !square_kept || !invertible)
    throw InternalError("closed-form transform violated a structural identity");

  auto pres = preservation_report(ctx, u);
  report.output("chi_wit1", j_big(pres.chi_wit1));
  report.output("deg_wit1", j_big(pres.deg_wit1));
  report.check("wit1_chi_preserved", pres.chi_preserved, "chi of the WIT1-adjusted vector");
  report.check("wit1_deg_preserved", pres.deg_preserved, "degree of the WIT1-adjusted vector");
  if (!pres.chi_preserved || !pres.deg_preserved)
    throw InternalError("WIT1 preservation identities failed");

  auto it1 = it1_hypotheses(ctx, u);
  report.output("it1_hypotheses",
                ordered_json{{"degree_zero", it1.degree_zero},
                             {"dual_differs_from_canonical", it1.dual_differs},
                             {"hold", it1.hypotheses_hold},
                             {"note", it1.assumed}});

  if (wit >= 0) {
    auto adj = wit_sheaf_vector(u_hat, WitIndex(wit));
    report.output("wit_input_index", adj.input_index);
    report.output("wit_sheaf_vector", format_mukai_vector(adj.sheaf_vector));
    report.output("wit_transform_index", adj.transform_index);
  }

  if (oracle) {
    KunnethContext kctx(surface);
    MukaiVector via_grr = inverse ? kctx.transform_back(u) : kctx.transform(u);
    bool agrees = via_grr == u_hat;
    report.check("oracle_agreement", agrees, "closed form matches the Riemann-Roch route");
    if (!agrees)
      throw InternalError("oracle mismatch: closed form " + u_hat.to_string() +
                          " vs Riemann-Roch " + via_grr.to_string());
  }
  return kPass;
}

int cmd_kernel(Report& report, const k3fm::SurfaceData& s) {
  using namespace k3fm;
  ReflexiveSurface surface = ReflexiveSurface::create(s);
  auto q = ch_kernel_q(surface);
  auto rep = kernel_report(q);

  report.output("gamma00", j_big(rep.gamma00));
  report.output("gamma20", j_coords(rep.gamma20));
  report.output("gamma02", j_coords(rep.gamma02));
  ordered_json m22 = ordered_json::array();
  for (const auto& row : rep.gamma22) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    m22.push_back(r);
  }
  report.output("gamma22_matrix", m22);
  report.output("gamma22_iota", j_big(rep.gamma22_iota));
  report.output("gamma40", j_big(rep.gamma40));
  report.output("gamma04", j_big(rep.gamma04));
  report.output("gamma42", j_coords(rep.gamma42));
  report.output("gamma24", j_coords(rep.gamma24));
  report.output("gamma44", j_big(rep.gamma44));
  report.output("Hhat", j_coords(surface.Hhat()));
  report.output("ellhat", j_coords(surface.ellhat()));

  bool rank_ok = rep.gamma00 == BigInt(2);
  bool g20_ok = rep.gamma20 == surface.ell();
  bool g02_ok = rep.gamma02 == -surface.ellhat();
  auto expected = expected_gamma22(surface);
  bool g22_ok = q.c22 == expected.c22 && q.c22_iota == expected.c22_iota;
  report.check("gamma00_is_rank_2", rank_ok, "kernel restricts to rank-2 bundles");
  report.check("gamma20_is_ell", g20_ok, "fiberwise first Chern class");
  report.check("gamma02_is_minus_ellhat", g02_ok, "dual-side first Chern class");
  report.check("gamma22_identity", g22_ok, "(ell+2H) x Hhat + H x ellhat - iota");
  if (!(rank_ok && g20_ok && g02_ok && g22_ok))
    throw InternalError("kernel character violates its defining identities");
  return kPass;
}

int cmd_nodal(Report& report, const k3fm::SurfaceData& s, int max_degree) {
  using namespace k3fm;
  report.input("max_degree", max_degree);
  auto nodal = nodal_classes(s.H, max_degree);
  ordered_json classes = ordered_json::array();
  for (const auto& d : nodal.classes)
    classes.push_back({{"coords", j_coords(d)},
                       {"degree", j_big(intersect(d, s.H))},
                       {"self_intersection", j_big(self_intersection(d))}});
  report.output("classes", classes);
  report.output("count", static_cast<int>(nodal.classes.size()));
  ordered_json box = ordered_json::array();
  for (const auto& b : nodal.box) box.push_back(b.to_string());
  report.output("search_box", box);
  report.output("exhaustive", nodal.exhaustive);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "k3fm: exact Picard-lattice arithmetic, reflexive K3 surface checks and the "
      "cohomological Fourier-Mukai transform"};
  app.require_subcommand(1);

  std::string config_path;
  bool json = false;
  bool require_reflexive = false;
  int check_degree = 3;
  int nodal_degree = 3;
  std::string vector_text;
  int wit = -1;
  bool inverse = false;
  bool oracle = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "surface description file")->required();
    sub->add_flag("--json", json, "emit one machine-readable JSON document on stdout");
    sub->add_flag("--require-reflexive", require_reflexive,
                  "fail before doing anything unless the surface is reflexive");
  };

  CLI::App* check = app.add_subcommand(
      "check", "verify the reflexive relations, assumptions A1-A3 and the nodal hypotheses");
  add_common(check);
  check->add_option("--max-degree", check_degree, "nodal search depth (at least 3 is used)")
      ->check(CLI::Range(1, 1000000));

  CLI::App* transform =
      app.add_subcommand("transform", "apply the cohomological transform to a Mukai vector");
  add_common(transform);
  transform->add_option("vector", vector_text, "Mukai vector as r;c1,c2,...;s")->required();
  transform->add_option("--wit", wit, "declared WIT index of the input sheaf")
      ->check(CLI::Range(0, 2));
  transform->add_flag("--inverse", inverse, "apply the inverse transform (kernel on the dual side)");
  transform->add_flag("--oracle", oracle,
                      "re-derive the image through the Riemann-Roch route and compare");

  CLI::App* kernel =
      app.add_subcommand("kernel", "print the Kunneth blocks of the kernel's Chern character");
  add_common(kernel);

  CLI::App* nodal = app.add_subcommand("nodal", "enumerate classes with D.D = -2 and bounded degree");
  add_common(nodal);
  nodal->add_option("--max-degree", nodal_degree, "largest degree D.H to search")
      ->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  std::string command = check->parsed() ? "check"
                        : transform->parsed()
                            ? "transform"
                            : (kernel->parsed() ? "kernel" : "nodal");
  Report report(command);

  int code = kPass;
  try {
    k3fm::SurfaceData s = load_surface(config_path);
    echo_surface(report, config_path, s);

    if (require_reflexive) {
      auto rr = k3fm::check_reflexive(s);
      if (!rr.reflexive) {
        report.check("require-reflexive", false, join(rr.failures, "; "));
        code = kCheckFailed;
      }
    }
    if (code == kPass) {
      if (check->parsed())
        code = cmd_check(report, s, check_degree);
      else if (transform->parsed())
        code = cmd_transform(report, s, vector_text, wit, inverse, oracle);
      else if (kernel->parsed())
        code = cmd_kernel(report, s);
      else
        code = cmd_nodal(report, s, nodal_degree);
    }
  } catch (const k3fm::NotReflexiveError& e) {
    report.check("reflexive", false, e.what());
    code = kCheckFailed;
  } catch (const k3fm::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const k3fm::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const k3fm::LatticeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const k3fm::SignatureError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const k3fm::InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  report.finish(code);
  if (json)
    std::cout << report.doc.dump(2) << "\n";
  else
    print_human(report.doc, std::cout);
  return code;
}
