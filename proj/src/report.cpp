#include "unif/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "unif/abelian_metrics.hpp"
#include "unif/curves.hpp"
#include "unif/elliptic.hpp"
#include "unif/fuchsian.hpp"
#include "unif/inversion.hpp"

namespace unif {

using ojson = nlohmann::ordered_json;

namespace {

ojson cj(cplx z) { return ojson::array({z.real(), z.imag()}); }

CheckRow row(std::string name, double residual, double tol, std::string note = "") {
  return {std::move(name), residual, tol, std::move(note)};
}

CheckTable from_residuals(const ResidualTable& t, double tol, const std::string& prefix = "") {
  CheckTable out;
  for (const auto& [name, r] : t) out.push_back(row(prefix + name, r, tol));
  return out;
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

// x samples for the Liouville check: away from branch points and from the cuts of K, K'
constexpr Box liouville_box{0.4, 0.8, 0.05, 0.35};
// y samples for the surface metric
constexpr Box surface_box{0.1, 1.0, -0.8, 0.8};

CheckTable suite_identities(const SuiteOptions& opt, ojson& data) {
  auto taus = seeded_points(opt.seed, pick(opt.samples, 100), identity_box);
  std::vector<CheckTable> all;
  for (auto t : taus) all.push_back(from_residuals(identity_residuals(t), 1e-11));
  data["points"] = taus.size();
  return merge_max(all);
}

CheckTable suite_curves(const SuiteOptions& opt, ojson& data) {
  auto taus = seeded_points(opt.seed, pick(opt.samples, 20), standard_box);
  CheckTable t;
  ojson per = ojson::array();
  for (const auto& c : registry()) {
    auto r = curve_residual(c.id, taus);
    double res = r.used > 0 ? r.max_residual : NAN;
    std::ostringstream note;
    note << "used " << r.used << ", skipped " << r.skipped;
    t.push_back(row("curve " + c.id + ": " + c.F.str() + " = 0", res, 1e-10, note.str()));
    per.push_back({{"id", c.id}, {"max_residual", res}, {"max_raw", r.max_raw}, {"used", r.used}, {"skipped", r.skipped}});
  }
  double jb = 0;
  for (auto tau : taus) jb = std::max(jb, j_bridge_residual(tau));
  t.push_back(row("J bridge: J = (x^8+14x^4+1)^3/(108(x^5-x)^4) at x = chi_B", jb, 1e-9));

  std::vector<CheckTable> kl;
  int used = 0;
  for (auto tau : taus) {
    if (!in_principal_domain(tau) || !in_principal_domain(3.0 * tau)) continue;
    auto k = kl_relation_check(tau);
    ++used;
    kl.push_back({row("k-lambda elliptic relation 3K'(k)K(l) = K'(l)K(k)", k.elliptic, 1e-10),
                  row("k-lambda hypergeometric form", k.hypergeometric, 1e-10),
                  row("kappa-mu reducible curve", k.kappa_mu_curve, 1e-10),
                  row("(k-l)^4 = 16(k^3-k)(l^3-l)", k.kl3_curve, 1e-10)});
  }
  for (auto& r : merge_max(kl)) {
    r.note = "principal-domain samples " + std::to_string(used);
    t.push_back(r);
  }
  auto j3 = kl3_j_check(taus);
  t.push_back(row("k-lambda quartic model J = 2197/972", std::abs(j3.j_weierstrass - j3.j_exact.value()), 1e-10));
  t.push_back(row("k-lambda quartic model w^2 = u^4 - u^2 + 1", j3.model_residual, 1e-10));
  data["points"] = taus.size();
  data["curves"] = per;
  return t;
}

CheckTable suite_fuchsian(const SuiteOptions& opt, ojson& data) {
  auto taus = seeded_points(opt.seed, pick(opt.samples, 20), standard_box);
  CheckTable t;
  ojson per = ojson::array();
  for (const auto& id : q_catalogue_ids()) {
    auto r = verify_fuchsian(id, taus);
    double res = r.used > 0 ? r.max_residual : NAN;
    std::ostringstream note;
    note << "used " << r.used << ", skipped " << r.skipped;
    t.push_back(row("fuchsian " + id, res, 1e-9, note.str()));
    per.push_back({{"id", id}, {"formula", q_catalogue(id).formula}, {"max_residual", res},
                   {"max_raw_residual", r.max_raw_residual}, {"used", r.used}, {"skipped", r.skipped}});
  }
  auto cv = change_of_var_check(taus);
  t.push_back(row("change of variable law, z = x^4", cv.quartic_law, 1e-9));
  t.push_back(row("change of variable, z = x^4 against the Legendre equation", cv.quartic_legendre, 1e-9));
  t.push_back(row("Moebius invariance of the bracket", cv.moebius_law, 1e-9));
  t.push_back(row("change of variable cocycle", cv.cocycle, 1e-9));
  t.push_back(row("Lemma for y^2 = x^5 - x", cv.lemma, 1e-9));
  t.push_back(row("y-side double pole coefficient -3/8", std::abs(cv.y_pole_coefficient + 0.375), 1e-6));
  data["points"] = taus.size();
  data["equations"] = per;
  return t;
}

// jets of the closed system against central differences, relative
CheckTable jet_fd_rows(cplx tau) {
  CheckTable t;
  auto tj = theta_jet(tau, Affine{}, 3);
  const double h = 0.01 * std::min(1.0, tau.imag());
  struct F {
    const char* name;
    cplx (*f)(cplx);
    const Jet* jet;
  };
  const F fs[] = {{"theta2", theta2, &tj.t2}, {"theta3", theta3, &tj.t3}, {"theta4", theta4, &tj.t4},
                  {"eta", dedekind_eta, &tj.eta}};
  for (const auto& f : fs) {
    auto fd = fd_jet(f.f, tau, 3, h);
    for (int k = 1; k <= 3; ++k) {
      cplx exact = f.jet->deriv(k);
      t.push_back(row(std::string("jet vs finite differences: ") + f.name + " order " + std::to_string(k),
                      std::abs(fd[k] - exact) / std::abs(exact), 1e-6, "relative"));
    }
  }
  return t;
}

CheckTable suite_modular_odes(const SuiteOptions& opt, ojson& data) {
  auto taus = seeded_points(opt.seed, pick(opt.samples, 20), standard_box);
  std::vector<CheckTable> all;
  for (auto tau : taus) {
    CheckTable t = from_residuals(closed_system_residuals(tau), 1e-10, "closed system ");
    for (auto& r : jet_fd_rows(tau)) t.push_back(r);
    for (auto& r : from_residuals(modular_ode_residuals(tau), 1e-8)) t.push_back(r);
    auto p = psi("burnside_tau", tau);
    t.push_back(row("Psi pair in tau: linear equation", p.ode_residual, 1e-8));
    t.push_back(row("Psi pair in tau: Psi1^2 = dx/dtau", p.normalization_residual, 1e-10));
    t.push_back(row("Psi pair in tau: Wronskian in x equals 1", std::abs(p.wronskian - 1.0), 1e-10));
    all.push_back(t);
  }
  data["points"] = taus.size();
  return merge_max(all);
}

CheckTable suite_integrals(const SuiteOptions& opt, ojson& data) {
  auto taus = seeded_points(opt.seed, pick(opt.samples, 5), standard_box);
  std::vector<CheckTable> all;
  int skipped = 0;
  for (auto tau : taus) {
    try {
      CheckTable t = cover_relations(tau);
      for (auto& r : holo_differential_check(tau)) t.push_back(r);
      for (auto& r : mero_identity_check(tau)) t.push_back(r);
      all.push_back(t);
    } catch (const DomainError&) {
      ++skipped;
    }
  }
  data["points"] = taus.size();
  data["skipped"] = skipped;
  return merge_max(all);
}

CheckTable suite_metrics(const SuiteOptions& opt, ojson& data) {
  const int n = pick(opt.samples, 10);
  CheckTable t;
  auto lv = liouville_check(seeded_points(opt.seed, n, liouville_box));
  double worst = 0;
  for (const auto& r : lv) worst = r.pass() && worst >= r.residual ? worst : (std::isnan(r.residual) ? NAN : std::max(worst, r.residual));
  t.push_back(row("Liouville 4U_{xx*} = exp(2U) for the Burnside x-metric", worst, 1e-5,
                  std::to_string(lv.size()) + " points, relative"));

  double sres = 0, smin = INFINITY;
  ojson sheets = ojson::array();
  for (auto y : seeded_points(opt.seed + 1, n, surface_box)) {
    auto sm = burnside_surface_metric(y);
    sres = std::max(sres, sm.residual);
    for (double d : sm.display) smin = std::min(smin, d);
    if (sheets.empty()) sheets.push_back({{"y", cj(y)}, {"densities", sm.display}});
  }
  t.push_back(row("Burnside surface metric display vs F_y/F_x pullback", sres, 1e-6, "relative, five sheets"));
  t.push_back(row("Burnside surface metric positive on all sheets", smin > 1e-12 ? 0.0 : 1.0, 0.0));

  std::vector<CheckTable> tor;
  for (auto tau : seeded_points(opt.seed, std::max(1, n / 2), standard_box)) tor.push_back(torus_metric_check(tau));
  for (auto& r : merge_max(tor)) t.push_back(r);

  cplx tau(0.3, 1.7);
  auto h = metric_density(MetricModel::HalfPlane, 1.0, tau);
  t.push_back(row("half-plane density with Psi = (1, tau) is 1/Im(tau)^2", std::abs(h.density * tau.imag() * tau.imag() - 1.0), 1e-14));
  cplx z(0.2, -0.5);
  auto d = metric_density(MetricModel::Disc, 1.0, z);
  double want = 4 / std::pow(1 - std::norm(z), 2);
  t.push_back(row("disc density with Psi = (1, z) is 4/(1-|z|^2)^2", std::abs(d.density - want) / want, 1e-14));
  data["first_surface_point"] = sheets;
  return t;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

CheckTable merge_max(const std::vector<CheckTable>& tables) {
  CheckTable out;
  std::map<std::string, size_t> index;
  for (const auto& t : tables)
    for (const auto& r : t) {
      auto it = index.find(r.name);
      if (it == index.end()) {
        index[r.name] = out.size();
        out.push_back(r);
        continue;
      }
      auto& m = out[it->second];
      if (std::isnan(r.residual) || r.residual > m.residual) m.residual = r.residual;
    }
  return out;
}

CheckTable run_suite(const std::string& suite, const SuiteOptions& opt, ojson* data) {
  ojson local;
  ojson& d = data ? *data : local;
  if (suite == "identities") return suite_identities(opt, d);
  if (suite == "curves") return suite_curves(opt, d);
  if (suite == "fuchsian") return suite_fuchsian(opt, d);
  if (suite == "modular-odes") return suite_modular_odes(opt, d);
  if (suite == "integrals") return suite_integrals(opt, d);
  if (suite == "metrics") return suite_metrics(opt, d);
  throw DomainError("unknown suite: " + suite);
}

ojson emit_polygon(const GeodesicPolygon& p) {
  ojson doc;
  auto bp = [](const BoundaryPoint& b) -> ojson {
    if (b.infinite) return "inf";
    return b.x;
  };
  doc["curve_genus"] = p.g;
  doc["doubled"] = p.doubled;
  doc["side_count"] = p.sides.size();
  ojson verts = ojson::array();
  for (size_t i = 0; i < p.vertices.size(); ++i)
    verts.push_back({{"label", p.vertex_labels[i]}, {"x", bp(p.vertices[i])}, {"disc", cj(disc_map(p.vertices[i]))}});
  doc["vertices"] = verts;
  ojson arcs = ojson::array();
  for (size_t i = 0; i < p.sides.size(); ++i) {
    const auto& s = p.sides[i];
    auto g = arc_geometry(s);
    ojson a;
    a["index"] = i;
    a["from"] = bp(s.p);
    a["to"] = bp(s.q);
    a["half_plane"] = g.line ? ojson{{"line", true}, {"x", g.center}}
                             : ojson{{"line", false}, {"center", g.center}, {"radius", g.radius}};
    a["disc"] = g.disc_line ? ojson{{"line", true}, {"from", cj(disc_map(s.p))}, {"to", cj(disc_map(s.q))}}
                            : ojson{{"line", false}, {"center", cj(g.disc_center)}, {"radius", g.disc_radius},
                                    {"from", cj(disc_map(s.p))}, {"to", cj(disc_map(s.q))}};
    arcs.push_back(a);
  }
  doc["arcs"] = arcs;
  ojson prs = ojson::array();
  for (const auto& pr : p.pairings)
    prs.push_back({{"label", pr.label}, {"source", pr.source}, {"target", pr.target},
                   {"matrix", {pr.m.a, pr.m.b, pr.m.c, pr.m.d}}, {"trace", pr.m.trace()}});
  doc["pairings"] = prs;
  ojson cyc = ojson::array();
  for (const auto& c : p.cycles) {
    ojson labels = ojson::array();
    for (int v : c) labels.push_back(p.vertex_labels[v]);
    cyc.push_back(labels);
  }
  doc["cycles"] = cyc;
  doc["euler_characteristic"] = euler_characteristic(p);
  doc["genus"] = genus_of(p, false);
  doc["closure_residual"] = p.closure_residual;
  return doc;
}

ojson curve_registry_json() {
  ojson arr = ojson::array();
  for (const auto& c : registry()) {
    ojson e;
    e["id"] = c.id;
    e["description"] = c.description;
    e["F"] = c.F.str();
    e["x"] = {{"name", c.x_name}, {"expr", c.x.str()}};
    e["y"] = {{"name", c.y_name}, {"expr", c.y.str()}};
    e["genus"] = c.genus ? ojson(*c.genus) : ojson(nullptr);
    e["notes"] = c.notes;
    arr.push_back(e);
  }
  return arr;
}

ojson check_json(const CheckRow& r) {
  ojson j;
  j["name"] = r.name;
  j["residual"] = std::isfinite(r.residual) ? ojson(r.residual) : ojson(nullptr);
  j["tol"] = r.tol;
  j["pass"] = r.pass();
  if (r.informational) j["informational"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

cplx parse_complex(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 2) throw DomainError("expected RE,IM but got '" + text + "'");
  try {
    size_t pos = 0;
    double re = std::stod(parts[0], &pos);
    if (pos != parts[0].size()) throw std::invalid_argument(text);
    double im = 0;
    if (parts.size() == 2) {
      im = std::stod(parts[1], &pos);
      if (pos != parts[1].size()) throw std::invalid_argument(text);
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("expected RE,IM but got '" + text + "'");
  }
}

namespace {

struct Output {
  std::string command;
  ojson parameters = ojson::object();
  CheckTable checks;
  ojson data = ojson::object();
};

BoundaryPoint parse_boundary(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return BoundaryPoint::inf();
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return BoundaryPoint::at(v);
  } catch (const std::logic_error&) {
    throw DomainError("bad boundary point '" + s + "'");
  }
}

void polygon_checks(const GeodesicPolygon& p, CheckTable& t) {
  double disc = 0;
  for (const auto& v : p.vertices) disc = std::max(disc, std::abs(disc_map(v)) - 1.0);
  t.push_back(row("disc images on the unit circle", std::max(0.0, disc), 1e-12));
  // products V0 Vk of the doubled polygon are hyperbolic; only V0^2 stays parabolic
  double tr = 0;
  for (const auto& pr : p.pairings)
    if (!p.doubled || pr.label == "T0") tr = std::max(tr, std::abs(pr.m.trace() * pr.m.trace() - 4));
  t.push_back(row(p.doubled ? "T0 = V0^2 parabolic, trace^2 = 4" : "pairings parabolic, trace^2 = 4", tr, 1e-12));
  t.push_back(row("closure identity", p.closure_residual, 1e-9));
  t.push_back(row("side count " + std::to_string(p.sides.size()) + " = " + (p.doubled ? "8g+2" : "4g+2"),
                  int(p.sides.size()) == (p.doubled ? 8 : 4) * p.g + 2 ? 0.0 : 1.0, 0.0));
  if (p.doubled)
    t.push_back(row("doubled polygon has genus g", genus_of(p, true) == p.g ? 0.0 : 1.0, 0.0));
  else
    t.push_back(row("single polygon has genus 0", genus_of(p, false) == 0 ? 0.0 : 1.0, 0.0));
}

void write_output(const Output& o, const std::string& format, std::optional<double> wall, std::ostream& out) {
  bool pass = all_pass(o.checks);
  int failed = 0;
  for (const auto& r : o.checks)
    if (!r.informational && !r.pass()) ++failed;
  if (format == "jsonl") {
    for (const auto& r : o.checks) {
      ojson j{{"schema", kSchemaVersion}, {"record", "check"}};
      j.update(check_json(r));
      out << j.dump() << "\n";
    }
    if (!o.data.empty()) out << ojson{{"schema", kSchemaVersion}, {"record", "data"}, {"data", o.data}}.dump() << "\n";
    ojson s{{"schema", kSchemaVersion}, {"record", "summary"}, {"command", o.command}, {"parameters", o.parameters},
            {"checks", o.checks.size()}, {"failed", failed}, {"pass", pass}};
    if (wall) s["wall_time_s"] = *wall;
    out << s.dump() << "\n";
    return;
  }
  ojson doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = o.command;
  doc["parameters"] = o.parameters;
  ojson rows = ojson::array();
  for (const auto& r : o.checks) rows.push_back(check_json(r));
  doc["checks"] = rows;
  if (!o.data.empty()) doc["data"] = o.data;
  doc["failed"] = failed;
  doc["pass"] = pass;
  if (wall) doc["wall_time_s"] = *wall;
  out << doc.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniformization toolkit: theta constants, Fuchsian equations, inversion, quintic, metrics"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::optional<double> tol;
  bool timing = false;
  app.add_option("--format", format, "json (one document) or jsonl (one record per line)")
      ->check(CLI::IsMember({"json", "jsonl"}));
  app.add_option("--tol", tol, "override every gated tolerance (default: UNIF_TOL, else per check)");
  app.add_flag("--timing", timing, "add wall time to the output");

  SuiteOptions sopt;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(kSuites));
  verify->add_option("--samples", sopt.samples, "number of seeded points")->check(CLI::PositiveNumber);
  verify->add_option("--seed", sopt.seed, "64-bit seed of the sample grid");

  std::string value;
  auto* invert = app.add_subcommand("invert", "solve chi_B(tau0) = A");
  invert->add_option("--value", value, "A as RE,IM")->required();

  std::string qa;
  auto* quintic = app.add_subcommand("quintic", "roots of x^5 - x + a through theta constants");
  quintic->add_option("--a", qa, "a as RE,IM")->required();

  auto* exact = app.add_subcommand("exact-values", "exact constants and the series at tau = i");

  int genus = 2;
  std::vector<std::string> omega;
  std::vector<double> eps;
  bool emit = false, doubled = false;
  auto* polygon = app.add_subcommand("polygon", "parabolic polygon data");
  polygon->add_option("--genus", genus, "genus g of the curve")->check(CLI::PositiveNumber);
  polygon->add_option("--omega", omega, "2g+2 increasing points, the last may be inf");
  polygon->add_option("--epsilon", eps, "2g interleaved points");
  polygon->add_flag("--emit", emit, "include arcs, pairings and cycles");
  polygon->add_flag("--doubled", doubled, "the (8g+2)-gon P u V0(P)");

  std::string poly_file;
  auto* disc = app.add_subcommand("discriminant", "discriminant in y of F(x, y)");
  disc->add_option("--poly", poly_file, "file holding F, e.g. y^2 - x^5 + x")->required();

  std::string what, tau_text;
  auto* eval = app.add_subcommand("eval", "evaluate a modular quantity");
  eval->add_option("what", what, "theta, eta, j or k")->required()->check(CLI::IsMember({"theta", "eta", "j", "k"}));
  eval->add_option("--tau", tau_text, "tau as RE,IM")->required();

  auto* curves = app.add_subcommand("curves", "list the curve registry");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!tol) {
    if (const char* env = std::getenv("UNIF_TOL")) {
      try {
        tol = std::stod(env);
      } catch (const std::logic_error&) {
        err << "error: UNIF_TOL is not a number\n";
        return kExitUsage;
      }
    }
  }
  if (tol && !(*tol >= 0)) {
    err << "error: tolerance must be non-negative\n";
    return kExitUsage;
  }

  Output o;
  auto start = std::chrono::steady_clock::now();
  try {
    if (*verify) {
      o.command = "verify " + suite;
      o.parameters = {{"samples", sopt.samples}, {"seed", sopt.seed}};
      o.checks = run_suite(suite, sopt, &o.data);
    } else if (*invert) {
      o.command = "invert";
      cplx a = parse_complex(value);
      o.parameters = {{"value", cj(a)}};
      auto r = invert_chi(a);
      o.data["marker"] = r.marker;
      if (r.tau0) {
        o.data["tau0"] = cj(*r.tau0);
        o.data["orbit_index"] = r.index;
        o.data["matrix"] = {r.matrix.a(), r.matrix.b(), r.matrix.c(), r.matrix.d()};
        o.data["tau_prime"] = cj(r.tau_prime);
        ojson orb = ojson::array();
        for (auto t : r.orbit) orb.push_back(cj(t));
        o.data["orbit"] = orb;
        o.checks.push_back(row("chi_B(tau0) = A", r.residual, default_tolerances().root_tol));
        o.checks.push_back(row("J(tau0) = (A^8+14A^4+1)^3/(108(A^4-1)^4 A^4)", r.j_residual, 1e-8));
      } else {
        o.data["tau0"] = nullptr;
      }
    } else if (*quintic) {
      o.command = "quintic";
      cplx a = parse_complex(qa);
      o.parameters = {{"a", cj(a)}};
      auto s = quintic_solve(a);
      ojson roots = ojson::array(), taus = ojson::array();
      for (auto x : s.roots) roots.push_back(cj(x));
      for (auto& t : s.taus) taus.push_back(t ? cj(*t) : ojson(nullptr));
      o.data["roots"] = roots;
      o.data["taus"] = taus;
      o.data["markers"] = s.markers;
      o.data["tau_star"] = cj(s.tau_star);
      o.data["poly_residuals"] = s.poly_residuals;
      o.data["tau_residuals"] = s.tau_residuals;
      double pr = 0, tr = 0;
      for (double v : s.poly_residuals) pr = std::max(pr, v);
      for (double v : s.tau_residuals) tr = std::max(tr, v);
      o.checks.push_back(row("|x^5 - x + a| at all five roots", pr, 1e-10));
      o.checks.push_back(row("Vieta sums", s.vieta, 1e-9));
      o.checks.push_back(row("first root = t4/t3(tau*)", s.theta_residual, 1e-10));
      o.checks.push_back(row("t4/t3(tau_k) = x_k", tr, 1e-9));
    } else if (*exact) {
      o.command = "exact-values";
      o.checks = exact_value_suite();
      for (auto& r : series_at_i()) o.checks.push_back(r);
    } else if (*polygon) {
      o.command = "polygon";
      GeodesicPolygon p;
      if (omega.empty() && eps.empty()) {
        p = default_polygon(genus);
      } else {
        std::vector<BoundaryPoint> om;
        for (const auto& s : omega) om.push_back(parse_boundary(s));
        if (static_cast<int>(om.size()) != 2 * genus + 2)
          throw DomainError("polygon: --omega needs 2g+2 points");
        p = build_polygon(om, eps);
      }
      if (doubled) p = doubled_polygon(p);
      o.parameters = {{"genus", genus}, {"omega", omega}, {"epsilon", eps}, {"doubled", doubled}};
      polygon_checks(p, o.checks);
      if (emit) o.data["polygon"] = emit_polygon(p);
    } else if (*disc) {
      o.command = "discriminant";
      std::ifstream in(poly_file);
      if (!in) throw DomainError("cannot read " + poly_file);
      std::stringstream ss;
      ss << in.rdbuf();
      std::string text = ss.str();
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      auto f = Poly2::parse(text);
      auto d = discriminant_y(f);
      o.parameters = {{"poly", f.str()}};
      std::vector<std::string> coeffs;
      for (const auto& c : d.coeffs) coeffs.push_back(c.str());
      o.data = {{"discriminant", d.str()}, {"degree", d.degree()}, {"coefficients_low_first", coeffs},
                {"constant_leading", d.constant_leading}};
    } else if (*eval) {
      o.command = "eval " + what;
      TauPoint tau(parse_complex(tau_text));
      o.parameters = {{"tau", cj(tau)}};
      if (what == "theta") {
        o.data = {{"theta2", cj(theta2(tau))}, {"theta3", cj(theta3(tau))}, {"theta4", cj(theta4(tau))}};
      } else if (what == "eta") {
        o.data = {{"eta", cj(dedekind_eta(tau))}};
      } else if (what == "j") {
        auto e = eisenstein(tau);
        o.data = {{"J", cj(e.J)}, {"g2", cj(e.g2)}, {"g3", cj(e.g3)}};
      } else {
        auto m = legendre_moduli(tau);
        o.data = {{"k", cj(m.k)}, {"kprime", cj(m.kp)}};
      }
    } else if (*curves) {
      o.command = "curves";
      o.data = {{"curves", curve_registry_json()}};
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  if (tol) {
    o.parameters["tol"] = *tol;
    for (auto& r : o.checks)
      if (!r.informational) r.tol = *tol;
  }
  std::optional<double> wall;
  if (timing) wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_output(o, format, wall, out);
  return all_pass(o.checks) ? kExitPass : kExitCheckFail;
}

}  // namespace unif
