#include "commands.hpp"

#include "symstress/io.hpp"
#include "symstress/maxwell.hpp"
#include "symstress/pure_condition.hpp"
#include "symstress/random.hpp"
#include "symstress/rubber_band.hpp"
#include "symstress/statics.hpp"
#include "symstress/stress_classify.hpp"
#include "symstress/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symstress::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Common {
  std::uint64_t seed = 1;
  std::string scalar = "rational";
  double tol = kDefaultRelTol;
  int jobs = 1;
  ScalarMode mode() const { return parse_mode(scalar); }
};

// Loaded inputs and their digests, in load order.
class Inputs {
public:
  Json load(const std::string& role, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    digests_[role] = sha256_hex(ss.str());
    try {
      return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
  }
  const Json& digests() const { return digests_; }

private:
  Json digests_ = Json::object();
};

Json edge_list(const Graph& g, const std::vector<int>& edges) {
  Json out = Json::array();
  for (int e : edges) out.push_back({g.edge(e).u + 1, g.edge(e).v + 1});
  return out;
}

std::vector<int> parse_vertex_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item) - 1);
  return out;
}

template <class T> Json stress_basis_json(const Graph& g, const std::vector<Vec<T>>& basis) {
  Json out = Json::array();
  for (const auto& w : basis) out.push_back(edge_vector_to_json(g, w));
  return out;
}

Vec<double> to_double_vec(const Vec<Rational>& v) {
  Vec<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string graph, config;
};

template <class T> Json analyze_config(const Graph& g, const Configuration<T>& p, double tol) {
  auto sb = self_stress_basis(g, p, tol);
  auto mb = motion_basis(g, p, tol);
  auto cr = count_crossings(g, p);
  return Json{{"s", sb.s},
              {"f", mb.f},
              {"trivial_dim", mb.trivial.size()},
              {"affine_span_dim", affine_span_dimension(p, tol)},
              {"crossings", cr.crossings},
              {"overlaps", cr.overlaps},
              {"stress_basis", stress_basis_json(g, sb.basis)}};
}

Json cmd_analyze(const AnalyzeArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto gc = generic_counts(g, 2, 3, derive_seed(c.seed, "analyze"));
  Json r{{"n", g.n()},
         {"m", g.m()},
         {"maxwell_k", maxwell_index(g, 2).k},
         {"generic", {{"f", gc.f}, {"s", gc.s}, {"rank", gc.max_rank}}},
         {"isostatic", gc.f == 0 && gc.s == 0}};
  if (!a.config.empty()) {
    auto p = configuration_from_json(in.load("config", a.config));
    if (p.n() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("configuration and graph sizes differ");
    r["framework"] = c.mode() == ScalarMode::Rational ? analyze_config(g, p, c.tol) : analyze_config(g, to_double(p), c.tol);
  }
  return r;
}

// ---- automorphisms --------------------------------------------------------

struct AutArgs {
  std::string graph;
  bool subgroups = false;
};

Json cmd_automorphisms(const AutArgs& a, const Common&, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto aut = automorphism_group(g);
  Json elements = Json::array(), gens = Json::array();
  for (const auto& p : aut.elements()) elements.push_back({{"image", p.one_based()}, {"cycles", p.cycles()}});
  for (const auto& p : aut.generators()) gens.push_back(p.one_based());
  Json r{{"order", aut.order()}, {"generators", gens}, {"elements", elements}};
  if (a.subgroups) {
    Json subs = Json::array();
    for (const auto& h : subgroups(aut)) {
      Json hg = Json::array();
      for (const auto& p : h.generators()) hg.push_back(p.one_based());
      subs.push_back({{"order", h.order()}, {"cyclic", h.is_cyclic()}, {"generators", hg}});
    }
    r["subgroups"] = subs;
  }
  return r;
}

// ---- maxwell-scan ---------------------------------------------------------

struct ScanArgs {
  std::string graph;
  bool include_rejected = false;
};

Json cmd_maxwell_scan(const ScanArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  Json out = Json::array();
  for (const auto& e : algorithm1(g, {a.include_rejected, c.jobs})) {
    Json j = symmetry_to_json(e.pair);
    Json row{{"group_label", e.pair.label}, {"order", e.pair.group.order()}, {"generators", j["generators"]},
             {"images", j["images"]},       {"accepted", e.filter.accepted}, {"filters", e.filter.reasons}};
    if (e.report) {
      Json alpha = Json::object();
      for (std::size_t i = 0; i < e.report->labels.size(); ++i) alpha[e.report->labels[i]] = e.report->alpha[i];
      row["alpha"] = alpha;
      row["detected_s"] = e.report->detected_s;
      row["detected_flexes"] = e.report->detected_flexes;
      row["stress_types"] = e.report->stress_types;
      row["flex_types"] = e.report->flex_types;
    }
    out.push_back(row);
  }
  return out;
}

// ---- pure-condition -------------------------------------------------------

struct PureArgs {
  std::string graph, tie;
  int trials = 5;
  bool show_text = false;
};

Json factor_json(const Graph& g, const Factor& f, const MultiPoly* show) {
  Json j{{"factor", f.describe()},
         {"kind", factor_kind_name(f.kind)},
         {"provenance", provenance_name(f.provenance)},
         {"multiplicity", f.multiplicity},
         {"degree", f.poly.total_degree()},
         {"terms", f.poly.size()},
         {"polynomial", poly_to_json(f.poly)}};
  if (show) j["text"] = f.poly.to_string(configuration_variable_names(g.n()));
  if (f.evidence) {
    Json pats = Json::array();
    for (const auto& p : f.evidence->patterns) pats.push_back(p);
    j["irreducibility"] = {{"certified", f.evidence->certified},
                           {"restricted_degree", f.evidence->degree},
                           {"primes", f.evidence->primes},
                           {"degree_patterns", pats},
                           {"possible_factor_degrees", f.evidence->possible_degrees}};
  }
  return j;
}

Json profile_json(const Graph& g, const StressProfile& p) {
  Json trials = Json::array();
  for (const auto& [dim, sup] : p.trials) trials.push_back({{"s", dim}, {"support", edge_list(g, sup)}});
  return Json{{"s", p.dim}, {"support", edge_list(g, p.support)}, {"full_support", p.full_support},
              {"stable", p.stable}, {"trials", trials}};
}

Json alg2_json(const Graph& g, const Algorithm2Report& rep, bool text) {
  Json factors = Json::array();
  for (const auto& e : rep.entries) {
    Json f = factor_json(g, e.factor, text ? &e.factor.poly : nullptr);
    f["profile"] = profile_json(g, e.profile);
    f["extensive"] = e.extensive;
    factors.push_back(f);
  }
  Json r{{"pure_condition", {{"degree", rep.condition.total_degree()}, {"terms", rep.condition.size()},
                             {"polynomial", poly_to_json(rep.condition)}}},
         {"content", to_string(rep.factors.content)},
         {"verified", rep.factors.verified},
         {"factors", factors},
         {"failure", rep.failure}};
  if (text) r["pure_condition"]["text"] = rep.condition.to_string(configuration_variable_names(g.n()));
  return r;
}

Json cmd_pure_condition(const PureArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  std::optional<std::pair<int, int>> tie;
  if (!a.tie.empty()) {
    auto v = parse_vertex_list(a.tie);
    if (v.size() != 2) throw std::invalid_argument("--tie expects two vertices a,b");
    tie = std::pair{v[0], v[1]};
  }
  return alg2_json(g, algorithm2(g, c.seed, a.trials, tie), a.show_text);
}

// ---- rubberband -----------------------------------------------------------

struct RubberArgs {
  std::string graph, boundary, weights, boundary_config;
  bool mixed_sign = false;
};

template <class T> Json rubber_json(const Graph& g, const RubberBandResult<T>& r) {
  return Json{{"config", configuration_to_json(r.config)},
              {"stress", edge_vector_to_json(g, r.stress)},
              {"s", r.s},
              {"full_support", r.full_support},
              {"extensive", r.extensive},
              {"warnings", r.warnings}};
}

Json cmd_rubberband(const RubberArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  RubberBandProblem<Rational> pr;
  pr.graph = g;
  Json info = Json::object();
  if (a.boundary.empty()) {
    auto ch = choose_boundary(g, 2);
    pr.boundary = ch.vertices;
    info["boundary_induces_clique"] = ch.induces_clique;
  } else {
    pr.boundary = parse_vertex_list(a.boundary);
  }
  pr.boundary_positions = a.boundary_config.empty() ? sample_boundary_positions(2, c.seed)
                                                     : configuration_from_json(in.load("boundary_config", a.boundary_config));
  pr.weights = a.weights.empty() ? sample_weights(g, pr.boundary, c.seed, a.mixed_sign)
                                 : edge_vector_from_json(g, in.load("weights", a.weights));
  Json bnd = Json::array();
  for (int v : pr.boundary) bnd.push_back(v + 1);
  info["boundary"] = bnd;
  Json result;
  if (c.mode() == ScalarMode::Rational) {
    result = rubber_json(g, algorithm3(pr, c.tol));
  } else {
    RubberBandProblem<double> pd{g, 2, pr.boundary, to_double(pr.boundary_positions), to_double_vec(pr.weights)};
    result = rubber_json(g, algorithm3(pd, c.tol));
  }
  for (auto& [k, v] : info.items()) result[k] = v;
  return result;
}

// ---- sym-extensive --------------------------------------------------------

struct SymExtArgs {
  std::string graph, sym;
  int trials = 3;
};

Json cmd_sym_extensive(const SymExtArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  Algorithm4Report rep;
  if (a.sym.empty()) {
    rep = algorithm4(g, c.seed, a.trials, c.jobs);
  } else {
    rep = algorithm4(g, {symmetry_from_json(g, in.load("sym", a.sym))}, c.seed, a.trials, c.jobs);
  }
  Json hits = Json::array();
  for (const auto& h : rep.hits) {
    Json cert = h.certificate.is_exact() ? configuration_to_json(*h.certificate.exact)
                                         : configuration_to_json(h.certificate.approx);
    hits.push_back({{"symmetry", symmetry_to_json(h.pair)},
                    {"factor", rep.alg2.entries[h.factor_index].factor.describe()},
                    {"certificate", cert},
                    {"s", h.s},
                    {"full_support", h.full_support},
                    {"orbit_constant", h.orbit_constant},
                    {"stress", edge_vector_to_json(g, h.stress)}});
  }
  Json ext = Json::array();
  for (const auto& e : rep.alg2.entries)
    if (e.extensive) ext.push_back(e.factor.describe());
  return Json{{"extensive_factors", ext},
              {"pairs_tested", rep.pairs_tested},
              {"hits", hits},
              {"failure", rep.failure}};
}

// ---- average --------------------------------------------------------------

struct AverageArgs {
  std::string graph, config, sym;
};

Json cmd_average(const AverageArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto p = configuration_from_json(in.load("config", a.config));
  auto pair = symmetry_from_json(g, in.load("sym", a.sym));
  if (p.n() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("configuration and graph sizes differ");
  if (c.mode() == ScalarMode::Rational) {
    auto q = average(pair, p);
    return Json{{"symmetry", symmetry_to_json(pair)}, {"config", configuration_to_json(q)},
                {"symmetric", is_symmetric(pair, q)}};
  }
  auto q = average(pair, to_double(p));
  return Json{{"symmetry", symmetry_to_json(pair)}, {"config", configuration_to_json(q)},
              {"symmetric", is_symmetric(pair, q, 1e3 * c.tol)}};
}

// ---- classify-stress ------------------------------------------------------

struct ClassifyArgs {
  std::string graph, config, sym;
  std::size_t cap = kSelectionCap;
};

template <class T> Json classify_json(const Graph& g, const StressClassification<T>& cl) {
  Json per = Json::array();
  for (const auto& s : cl.stresses)
    per.push_back({{"stress", edge_vector_to_json(g, s.stress)},
                   {"support", edge_list(g, s.support)},
                   {"strongly_localised", s.strongly_localised},
                   {"witness_vertices", [&] {
                      Json v = Json::array();
                      for (int x : s.witness.vertices) v.push_back(x + 1);
                      return v;
                    }()},
                   {"weakly_localised", s.weakly_localised},
                   {"gamma_extensive", s.gamma_extensive}});
  return Json{{"s", cl.s},
              {"group_order", cl.group_order},
              {"weak_span_dim", cl.weak_span_dim},
              {"gamma_extensive_dim", cl.gamma_extensive_dim},
              {"extensive", cl.extensive},
              {"rank_rel_tol", cl.rank_rel_tol},
              {"support_rel_tol", cl.support_rel_tol},
              {"stresses", per}};
}

Json cmd_classify(const ClassifyArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto p = configuration_from_json(in.load("config", a.config));
  if (p.n() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("configuration and graph sizes differ");
  SymmetryPair pair = a.sym.empty() ? trivial_pair(g) : symmetry_from_json(g, in.load("sym", a.sym));
  Json r = c.mode() == ScalarMode::Rational ? classify_json(g, classify(pair.group, g, p, a.cap, c.tol))
                                            : classify_json(g, classify(pair.group, g, to_double(p), a.cap, c.tol));
  r["symmetry"] = symmetry_to_json(pair);
  return r;
}

// ---- lift -----------------------------------------------------------------

struct LiftArgs {
  std::string graph, config, stress, faces;
};

template <class T>
Json lift_impl(const Graph& g, const Configuration<T>& p, std::optional<Vec<T>> w, std::optional<FaceStructure> fs,
               double tol) {
  if (!w) {
    auto sb = self_stress_basis(g, p, tol);
    if (sb.s != 1) throw DomainError("NotASelfStress", "no --stress given and the stress space is not one-dimensional");
    w = sb.basis.front();
  }
  Framework<T> fw{g, p};
  auto lf = maxwell_cremona_lift(fw, *w, fs, tol);
  return Json{{"lift", lift_to_json(lf)}, {"stress", edge_vector_to_json(g, *w)}, {"coplanar", faces_coplanar(lf, tol)}};
}

Json cmd_lift(const LiftArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto p = configuration_from_json(in.load("config", a.config));
  if (p.n() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("configuration and graph sizes differ");
  std::optional<Vec<Rational>> w;
  if (!a.stress.empty()) w = edge_vector_from_json(g, in.load("stress", a.stress));
  std::optional<FaceStructure> fs;
  if (!a.faces.empty()) {
    Json j = in.load("faces", a.faces);
    fs = faces_from_json(j.is_object() ? j.at("faces") : j);
    fs->outer = j.is_object() && j.contains("outer_face") ? j.at("outer_face").get<int>() - 1 : 0;
  }
  if (c.mode() == ScalarMode::Rational) return lift_impl(g, p, w, fs, c.tol);
  std::optional<Vec<double>> wd;
  if (w) wd = to_double_vec(*w);
  return lift_impl(g, to_double(p), wd, fs, c.tol);
}

// ---- resolve-loads --------------------------------------------------------

struct ResolveArgs {
  std::string graph, lift, loads;
};

Json cmd_resolve_loads(const ResolveArgs& a, const Common& c, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto lf = lift_from_json(g, in.load("lift", a.lift));
  Json lj = in.load("loads", a.loads);
  const Json& arr = lj.is_object() ? lj.at("loads") : lj;
  std::vector<LoadVector<Rational>> loads;
  for (const auto& l : arr) {
    std::vector<Rational> beta;
    for (const auto& x : l) beta.push_back(scalar_from_json(x));
    if (beta.size() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("load needs one value per vertex");
    loads.push_back(vertical_load(beta));
  }
  auto res = vertical_resolvability(lf, loads, c.tol);
  Json per = Json::array();
  for (std::size_t i = 0; i < loads.size(); ++i) {
    auto ps = projection_stress(lf, loads[i], c.tol);
    Json e{{"resolvable_modulo_trivial", static_cast<bool>(res.feasible[i])}, {"exact_feasible", ps.feasible}};
    if (ps.feasible) {
      e["stress"] = edge_vector_to_json(g, ps.omega);
      e["projection_self_stress"] = ps.certificate;
    } else {
      e["least_squares_residual"] = ps.residual;
    }
    per.push_back(e);
  }
  return Json{{"resolvable_dim", res.resolvable_dim}, {"equilibrium_dim", res.equilibrium_dim}, {"loads", per}};
}

// ---- error-bound ----------------------------------------------------------

struct ErrorArgs {
  std::size_t m = 0;
  double omega_norm = 0, eps = 0;
  std::string graph, lift, stress;
  int trials = 0;
};

Json cmd_error_bound(const ErrorArgs& a, const Common& c, Inputs& in) {
  if (a.eps <= 0) throw std::invalid_argument("--eps must be positive");
  if (a.graph.empty()) {
    if (a.m == 0 || a.omega_norm <= 0) throw std::invalid_argument("give --m and --omega-norm, or --graph/--lift/--stress");
    return Json{{"m", a.m}, {"omega_norm", a.omega_norm}, {"eps", a.eps},
                {"diameter_bound", perturbation_bound(a.m, a.omega_norm, a.eps)}};
  }
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto lf = lift_from_json(g, in.load("lift", a.lift));
  Vec<double> w = to_double_vec(edge_vector_from_json(g, in.load("stress", a.stress)));
  auto pd = to_double(lf.config);
  auto f = left_multiply(w, rigidity_matrix(g, pd));
  double wn = norm2(w);
  double bound = perturbation_bound(static_cast<std::size_t>(g.m()), wn, a.eps);
  Rng rng(derive_seed(c.seed, "error-bound"));
  int violations = 0;
  double worst = 0, worst_load = 0;
  for (int t = 0; t < a.trials; ++t) {
    Configuration<double> e(3, pd.n());
    for (auto& x : e.coords) x = rng.uniform01() * 2 - 1;
    double d = diameter(e);
    double target = bound * rng.uniform01();
    if (d > 0)
      for (auto& x : e.coords) x *= target / d;
    auto rc = residual_check(g, w, pd, e, f);
    if (!rc.holds) ++violations;
    if (rc.bound > 0) worst = std::max(worst, rc.observed / rc.bound);
    worst_load = std::max(worst_load, rc.observed);
  }
  return Json{{"m", g.m()},
              {"omega_norm", wn},
              {"eps", a.eps},
              {"diameter_bound", bound},
              {"trials", a.trials},
              {"violations", violations},
              {"max_residual_over_bound", worst},
              {"max_load_error", worst_load}};
}

// ---- render ---------------------------------------------------------------

struct RenderArgs {
  std::string graph, config, stress, sym, out;
};

std::string cmd_render(const RenderArgs& a, Inputs& in) {
  Graph g = graph_from_json(in.load("graph", a.graph));
  auto p = to_double(configuration_from_json(in.load("config", a.config)));
  std::optional<Vec<double>> w;
  if (!a.stress.empty()) w = to_double_vec(edge_vector_from_json(g, in.load("stress", a.stress)));
  std::optional<SymmetryPair> pair;
  if (!a.sym.empty()) pair = symmetry_from_json(g, in.load("sym", a.sym));
  return render_svg(g, p, w, pair ? &*pair : nullptr);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Symmetry-adapted self-stress analysis of bar-joint frameworks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--seed", c.seed, "seed for every random stage")->capture_default_str();
  app.add_option("--scalar", c.scalar, "rational or float")
      ->check(CLI::IsMember({"rational", "float"}))
      ->capture_default_str();
  app.add_option("--tol", c.tol, "relative rank tolerance in float mode")->capture_default_str();
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  std::string out;
  app.add_option("--out", out, "write output to a file instead of stdout");

  AnalyzeArgs an;
  auto* s_an = app.add_subcommand("analyze", "counts, stresses and motions");
  s_an->add_option("--graph", an.graph)->required();
  s_an->add_option("--config", an.config);

  AutArgs au;
  auto* s_au = app.add_subcommand("automorphisms", "automorphism group");
  s_au->add_option("--graph", au.graph)->required();
  s_au->add_flag("--subgroups", au.subgroups, "list all subgroups");

  ScanArgs sc;
  auto* s_sc = app.add_subcommand("maxwell-scan", "symmetry-extended Maxwell counts over all symmetries");
  s_sc->add_option("--graph", sc.graph)->required();
  s_sc->add_flag("--include-rejected", sc.include_rejected);

  PureArgs pu;
  auto* s_pu = app.add_subcommand("pure-condition", "pure condition, factors and stress profiles");
  s_pu->add_option("--graph", pu.graph)->required();
  s_pu->add_option("--tie", pu.tie, "tie-down vertices a,b (adjacent)");
  s_pu->add_option("--trials", pu.trials)->capture_default_str();
  s_pu->add_flag("--text", pu.show_text, "include polynomials as text");

  RubberArgs rb;
  auto* s_rb = app.add_subcommand("rubberband", "force-density construction of a self-stressed framework");
  s_rb->add_option("--graph", rb.graph)->required();
  s_rb->add_option("--boundary", rb.boundary, "boundary vertices, e.g. 1,2,3");
  s_rb->add_option("--weights", rb.weights, "edge weights JSON");
  s_rb->add_option("--boundary-config", rb.boundary_config, "boundary placement JSON");
  s_rb->add_flag("--mixed-sign", rb.mixed_sign, "sample weights of both signs");

  SymExtArgs se;
  auto* s_se = app.add_subcommand("sym-extensive", "symmetric realisations with an extensive self-stress");
  s_se->add_option("--graph", se.graph)->required();
  s_se->add_option("--sym", se.sym, "restrict to one symmetry");
  s_se->add_option("--trials", se.trials)->capture_default_str();

  AverageArgs av;
  auto* s_av = app.add_subcommand("average", "symmetric average of a configuration");
  s_av->add_option("--graph", av.graph)->required();
  s_av->add_option("--config", av.config)->required();
  s_av->add_option("--sym", av.sym)->required();

  ClassifyArgs cl;
  auto* s_cl = app.add_subcommand("classify-stress", "localised and extensive self-stresses");
  s_cl->add_option("--graph", cl.graph)->required();
  s_cl->add_option("--config", cl.config)->required();
  s_cl->add_option("--sym", cl.sym);
  s_cl->add_option("--cap", cl.cap, "selection function cap")->capture_default_str();

  LiftArgs li;
  auto* s_li = app.add_subcommand("lift", "Maxwell-Cremona lift of a planar self-stress");
  s_li->add_option("--graph", li.graph)->required();
  s_li->add_option("--config", li.config)->required();
  s_li->add_option("--stress", li.stress);
  s_li->add_option("--faces", li.faces);

  ResolveArgs rl;
  auto* s_rl = app.add_subcommand("resolve-loads", "vertical load resolution by a lifted framework");
  s_rl->add_option("--graph", rl.graph)->required();
  s_rl->add_option("--lift", rl.lift)->required();
  s_rl->add_option("--loads", rl.loads)->required();

  ErrorArgs eb;
  auto* s_eb = app.add_subcommand("error-bound", "fabrication tolerance for a load error");
  s_eb->add_option("--m", eb.m);
  s_eb->add_option("--omega-norm", eb.omega_norm);
  s_eb->add_option("--eps", eb.eps)->required();
  s_eb->add_option("--graph", eb.graph);
  s_eb->add_option("--lift", eb.lift);
  s_eb->add_option("--stress", eb.stress);
  s_eb->add_option("--trials", eb.trials)->capture_default_str();

  RenderArgs rd;
  auto* s_rd = app.add_subcommand("render", "SVG drawing");
  s_rd->add_option("--graph", rd.graph)->required();
  s_rd->add_option("--config", rd.config)->required();
  s_rd->add_option("--stress", rd.stress);
  s_rd->add_option("--sym", rd.sym);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto emit = [&](const std::string& text) {
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      if (!f) throw std::invalid_argument("cannot write " + out);
      f << text;
    }
  };

  try {
    Inputs in;
    if (s_rd->parsed()) {
      emit(cmd_render(rd, in));
      return 0;
    }
    Json result;
    std::string name;
    if (s_an->parsed()) name = "analyze", result = cmd_analyze(an, c, in);
    else if (s_au->parsed()) name = "automorphisms", result = cmd_automorphisms(au, c, in);
    else if (s_sc->parsed()) name = "maxwell-scan", result = cmd_maxwell_scan(sc, c, in);
    else if (s_pu->parsed()) name = "pure-condition", result = cmd_pure_condition(pu, c, in);
    else if (s_rb->parsed()) name = "rubberband", result = cmd_rubberband(rb, c, in);
    else if (s_se->parsed()) name = "sym-extensive", result = cmd_sym_extensive(se, c, in);
    else if (s_av->parsed()) name = "average", result = cmd_average(av, c, in);
    else if (s_cl->parsed()) name = "classify-stress", result = cmd_classify(cl, c, in);
    else if (s_li->parsed()) name = "lift", result = cmd_lift(li, c, in);
    else if (s_rl->parsed()) name = "resolve-loads", result = cmd_resolve_loads(rl, c, in);
    else if (s_eb->parsed()) name = "error-bound", result = cmd_error_bound(eb, c, in);
    Json report{{"command", name},   {"version", kVersion}, {"seed", c.seed},
                {"scalar", c.scalar}, {"tol", c.tol},        {"inputs", in.digests()},
                {"result", result}};
    emit(report.dump(2) + "\n");
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace symstress::cli
