#include <CLI11.hpp>
#include <chrono>

#include <fstream>
#include <iostream>

#include "inputs.hpp"
#include "qlink/diagram/build.hpp"
#include "qlink/diagram/corpus.hpp"
#include "qlink/diagram/pd_io.hpp"
#include "qlink/diagram/prime.hpp"
#include "qlink/diagram/states.hpp"
#include "qlink/diagram/twist.hpp"
#include "qlink/engine/bracket.hpp"
#include "qlink/engine/colored_jones.hpp"
#include "qlink/engine/kauffman.hpp"
#include "qlink/errors.hpp"
#include "qlink/graphmodel/classify.hpp"
#include "qlink/graphmodel/graph_io.hpp"
#include "qlink/graphmodel/paths.hpp"
#include "qlink/slope_lab/coeffs.hpp"
#include "qlink/slope_lab/degrees.hpp"
#include "qlink/slope_lab/fit.hpp"
#include "qlink/slope_lab/surface.hpp"
#include "qlink/slope_lab/twisting.hpp"
#include "qlink/slope_lab/verify.hpp"
#include "qlink/slope_lab/volume.hpp"

using namespace qlink;
using namespace qlink::cli;

namespace {

Json quadratic_json(const Quadratic& q) {
  Json j;
  j["a2"] = rat(q.a2);
  j["a1"] = rat(q.a1);
  j["a0"] = rat(q.a0);
  return j;
}

Json hypotheses_json(const std::vector<Hypothesis>& hs) {
  Json j = Json::array();
  for (const auto& h : hs) j.push_back({{"name", h.name}, {"ok", h.ok}});
  return j;
}

Json diagram_summary(const LinkDiagram& d) {
  const CrossingCounts k = counts(d);
  const Adequacy a = adequacy(d);
  Json j;
  j["pd"] = format_pd(d);
  j["diagram"] = diagram_to_json(d);
  j["crossings"] = k.c;
  j["components"] = component_count(d);
  j["writhe"] = k.writhe;
  j["c_pos"] = k.c_pos;
  j["c_neg"] = k.c_neg;
  j["twist_number"] = k.tw;
  j["twist_region_sizes"] = k.region_sizes;
  j["a_adequate"] = a.a_adequate;
  j["b_adequate"] = a.b_adequate;
  return j;
}

int negative_total(const WeightedPlanarGraph& g) {
  int r = 0;
  for (int e : g.negative_edges()) r += g.edge(e).weight;
  return r;
}

DegreeVariant variant_for(const WeightedPlanarGraph* g) {
  if (!g) return DegreeVariant::kAdequate;
  const auto neg = g->negative_edges().size();
  if (neg == 0) return DegreeVariant::kAdequate;
  return neg == 1 ? DegreeVariant::kNearAlternating : DegreeVariant::kMultiTwist;
}

Json cmd_graph2link(const LoadedInput& in) {
  Json j;
  j["graph"] = graph_to_json(require_graph(in, "graph2link"));
  j["link"] = diagram_summary(in.diagram);
  return j;
}

Json cmd_classify(const LoadedInput& in) {
  const WeightedPlanarGraph g = require_graph(in, "classify");
  const ValidationReport v = validate(g);
  Json j;
  j["validation"] = {{"planar", v.planar},
                     {"connected", v.connected},
                     {"two_connected", v.two_connected},
                     {"vertices", v.vertices},
                     {"edges", v.edges},
                     {"faces", v.faces},
                     {"cut_vertices", v.cut_vertices},
                     {"self_loops", v.self_loops},
                     {"negative_edges", v.negative_edges},
                     {"zero_weight_edges", v.zero_weight_edges}};
  if (v.negative_edges.size() == 1) {
    const ClassificationReport c = near_alternating_check(g);
    Json na;
    na["negative_edge"] = c.negative_edge;
    na["r"] = c.r;
    na["t"] = c.t;
    na["omega"] = c.omega;
    na["omega_over_t"] = rat(c.ratio);
    na["conditions"] = {{"|r| >= 2", c.r_at_least_two},
                        {"t > 2", c.t_above_two},
                        {"omega/t > |r|", c.ratio_above_r},
                        {"deleted graph 2-connected", c.deleted_two_connected},
                        {"deleted diagram prime", c.deleted_prime},
                        {"contracted diagram A-adequate", c.contracted_a_adequate},
                        {"contracted diagram B-adequate", c.contracted_b_adequate}};
    na["verdict"] = c.verdict;
    na["notes"] = c.notes;
    j["near_alternating"] = na;
  } else if (v.negative_edges.size() >= 2 && v.negative_components_single) {
    const MultiTwistProfile p = multi_twist_profile(g);
    Json mt;
    mt["R"] = p.R;
    mt["r"] = p.r;
    mt["t"] = p.t;
    mt["omega"] = p.omega;
    mt["omega_over_t"] = rat(p.ratio);
    mt["predicate"] = p.predicate;
    mt["literal_predicate"] = p.literal_predicate;
    j["multi_twist"] = mt;
  }
  j["link"] = diagram_summary(in.diagram);
  return j;
}

Json invariant_record(const std::string& name, const Json& poly, const EngineStats& st,
                      std::chrono::steady_clock::time_point start, const CommonOptions& opt) {
  Json j;
  j["invariant"] = name;
  j["engine"] = st.engine;
  j["poly"] = poly;
  j["states_evaluated"] = st.states_evaluated;
  j["max_width"] = st.max_width;
  j["crossings"] = st.crossings;
  if (opt.timing)
    j["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return j;
}

Json cmd_bracket(const LoadedInput& in, const CommonOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  EngineStats st;
  const LaurentPoly b = bracket(in.diagram, engine_config(opt), &st);
  return invariant_record("bracket", to_json(b), st, start, opt);
}

Json cmd_cjones(const LoadedInput& in, const CommonOptions& opt, bool reduced) {
  const auto [lo, hi] = n_bounds(opt, 2, 2);
  const EngineConfig cfg = engine_config(opt);
  Json rows = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const auto start = std::chrono::steady_clock::now();
    EngineStats st;
    LaurentPoly p = colored_jones(in.diagram, n, cfg, &st);
    Json row = invariant_record("cjones", to_json(p), st, start, opt);
    row["n"] = n;
    if (reduced) row["reduced"] = to_json(reduce_colored_jones(p, n));
    rows.push_back(std::move(row));
  }
  if (rows.size() == 1) return rows.front();
  return Json{{"invariant", "cjones"}, {"results", rows}};
}

Json cmd_lambda(const LoadedInput& in, const CommonOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  KauffmanStats st;
  const BiLaurentPoly p = kauffman_lambda(in.diagram, {}, &st);
  Json j;
  j["invariant"] = "lambda";
  j["engine"] = "skein";
  j["poly"] = to_json(p);
  j["z_degree"] = p.is_zero() ? 0 : p.max_deg2();
  j["states_evaluated"] = st.calls;
  j["memo_hits"] = st.memo_hits;
  if (opt.timing)
    j["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return j;
}

Json cmd_slopes(const LoadedInput& in, const CommonOptions& opt) {
  const auto [lo, hi] = n_bounds(opt, 2, 5);
  const EngineConfig cfg = engine_config(opt);
  const WeightedPlanarGraph* g = in.graph ? &*in.graph : nullptr;
  const DegreeVariant v = variant_for(g);
  const DegreePrediction pred = predict_min_degree(in.diagram, g ? negative_total(*g) : 0, v);
  std::vector<std::pair<int, long long>> mins, maxs;
  Json rows = Json::array();
  Json errors = Json::array();
  for (int n = lo; n <= hi; ++n) {
    try {
      const LaurentPoly p = colored_jones(in.diagram, n, cfg);
      mins.emplace_back(n, p.min_deg());
      maxs.emplace_back(n, p.max_deg());
      rows.push_back({{"n", n},
                      {"min_degree", p.min_deg()},
                      {"predicted_min_degree", pred.predict(n)},
                      {"max_degree", p.max_deg()},
                      {"predicted_max_degree", pred.predict_max(n)}});
    } catch (const CapacityError& e) {
      errors.push_back({{"n", n}, {"error", e.what()}});
      break;
    }
  }
  Json j;
  j["variant"] = variant_name(v);
  j["predicted_min"] = quadratic_json(pred.min_degree);
  j["predicted_max"] = quadratic_json(pred.max_degree);
  j["predicted_js"] = rat(pred.min_degree.a2);
  j["predicted_jx"] = rat(pred.min_degree.a1 / 2);
  j["rows"] = rows;
  auto fit = [&](const std::vector<std::pair<int, long long>>& s) -> Json {
    if (s.size() < 4) return "need at least 4 consecutive n";
    const SlopeReport r = fit_quasi_quadratic(s);
    Json f;
    f["quadratic"] = quadratic_json(r.fit);
    f["js"] = rat(r.js);
    f["jx"] = rat(r.jx);
    f["verified"] = r.fit_verified;
    Json res = Json::array();
    for (const auto& [n, q] : r.residuals) res.push_back({{"n", n}, {"residual", rat(q)}});
    f["residuals"] = res;
    return f;
  };
  j["fit_min"] = fit(mins);
  j["fit_max"] = fit(maxs);
  j["engine_errors"] = errors;
  if (g) {
    const BuiltDiagram b = build_diagram_with_map(*g);
    const SurfaceReport s = surface_report(b.diagram, pretzel_state(b, *g));
    j["state_surface"] = {{"boundary_slope", s.boundary_slope},
                          {"euler_char", s.euler_char},
                          {"boundary_components", s.boundary_components}};
  }
  return j;
}

Json coeff_json(const TailCoefficients& t) {
  return {{"n", t.n},
          {"alpha", t.alpha.get_str()},
          {"beta", t.beta.get_str()},
          {"alpha_p", t.alpha_p.get_str()},
          {"beta_p", t.beta_p.get_str()},
          {"overlap", t.overlap}};
}

StableCoeffReport coeff_report(const LoadedInput& in, int lo, int hi, const EngineConfig& cfg) {
  std::vector<LaurentPoly> red;
  for (int n = lo; n <= hi; ++n) red.push_back(reduced_colored_jones(in.diagram, n, cfg));
  int betti_sigma = resolve(in.diagram, KauffmanState::all(in.diagram, Smoothing::A)).betti1;
  int r = 0;
  if (in.graph && in.graph->negative_edges().size() == 1) {
    const BuiltDiagram b = build_diagram_with_map(*in.graph);
    betti_sigma = resolve(b.diagram, pretzel_state(b, *in.graph)).betti1;
    r = negative_total(*in.graph);
  }
  const int betti_b = resolve(in.diagram, KauffmanState::all(in.diagram, Smoothing::B)).betti1;
  return stable_coeffs(red, lo, betti_sigma, betti_b, r);
}

Json cmd_coeffs(const LoadedInput& in, const CommonOptions& opt) {
  const auto [lo, hi] = n_bounds(opt, 2, 3);
  const StableCoeffReport r = coeff_report(in, lo, hi, engine_config(opt));
  Json obs = Json::array();
  for (const auto& t : r.observed) obs.push_back(coeff_json(t));
  Json j;
  j["observed"] = obs;
  j["predicted"] = {{"alpha", r.predicted_alpha},
                    {"beta", r.predicted_beta},
                    {"alpha_p", r.predicted_alpha_p},
                    {"beta_p", r.predicted_beta_p}};
  j["beta_rule"] = r.beta_rule;
  j["stable"] = {{"alpha", r.alpha_stable},
                 {"beta", r.beta_stable},
                 {"alpha_p", r.alpha_p_stable},
                 {"beta_p", r.beta_p_stable}};
  j["matches"] = r.matches;
  j["inconclusive"] = r.inconclusive;
  return j;
}

Json v3_json(const V3Linear& x) {
  return {{"rational", rat(x.a)}, {"v3_multiple", rat(x.b)}, {"decimal", format_decimal(x.value())}};
}

Json cmd_volume(const LoadedInput& in, const CommonOptions& opt) {
  const WeightedPlanarGraph g = require_graph(in, "volume");
  const auto [lo, hi] = n_bounds(opt, 2, 2);
  (void)hi;
  const VolumeInputs vi = volume_inputs(g, in.diagram, lo, opt.twist_reduced, engine_config(opt));

  Json j;
  j["inputs"] = {{"tw", vi.tw},
                 {"min_region", vi.min_region},
                 {"prime", vi.prime},
                 {"twist_reduced", vi.twist_reduced},
                 {"adequate", vi.adequate},
                 {"near_alternating", vi.near_alternating},
                 {"beta", vi.beta},
                 {"beta_p", vi.beta_p},
                 {"coefficients_from_n", lo},
                 {"M", vi.m_const},
                 {"R", vi.big_r}};
  Json reps = Json::array();
  for (VolumeVariant v : {VolumeVariant::kFkpTwist, VolumeVariant::kAdequateCoeff,
                          VolumeVariant::kNearAlternating, VolumeVariant::kMultiTwist}) {
    const VolumeReport r = volume_bounds(vi, v);
    Json x;
    x["variant"] = variant_name(v);
    x["lower"] = v3_json(r.lower);
    x["upper"] = v3_json(r.upper);
    x["ordered"] = r.ordered;
    x["advisory"] = r.advisory;
    x["hypotheses"] = hypotheses_json(r.hypotheses);
    if (r.has_check) x["check_ok"] = r.check_ok;
    if (r.has_scaled) {
      x["scaled_lower"] = v3_json(r.scaled_lower);
      x["scaled_upper"] = v3_json(r.scaled_upper);
    }
    x["notes"] = r.notes;
    reps.push_back(std::move(x));
  }
  j["reports"] = reps;
  return j;
}

Json cmd_twist(const LoadedInput& in) {
  const WeightedPlanarGraph g = require_graph(in, "twist");
  const FullTwistSearch s = find_full_twists(g);
  Json j;
  j["bounded"] = s.bounded;
  if (s.bounded) j["m"] = s.m;
  j["diagnosis"] = s.diagnosis;
  const MultiTwistProfile& p = s.at_m;
  Json edges = Json::array();
  for (const auto& e : p.per_edge)
    edges.push_back({{"edge", e.edge}, {"r", e.r}, {"t", e.t}, {"omega", e.omega}});
  j["profile"] = {{"R", p.R},       {"r", p.r},
                  {"t", p.t},       {"omega", p.omega},
                  {"sum_r", p.sum_r}, {"omega_over_t", rat(p.ratio)},
                  {"predicate", p.predicate}, {"literal_predicate", p.literal_predicate},
                  {"per_edge", edges}};
  return j;
}

Json cmd_verify(const LoadedInput& in, const CommonOptions& opt, const std::string& theorem,
                bool& all_pass) {
  const WeightedPlanarGraph g = require_graph(in, "verify");
  const auto [lo, hi] = n_bounds(opt, 2, 3);
  const VerificationReport r = verify(g, parse_theorem(theorem), lo, hi, engine_config(opt));
  Json rows = Json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"item", x.item},
                    {"n", x.n},
                    {"predicted", x.predicted},
                    {"observed", x.observed},
                    {"pass", x.pass},
                    {"advisory", x.advisory}});
  all_pass = r.all_pass();
  Json j;
  j["theorem"] = r.theorem;
  j["variant"] = r.variant;
  j["hypotheses"] = hypotheses_json(r.hypotheses);
  j["rows"] = rows;
  j["engine_errors"] = r.engine_errors;
  j["stats"] = stats_json(r.stats);
  j["all_pass"] = all_pass;
  return j;
}

Json cmd_corpus(int max_edges, int max_crossings, int random, std::uint64_t seed) {
  Json graphs = Json::array();
  for (const auto& e : graph_corpus(max_edges, max_crossings))
    graphs.push_back({{"name", e.name}, {"pd", format_pd(e.diagram)}});
  Json braids = Json::array();
  for (const auto& e : random_pd_corpus(random, max_crossings, seed))
    braids.push_back({{"name", e.name}, {"pd", format_pd(e.diagram)}});
  Json j;
  j["seed"] = std::to_string(seed);
  j["max_edges"] = max_edges;
  j["max_crossings"] = max_crossings;
  j["graph_entries"] = graphs;
  j["random_entries"] = braids;
  return j;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ArgumentError("cannot write '" + out + "'");
  f << text;
}

int fail(const std::string& kind, const std::string& message, int code) {
  Json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum invariants of links built from weighted planar graphs"};
  app.require_subcommand(1);
  CommonOptions opt;
  std::string out, input, theorem = "all";
  int corpus_edges = 4, corpus_crossings = 10, corpus_random = 100;
  std::uint64_t seed = kCorpusSeed;
  bool reduced = false;

  auto add_common = [&](CLI::App* sc, bool needs_input) {
    if (needs_input) sc->add_option("input", input, "graph JSON, diagram JSON or PD file")->required();
    sc->add_option("--engine", opt.engine, "auto|brute|sweep");
    sc->add_option("--threads", opt.threads, "thread budget");
    sc->add_flag("--timing", opt.timing, "include runtime_ms in the output");
    sc->add_option("--out", out, "write JSON here instead of stdout");
    sc->add_option("--orient", opt.orient, "component orientations, e.g. 0:+,1:-");
    sc->add_flag("--twist-reduced", opt.twist_reduced, "declare the diagram twist-reduced");
    sc->add_option("--add-full-twists", opt.add_full_twists, "add m full twists to positive edges");
    sc->add_option("--n-range", opt.n_range, "colors a..b");
    sc->add_option("-n", opt.n, "single color");
  };
  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"graph2link", "build the boundary diagram of a weighted planar graph"},
           {"classify", "near-alternating / multi-twist report for a graph"},
           {"bracket", "Kauffman bracket"},
           {"cjones", "colored Jones polynomials"},
           {"lambda", "Kauffman two-variable polynomial"},
           {"slopes", "degree data, fitted and predicted Jones slopes"},
           {"coeffs", "stable tail coefficients"},
           {"volume", "volume bound reports"},
           {"twist", "minimal full-twist count for the multi-twist predicate"},
           {"verify", "check predicted degrees, surfaces and coefficients"}}) {
    sub[name] = app.add_subcommand(name, help);
    add_common(sub[name], true);
  }
  sub["cjones"]->add_flag("--reduced", reduced, "also print the reduced polynomial");
  sub["verify"]->add_option("--theorem", theorem, "degree|surface|coeffs|all");
  auto* corpus = app.add_subcommand("corpus", "regenerate the test corpus");
  corpus->add_option("--out", out, "write JSON here instead of stdout");
  corpus->add_option("--seed", seed, "seed for the random PD codes");
  corpus->add_option("--max-edges", corpus_edges, "graph size bound");
  corpus->add_option("--max-crossings", corpus_crossings, "crossing bound");
  corpus->add_option("--random", corpus_random, "number of random PD codes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("argument", e.what(), 2);
  }

  try {
    bool all_pass = true;
    Json result;
    if (corpus->parsed()) {
      result = cmd_corpus(corpus_edges, corpus_crossings, corpus_random, seed);
    } else {
      const LoadedInput in = load_input(input, opt);
      if (sub["graph2link"]->parsed()) result = cmd_graph2link(in);
      else if (sub["classify"]->parsed()) result = cmd_classify(in);
      else if (sub["bracket"]->parsed()) result = cmd_bracket(in, opt);
      else if (sub["cjones"]->parsed()) result = cmd_cjones(in, opt, reduced);
      else if (sub["lambda"]->parsed()) result = cmd_lambda(in, opt);
      else if (sub["slopes"]->parsed()) result = cmd_slopes(in, opt);
      else if (sub["coeffs"]->parsed()) result = cmd_coeffs(in, opt);
      else if (sub["volume"]->parsed()) result = cmd_volume(in, opt);
      else if (sub["twist"]->parsed()) result = cmd_twist(in);
      else if (sub["verify"]->parsed()) result = cmd_verify(in, opt, theorem, all_pass);
    }
    emit(result, out);
    return all_pass ? 0 : 1;
  } catch (const ArgumentError& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), 3);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 4);
  }
}
