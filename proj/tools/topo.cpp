#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "topo/continuity.hpp"
#include "topo/io.hpp"
#include "topo/suites.hpp"

using namespace topo;

namespace {

bool g_table = false;
constexpr std::size_t kAll = static_cast<std::size_t>(-1);

std::string subset_text(Subset a) { return format_subset(a); }

std::string system_text(const SetSystem& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + format_subset(s.sets()[i]);
  return out + "}";
}

// Prints JSON, or the table lines when --format table.
void emit(const json& j, const std::function<void(std::ostream&)>& table) {
  if (g_table)
    table(std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

void emit_topology(const Topology& t) {
  emit(to_json(t), [&](std::ostream& o) {
    o << "n: " << t.n() << "\nopens (" << t.opens().size() << "): " << system_text(t.opens()) << "\n";
  });
}

Subset parse_set_arg(const std::string& text, int n) { return subset_from_json(parse_json_text(text), n); }

Dyadic parse_dyadic_arg(const std::string& s) { return parse_dyadic(s); }

// ---- enumerate

void cmd_enumerate(int n, bool count_only) {
  if (count_only) {
    std::size_t c = count_topologies(n);
    emit(json(c), [&](std::ostream& o) { o << c << "\n"; });
    return;
  }
  auto tops = enumerate_topologies(n);
  json arr = json::array();
  for (const auto& t : tops) arr.push_back(to_json(t));
  emit(json{{"n", n}, {"count", tops.size()}, {"topologies", arr}}, [&](std::ostream& o) {
    for (const auto& t : tops) o << system_text(t.opens()) << "\n";
    o << tops.size() << " topologies\n";
  });
}

// ---- generate

struct GenerateArgs {
  std::string base, subbase, opens, closed, neighborhoods, set_map, closure_op, interior_op, nbhd_base;
  std::string preorder, preorder_family, side, restrict, metric, radii = "primary", family;
  bool inverse = false, direct = false;
};

void cmd_generate(const GenerateArgs& a) {
  if (!a.base.empty()) return emit_topology(generate_from_base(set_system_from_json(read_json_file(a.base))));
  if (!a.subbase.empty()) return emit_topology(generate_from_subbase(set_system_from_json(read_json_file(a.subbase))));
  if (!a.opens.empty()) return emit_topology(topology_from_json(read_json_file(a.opens)));
  if (!a.closed.empty())
    return emit_topology(topology_from_closed(ClosedSystem(set_system_from_json(read_json_file(a.closed)))));
  if (!a.neighborhoods.empty())
    return emit_topology(topology_from_neighborhood_relation(relation_from_json(read_json_file(a.neighborhoods))));
  if (!a.nbhd_base.empty())
    return emit_topology(topology_from_neighborhood_base(relation_from_json(read_json_file(a.nbhd_base))));
  if (!a.set_map.empty()) {
    int n = 0;
    SetMap m = set_map_from_json(read_json_file(a.set_map), n);
    return emit_topology(topology_from_set_neighborhood_map(n, m));
  }
  if (!a.closure_op.empty()) {
    int n = 0;
    SubsetOperator f = operator_from_json(read_json_file(a.closure_op), n);
    return emit_topology(topology_from_closure_operator(n, f));
  }
  if (!a.interior_op.empty()) {
    int n = 0;
    SubsetOperator f = operator_from_json(read_json_file(a.interior_op), n);
    return emit_topology(topology_from_interior_operator(n, f));
  }
  if (!a.preorder.empty()) {
    Preorder p = preorder_from_json(read_json_file(a.preorder));
    if (!a.side.empty()) return emit_topology(one_sided_topology(p, a.side == "lower" ? Side::Lower : Side::Upper));
    if (!a.restrict.empty()) return emit_topology(interval_topology_restricted(p, parse_set_arg(a.restrict, p.n())));
    return emit_topology(interval_topology(p));
  }
  if (!a.preorder_family.empty()) {
    json j = read_json_file(a.preorder_family);
    std::vector<Preorder> fam;
    if (!j.contains("preorders") || !j["preorders"].is_array()) throw ParseError("missing \"preorders\" array");
    for (const auto& p : j["preorders"]) fam.push_back(preorder_from_json(p));
    int n = j.contains("n") ? j["n"].get<int>() : (fam.empty() ? 0 : fam[0].n());
    return emit_topology(family_interval_topology(n, fam));
  }
  if (!a.metric.empty()) {
    PseudoMetric m(matrix_from_json(read_json_file(a.metric)));
    return emit_topology(a.radii == "dense" ? metric_topology(m, dense_radii(m)) : metric_topology(m));
  }
  if (!a.family.empty()) {
    GeneratingFamily fam = family_from_json(read_json_file(a.family));
    if (a.inverse && fam.direction != Direction::Inverse) throw ParseError("--inverse given for a direct family");
    if (a.direct && fam.direction != Direction::Direct) throw ParseError("--direct given for an inverse family");
    return emit_topology(generated_topology(fam));
  }
  throw CLI::ValidationError("generate", "no source given");
}

// ---- analyze

struct AnalyzeArgs {
  std::string space, set, compare, homeomorphic, net, sequence, filter, nbhd_base_from, subspace;
};

void cmd_analyze(const AnalyzeArgs& a) {
  Topology t = topology_from_json(read_json_file(a.space));
  if (!a.set.empty()) {
    Subset s = parse_set_arg(a.set, t.n());
    SubsetAnalysis r = analyze_subset(t, s);
    json j = to_json(r);
    j["dense"] = is_dense(t, s);
    j["open"] = t.is_open(s);
    j["closed"] = t.is_closed(s);
    return emit(j, [&](std::ostream& o) {
      o << "interior: " << subset_text(r.interior) << "\nclosure:  " << subset_text(r.closure)
        << "\nderived:  " << subset_text(r.derived) << "\nboundary: " << subset_text(r.boundary) << "\n";
    });
  }
  if (!a.compare.empty()) {
    Topology u = topology_from_json(read_json_file(a.compare));
    const char* c = comparison_name(compare(t, u));
    return emit(json{{"comparison", c}}, [&](std::ostream& o) { o << c << "\n"; });
  }
  if (!a.homeomorphic.empty()) {
    Topology u = topology_from_json(read_json_file(a.homeomorphic));
    auto w = are_homeomorphic(t, u);
    json j = {{"homeomorphic", w.has_value()}, {"witness", w ? json(w->values()) : json(nullptr)}};
    return emit(j, [&](std::ostream& o) {
      o << (w ? "homeomorphic" : "not homeomorphic") << "\n";
      if (w) o << "witness: " << json(w->values()).dump() << "\n";
    });
  }
  if (!a.net.empty()) {
    Limits l = net_limits(t, net_from_json(read_json_file(a.net), t.n()));
    return emit(to_json(l), [&](std::ostream& o) { o << "lim: " << subset_text(l.lim) << "\nadh: " << subset_text(l.adh) << "\n"; });
  }
  if (!a.sequence.empty()) {
    Limits l = sequence_limits(t, sequence_from_json(read_json_file(a.sequence)));
    return emit(to_json(l), [&](std::ostream& o) { o << "lim: " << subset_text(l.lim) << "\nadh: " << subset_text(l.adh) << "\n"; });
  }
  if (!a.filter.empty()) {
    Limits l = filter_limits(t, Filter(set_system_from_json(read_json_file(a.filter))));
    return emit(to_json(l), [&](std::ostream& o) { o << "lim: " << subset_text(l.lim) << "\nadh: " << subset_text(l.adh) << "\n"; });
  }
  if (!a.nbhd_base_from.empty()) {
    PointSetRelation r = neighborhood_base_from_topological_base(set_system_from_json(read_json_file(a.nbhd_base_from)), t);
    return emit(to_json(r), [&](std::ostream& o) {
      for (const auto& [x, u] : r.pairs()) o << x << " " << subset_text(u) << "\n";
    });
  }
  if (!a.subspace.empty()) {
    Subspace s = subspace_topology(t, parse_set_arg(a.subspace, t.n()));
    json j = {{"topology", to_json(s.t)}, {"points", s.points}};
    return emit(j, [&](std::ostream& o) {
      o << "points: " << json(s.points).dump() << "\nopens: " << system_text(s.t.opens()) << "\n";
    });
  }
  PointSetRelation ns = neighborhood_system_of(t);
  json j = {{"topology", to_json(t)}, {"closeds", to_json(t.closeds())}, {"neighborhoods", to_json(ns)}};
  emit(j, [&](std::ostream& o) {
    o << "opens:   " << system_text(t.opens()) << "\nclosed:  " << system_text(t.closeds()) << "\n";
    for (int x = 0; x < t.n(); ++x) o << "N{" << x << "}: " << system_text(ns.section(x)) << "\n";
  });
}

// ---- filter

struct FilterArgs {
  std::string op;
  std::vector<std::string> bases;
  std::string map, space;
};

void emit_system(const SetSystem& s) {
  emit(to_json(s), [&](std::ostream& o) { o << system_text(s) << "\n"; });
}

void cmd_filter(const FilterArgs& a) {
  std::vector<SetSystem> sys;
  for (const auto& f : a.bases) sys.push_back(set_system_from_json(read_json_file(f)));
  if (sys.empty()) throw CLI::ValidationError("--base", "at least one base is required");
  const std::string& op = a.op;
  if (op == "generate") return emit_system(generate_filter(FilterBase(sys[0])).members());
  if (op == "ultra") {
    Filter f(sys[0]);
    bool u = is_ultrafilter(f);
    return emit(json{{"ultrafilter", u}, {"cluster_points", to_json(cluster_points(f))}},
                [&](std::ostream& o) { o << (u ? "ultrafilter" : "not an ultrafilter") << "\n"; });
  }
  if (op == "check") {
    auto v = filter_violation(sys[0]);
    return emit(json{{"filter", !v}, {"violation", v ? to_json(*v) : json(nullptr)}},
                [&](std::ostream& o) { o << (v ? "not a filter: " + v->detail : "filter") << "\n"; });
  }
  if (op == "extend") return emit_system(extend_to_ultrafilter(FilterBase(sys[0])).members());
  if (op == "sup") {
    std::vector<FilterBase> bs;
    for (const auto& s : sys) bs.emplace_back(s);
    return emit_system(supremum_of_filterbases(bs).members());
  }
  if (op == "image" || op == "inverse") {
    if (a.map.empty()) throw CLI::ValidationError("--map", "required for image filters");
    json mj = read_json_file(a.map);
    FilterBase b(sys[0]);
    if (op == "image") return emit_system(image_filter(b, map_from_json(mj)).members());
    return emit_system(inverse_image_filter(b, map_from_json(mj, b.n())).members());
  }
  if (op == "limits") {
    if (a.space.empty()) throw CLI::ValidationError("--space", "required for limits");
    Topology t = topology_from_json(read_json_file(a.space));
    Limits l = filter_base_limits(t, FilterBase(sys[0]).members());
    return emit(to_json(l), [&](std::ostream& o) { o << "lim: " << subset_text(l.lim) << "\nadh: " << subset_text(l.adh) << "\n"; });
  }
  throw CLI::ValidationError("--op", "unknown filter operation " + op);
}

// ---- cont

struct ContArgs {
  std::string src, dst, map, fx, fy;
  int at = -1;
};

void cmd_cont(const ContArgs& a) {
  Topology s = topology_from_json(read_json_file(a.src));
  Topology d = topology_from_json(read_json_file(a.dst));
  FiniteMap f = map_from_json(read_json_file(a.map), d.n());
  if (f.src_n() != s.n()) throw UniverseMismatch("map has " + std::to_string(f.src_n()) + " values for a " + std::to_string(s.n()) + "-point source");
  SpaceMap m(s, d, f);
  if (!a.fx.empty() || !a.fy.empty()) {
    if (a.fx.empty() || a.fy.empty() || a.at < 0) throw CLI::ValidationError("--fx", "--fx, --fy and --at go together");
    Filter fx(set_system_from_json(read_json_file(a.fx)));
    Filter fy(set_system_from_json(read_json_file(a.fy)));
    bool r = filter_continuity_at(fx, fy, m, a.at);
    return emit(json{{"filter_continuous", r}}, [&](std::ostream& o) { o << (r ? "continuous" : "not continuous") << "\n"; });
  }
  if (a.at >= 0) {
    if (a.at >= s.n()) throw ParseError("point outside the source carrier");
    json j = {{"at", a.at},
              {"continuous_at", is_continuous_at(m, a.at)},
              {"open_preimages_at", open_preimages_at(m, a.at)},
              {"filter_transfer", continuity::local_by_filter_transfer(m, a.at)},
              {"filter_bases", continuity::local_by_filter_bases(m, a.at)},
              {"nets", continuity::local_by_nets(m, a.at)}};
    return emit(j, [&](std::ostream& o) {
      for (auto it = j.begin(); it != j.end(); ++it) o << it.key() << ": " << it.value().dump() << "\n";
    });
  }
  auto res = global_characterizations(m);
  OpenClosed oc = map_open_closed(m);
  json chars = json::object();
  for (const auto& r : res) chars[r.name] = r.value;
  json j = {{"continuous", is_continuous(m)},
            {"characterizations", chars},
            {"open", oc.open},
            {"closed", oc.closed},
            {"homeomorphism", is_homeomorphism(m)},
            {"embedding", is_embedding(m)}};
  emit(j, [&](std::ostream& o) {
    o << "continuous: " << (is_continuous(m) ? "yes" : "no") << "\n";
    for (const auto& r : res) o << "  " << r.name << ": " << (r.value ? "yes" : "no") << "\n";
    o << "open: " << (oc.open ? "yes" : "no") << "\nclosed: " << (oc.closed ? "yes" : "no")
      << "\nhomeomorphism: " << (is_homeomorphism(m) ? "yes" : "no") << "\n";
  });
}

// ---- product, quotient

void cmd_product(const std::vector<std::string>& files) {
  std::vector<Topology> ts;
  for (const auto& f : files) ts.push_back(topology_from_json(read_json_file(f)));
  Product p = product_topology(ts);
  json j = {{"topology", to_json(p.t)}, {"coords", p.coords}};
  emit(j, [&](std::ostream& o) {
    for (std::size_t i = 0; i < p.coords.size(); ++i) o << i << " = " << json(p.coords[i]).dump() << "\n";
    o << "opens (" << p.t.opens().size() << "): " << system_text(p.t.opens()) << "\n";
  });
}

void cmd_quotient(const std::string& space, const std::string& classes, const std::string& metric) {
  if (!metric.empty()) {
    PseudoMetric m(matrix_from_json(read_json_file(metric)));
    MetricQuotient q = quotient_metric(m);
    Topology t = metric_topology(q.d);
    json cls = json::array();
    for (Subset c : q.classes) cls.push_back(to_json(c));
    json j = {{"classes", cls}, {"metric", to_json(q.d)}, {"topology", to_json(t)}};
    return emit(j, [&](std::ostream& o) {
      o << "classes: " << cls.dump() << "\nopens: " << system_text(t.opens()) << "\n";
    });
  }
  if (space.empty() || classes.empty()) throw CLI::ValidationError("quotient", "--space and --classes, or --metric");
  Topology t = topology_from_json(read_json_file(space));
  Quotient q = quotient_topology(t, finite_relation_from_json(read_json_file(classes)));
  json cls = json::array();
  for (Subset c : q.classes) cls.push_back(to_json(c));
  json j = {{"classes", cls}, {"topology", to_json(q.t)}};
  emit(j, [&](std::ostream& o) { o << "classes: " << cls.dump() << "\nopens: " << system_text(q.t.opens()) << "\n"; });
}

// ---- numeric

json trace_json(const BisectionResult& r) {
  json steps = json::array();
  for (const auto& s : r.trace) steps.push_back({{"x", to_json(s.x)}, {"y", to_json(s.y)}});
  return steps;
}

void emit_bisection(const BisectionResult& r, bool trace) {
  json j = {{"value", to_fraction_string(r.value)},
            {"dyadic", to_dyadic_string(r.value)},
            {"decimal", to_decimal_string(r.value)},
            {"steps", r.trace.size() - 1}};
  if (trace) j["trace"] = trace_json(r);
  emit(j, [&](std::ostream& o) {
    o << to_fraction_string(r.value) << " = " << to_decimal_string(r.value) << " (" << r.trace.size() - 1 << " steps)\n";
  });
}

void cmd_root(const std::string& a, unsigned m, const std::string& tol, bool trace) {
  emit_bisection(mth_root(parse_dyadic_arg(a), m, parse_dyadic_arg(tol)), trace);
}

void cmd_series(const std::string& geom, unsigned terms, const std::string& values, std::size_t from, std::size_t to) {
  if (!values.empty()) {
    auto xs = dyadic_vector_from_json(parse_json_text(values));
    Dyadic s = finite_series(xs, from, to == kAll ? xs.size() : to);
    return emit(json{{"sum", to_fraction_string(s)}}, [&](std::ostream& o) { o << to_fraction_string(s) << "\n"; });
  }
  if (geom.empty()) throw CLI::ValidationError("series", "--geom or --values required");
  if (terms == 0) throw CLI::ValidationError("--terms", "need at least one term");
  // terms counts x^0 .. x^(terms-1)
  GeometricResult r = geometric_partial_sum(parse_rational(geom), terms - 1);
  json j = {{"sum", to_fraction_string(r.sum)}, {"decimal", to_decimal_string(r.sum)}};
  j["closed_form"] = r.closed_form ? json(to_fraction_string(*r.closed_form)) : json(nullptr);
  emit(j, [&](std::ostream& o) {
    o << "sum: " << to_fraction_string(r.sum) << " = " << to_decimal_string(r.sum) << "\n";
    if (r.closed_form) o << "closed form: " << to_fraction_string(*r.closed_form) << "\n";
  });
}

// ---- check

struct CheckArgs {
  std::string cauchy_schwarz, metric, set, preorder, bisect, universal, candidate;
  int z_cap = 3;
};

void cmd_check(const CheckArgs& a) {
  if (!a.cauchy_schwarz.empty()) {
    json in = read_json_file(a.cauchy_schwarz);
    if (!in.contains("x") || !in.contains("y")) throw ParseError("need \"x\" and \"y\"");
    auto x = dyadic_vector_from_json(in["x"]), y = dyadic_vector_from_json(in["y"]);
    CauchySchwarz cs = cauchy_schwarz_check(x, y);
    MetricComparison mc = metric_compare(x, y);
    json j = {{"lhs", to_fraction_string(cs.lhs)},
              {"rhs", to_fraction_string(cs.rhs)},
              {"holds", cs.holds},
              {"max_distance", to_fraction_string(mc.max_distance)},
              {"euclid_squared", to_fraction_string(mc.euclid_squared)},
              {"sandwich", mc.sandwich},
              {"minkowski", mc.minkowski}};
    return emit(j, [&](std::ostream& o) {
      o << to_fraction_string(cs.lhs) << (cs.holds ? " <= " : " > ") << to_fraction_string(cs.rhs) << "\n"
        << "sandwich: " << (mc.sandwich ? "holds" : "fails") << "\nminkowski: " << (mc.minkowski ? "holds" : "fails") << "\n";
    });
  }
  if (!a.metric.empty()) {
    Matrix d = matrix_from_json(read_json_file(a.metric));
    MetricValidation v = validate_pseudometric(d);
    json j = {{"kind", metric_kind_name(v.kind)}, {"reason", v.reason}, {"witness", v.witness}};
    if (!a.set.empty()) {
      PseudoMetric m(d);
      auto dist = distance_to_set(m, parse_set_arg(a.set, m.n()));
      json dj = json::array();
      for (const auto& r : dist) dj.push_back(format_rational(r));
      j["distances"] = dj;
      j["zero_distance_set"] = to_json(zero_distance_set(m, parse_set_arg(a.set, m.n())));
    } else if (v.kind != MetricKind::Invalid) {
      PseudoMetric m(d);
      j["topology"] = to_json(metric_topology(m));
    }
    return emit(j, [&](std::ostream& o) {
      o << metric_kind_name(v.kind);
      if (!v.reason.empty()) o << ": " << v.reason << " " << json(v.witness).dump();
      o << "\n";
      if (j.contains("distances")) o << "distances: " << j["distances"].dump() << "\n";
    });
  }
  if (!a.preorder.empty()) {
    Preorder p = preorder_from_json(read_json_file(a.preorder));
    RelationReport r = relation_properties(p);
    json j = {{"transitive", r.transitive},
              {"reflexive", r.reflexive},
              {"connective", r.connective},
              {"full_domain", r.full_domain},
              {"full_range", r.full_range},
              {"full_field", r.full_field},
              {"interval_intersection", r.interval_intersection},
              {"interval_relation", r.interval_relation},
              {"least_upper_bound", r.least_upper_bound}};
    return emit(j, [&](std::ostream& o) {
      for (auto it = j.begin(); it != j.end(); ++it) o << it.key() << ": " << it.value().dump() << "\n";
    });
  }
  if (!a.bisect.empty()) {
    json in = read_json_file(a.bisect);
    for (const char* k : {"p", "a", "b", "w", "tol"})
      if (!in.contains(k)) throw ParseError(std::string("missing field \"") + k + "\"");
    DyadicPoly p(dyadic_vector_from_json(in["p"]));
    return emit_bisection(bisection_invert(p, dyadic_from_json(in["a"]), dyadic_from_json(in["b"]),
                                           dyadic_from_json(in["w"]), dyadic_from_json(in["tol"])),
                          true);
  }
  if (!a.universal.empty()) {
    if (a.candidate.empty()) throw CLI::ValidationError("--candidate", "required with --universal");
    GeneratingFamily fam = family_from_json(read_json_file(a.universal));
    Topology cand = topology_from_json(read_json_file(a.candidate));
    UniversalCheck u = check_universal_property(fam, cand, a.z_cap);
    json j = {{"holds", u.holds}, {"witness", nullptr}};
    if (u.witness) j["witness"] = {{"z", to_json(u.witness->z)}, {"g", u.witness->g.values()}};
    return emit(j, [&](std::ostream& o) { o << (u.holds ? "universal property holds" : "fails") << "\n"; });
  }
  throw CLI::ValidationError("check", "nothing to check");
}

// ---- verify

int cmd_verify(const std::string& suite, int n, unsigned jobs, std::uint64_t seed) {
  SuiteReport r = run_suite(suite, n, jobs, seed);
  emit(to_json(r), [&](std::ostream& o) {
    o << r.suite << " n=" << r.n << ": " << r.passed << "/" << r.instances << " passed\n";
    if (r.first_failure) o << "first counterexample: " << r.counterexample.dump() << "\n";
  });
  return r.passed == r.instances ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite topology toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  int n = 0;
  bool count_only = false;
  auto* en = app.add_subcommand("enumerate", "Enumerate topologies on n points");
  en->add_option("--n", n)->required();
  en->add_flag("--count-only", count_only);

  GenerateArgs g;
  auto* gen = app.add_subcommand("generate", "Build a topology from some generating data");
  gen->add_option("--base", g.base);
  gen->add_option("--subbase", g.subbase);
  gen->add_option("--opens", g.opens);
  gen->add_option("--closed", g.closed);
  gen->add_option("--neighborhoods", g.neighborhoods);
  gen->add_option("--nbhd-base", g.nbhd_base);
  gen->add_option("--set-map", g.set_map);
  gen->add_option("--closure-op", g.closure_op);
  gen->add_option("--interior-op", g.interior_op);
  gen->add_option("--preorder", g.preorder);
  gen->add_option("--preorder-family", g.preorder_family);
  gen->add_option("--side", g.side)->check(CLI::IsMember({"lower", "upper"}));
  gen->add_option("--restrict", g.restrict, "Order-dense subset as a JSON array");
  gen->add_option("--metric", g.metric);
  gen->add_option("--radii", g.radii)->check(CLI::IsMember({"primary", "dense"}));
  gen->add_option("--family", g.family);
  gen->add_flag("--inverse", g.inverse);
  gen->add_flag("--direct", g.direct);

  AnalyzeArgs an;
  auto* ana = app.add_subcommand("analyze", "Inspect a space");
  ana->add_option("--space", an.space)->required();
  ana->add_option("--set", an.set, "Subset as a JSON array");
  ana->add_option("--compare", an.compare);
  ana->add_option("--homeomorphic", an.homeomorphic);
  ana->add_option("--net", an.net);
  ana->add_option("--sequence", an.sequence);
  ana->add_option("--filter", an.filter);
  ana->add_option("--nbhd-base-from", an.nbhd_base_from);
  ana->add_option("--subspace", an.subspace);

  FilterArgs fa;
  auto* fil = app.add_subcommand("filter", "Filter operations");
  fil->add_option("--op", fa.op)
      ->required()
      ->check(CLI::IsMember({"generate", "check", "ultra", "extend", "sup", "image", "inverse", "limits"}));
  fil->add_option("--base", fa.bases);
  fil->add_option("--map", fa.map);
  fil->add_option("--space", fa.space);

  ContArgs ca;
  auto* con = app.add_subcommand("cont", "Continuity of a map");
  con->add_option("--src", ca.src)->required();
  con->add_option("--dst", ca.dst)->required();
  con->add_option("--map", ca.map)->required();
  con->add_option("--at", ca.at);
  con->add_option("--fx", ca.fx);
  con->add_option("--fy", ca.fy);

  std::vector<std::string> factors;
  auto* prod = app.add_subcommand("product", "Product topology");
  prod->add_option("spaces", factors)->required();

  std::string q_space, q_classes, q_metric;
  auto* quo = app.add_subcommand("quotient", "Quotient topology");
  quo->add_option("--space", q_space);
  quo->add_option("--classes", q_classes);
  quo->add_option("--metric", q_metric);

  std::string r_a, r_tol = "2^-20";
  unsigned r_m = 2;
  bool r_trace = false;
  auto* root = app.add_subcommand("root", "m-th root by bisection");
  root->add_option("--a", r_a)->required();
  root->add_option("--m", r_m);
  root->add_option("--tol", r_tol);
  root->add_flag("--trace", r_trace);

  std::string s_geom, s_values;
  unsigned s_terms = 10;
  std::size_t s_from = 1, s_to = kAll;
  auto* ser = app.add_subcommand("series", "Finite and geometric series");
  ser->add_option("--geom", s_geom);
  ser->add_option("--terms", s_terms);
  ser->add_option("--values", s_values, "JSON array of dyadics");
  ser->add_option("--from", s_from);
  ser->add_option("--to", s_to);

  CheckArgs ck;
  auto* chk = app.add_subcommand("check", "Exact checks");
  chk->add_option("--cauchy-schwarz", ck.cauchy_schwarz);
  chk->add_option("--metric", ck.metric);
  chk->add_option("--set", ck.set);
  chk->add_option("--preorder", ck.preorder);
  chk->add_option("--bisect", ck.bisect);
  chk->add_option("--universal", ck.universal);
  chk->add_option("--candidate", ck.candidate);
  chk->add_option("--z-cap", ck.z_cap);

  std::string v_suite;
  int v_n = 3;
  unsigned v_jobs = 1;
  std::uint64_t v_seed = 1;
  auto* ver = app.add_subcommand("verify", "Run an invariant suite");
  ver->add_option("--suite", v_suite)->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--n", v_n);
  ver->add_option("--jobs", v_jobs);
  ver->add_option("--seed", v_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g_table = format == "table";

  try {
    if (*en) cmd_enumerate(n, count_only);
    if (*gen) cmd_generate(g);
    if (*ana) cmd_analyze(an);
    if (*fil) cmd_filter(fa);
    if (*con) cmd_cont(ca);
    if (*prod) cmd_product(factors);
    if (*quo) cmd_quotient(q_space, q_classes, q_metric);
    if (*root) cmd_root(r_a, r_m, r_tol, r_trace);
    if (*ser) cmd_series(s_geom, s_terms, s_values, s_from, s_to);
    if (*chk) cmd_check(ck);
    if (*ver) return cmd_verify(v_suite, v_n, v_jobs, v_seed);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
