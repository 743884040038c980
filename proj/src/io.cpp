#include "topo/io.hpp"

#include <fstream>
#include <sstream>

namespace topo {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> ints_of(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> v;
  for (const auto& e : j) v.push_back(int_of(e, what));
  return v;
}

int carrier_of(const json& j) {
  int n = int_of(field(j, "n"), "n");
  check_carrier(n);
  return n;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(Subset a) { return points_of(a); }

Subset subset_from_json(const json& j, int n) { return subset_from_points(ints_of(j, "subset"), n); }

json to_json(const SetSystem& s) {
  json sets = json::array();
  for (Subset a : s) sets.push_back(to_json(a));
  return {{"n", s.n()}, {"sets", sets}};
}

SetSystem set_system_from_json(const json& j) {
  int n = carrier_of(j);
  const json& sets = field(j, "sets");
  if (!sets.is_array()) throw ParseError("\"sets\" must be an array");
  std::vector<Subset> v;
  for (const auto& s : sets) v.push_back(subset_from_json(s, n));
  return SetSystem(n, std::move(v));
}

json to_json(const Topology& t) { return to_json(t.opens()); }

Topology topology_from_json(const json& j) { return Topology(set_system_from_json(j)); }

json to_json(const PointSetRelation& r) {
  json pairs = json::array();
  for (const auto& [x, a] : r.pairs()) pairs.push_back(json::array({x, to_json(a)}));
  return {{"n", r.n()}, {"pairs", pairs}};
}

PointSetRelation relation_from_json(const json& j) {
  int n = carrier_of(j);
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw ParseError("\"pairs\" must be an array");
  std::vector<PointSetRelation::Pair> v;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw ParseError("relation pair must be [x, [...]]");
    v.emplace_back(int_of(p[0], "point"), subset_from_json(p[1], n));
  }
  return PointSetRelation(n, std::move(v));
}

json set_map_to_json(int n, const SetMap& m) {
  json table = json::array();
  for (Subset a = 0; a < m.size(); ++a) {
    json us = json::array();
    for (Subset u : m[a]) us.push_back(to_json(u));
    table.push_back(json::array({to_json(a), us}));
  }
  return {{"n", n}, {"table", table}};
}

SetMap set_map_from_json(const json& j, int& n) {
  n = carrier_of(j);
  const json& table = field(j, "table");
  if (!table.is_array()) throw ParseError("\"table\" must be an array");
  std::size_t size = std::size_t{full_set(n)} + 1;
  SetMap m(size, SetSystem(n));
  std::vector<char> seen(size, 0);
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != 2 || !row[1].is_array()) throw ParseError("set map row must be [A, [U,...]]");
    Subset a = subset_from_json(row[0], n);
    if (seen[a]) throw ParseError("set map lists " + format_subset(a) + " twice");
    seen[a] = 1;
    std::vector<Subset> us;
    for (const auto& u : row[1]) us.push_back(subset_from_json(u, n));
    m[a] = SetSystem(n, std::move(us));
  }
  for (std::size_t a = 0; a < size; ++a)
    if (!seen[a]) throw ParseError("set map misses " + format_subset(static_cast<Subset>(a)));
  return m;
}

json operator_to_json(int n, const SubsetOperator& f) {
  json table = json::array();
  for (Subset a = 0; a < f.size(); ++a) table.push_back(json::array({to_json(a), to_json(f[a])}));
  return {{"n", n}, {"table", table}};
}

SubsetOperator operator_from_json(const json& j, int& n) {
  n = carrier_of(j);
  const json& table = field(j, "table");
  if (!table.is_array()) throw ParseError("\"table\" must be an array");
  std::size_t size = std::size_t{full_set(n)} + 1;
  SubsetOperator f(size, 0);
  std::vector<char> seen(size, 0);
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != 2) throw ParseError("operator row must be [A, f(A)]");
    Subset a = subset_from_json(row[0], n);
    if (seen[a]) throw ParseError("operator lists " + format_subset(a) + " twice");
    seen[a] = 1;
    f[a] = subset_from_json(row[1], n);
  }
  for (std::size_t a = 0; a < size; ++a)
    if (!seen[a]) throw ParseError("operator table misses " + format_subset(static_cast<Subset>(a)));
  return f;
}

json to_json(const FiniteMap& f) { return {{"n", f.dst_n()}, {"f", f.values()}}; }

FiniteMap map_from_json(const json& j, int dst_n) {
  std::vector<int> v = ints_of(field(j, "f"), "map value");
  if (dst_n < 0) {
    if (j.contains("n")) {
      dst_n = carrier_of(j);
    } else {
      dst_n = 0;
      for (int x : v) dst_n = std::max(dst_n, x + 1);
    }
  }
  int src_n = static_cast<int>(v.size());
  check_carrier(src_n);
  check_carrier(dst_n);
  return FiniteMap(src_n, dst_n, std::move(v));
}

namespace {

std::vector<std::pair<int, int>> pairs_of(const json& j) {
  if (!j.is_array()) throw ParseError("\"pairs\" must be an array");
  std::vector<std::pair<int, int>> v;
  for (const auto& p : j) {
    auto xy = ints_of(p, "pair");
    if (xy.size() != 2) throw ParseError("pair must have two entries");
    v.emplace_back(xy[0], xy[1]);
  }
  return v;
}

}  // namespace

FiniteRelation finite_relation_from_json(const json& j) {
  int n = carrier_of(j);
  if (j.contains("classes")) {
    std::vector<Subset> classes;
    for (const auto& c : field(j, "classes")) classes.push_back(subset_from_json(c, n));
    return FiniteRelation::from_classes(n, classes);
  }
  return FiniteRelation(n, pairs_of(field(j, "pairs")));
}

json to_json(const Preorder& p) {
  json pairs = json::array();
  for (auto [x, y] : p.relation().pairs()) pairs.push_back(json::array({x, y}));
  return {{"n", p.n()}, {"pairs", pairs}, {"flavor", flavor_name(p.flavor())}};
}

Preorder preorder_from_json(const json& j) {
  int n = carrier_of(j);
  std::string fl = j.value("flavor", std::string("strict"));
  Flavor flavor;
  if (fl == "strict")
    flavor = Flavor::Strict;
  else if (fl == "reflexive")
    flavor = Flavor::Reflexive;
  else
    throw ParseError("flavor must be \"strict\" or \"reflexive\"");
  return Preorder(FiniteRelation(n, pairs_of(field(j, "pairs"))), flavor);
}

json to_json(const Net& net) {
  json leq = json::array();
  for (auto [i, k] : net.domain().relation().pairs()) leq.push_back(json::array({i, k}));
  return {{"domain", {{"n", net.domain().n()}, {"leq", leq}}}, {"values", net.values()}};
}

Net net_from_json(const json& j, int target_n) {
  const json& d = field(j, "domain");
  int n = carrier_of(d);
  DirectedSet dom(FiniteRelation(n, pairs_of(field(d, "leq"))));
  return Net(dom, target_n, ints_of(field(j, "values"), "net value"));
}

json to_json(const Sequence& s) { return {{"pre", s.pre}, {"cycle", s.cycle}}; }

Sequence sequence_from_json(const json& j) {
  Sequence s;
  if (j.contains("pre")) s.pre = ints_of(j.at("pre"), "sequence value");
  s.cycle = ints_of(field(j, "cycle"), "sequence value");
  return s;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

json to_json(const PseudoMetric& m) {
  json d = json::array();
  for (const auto& row : m.matrix()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    d.push_back(r);
  }
  return {{"n", m.n()}, {"d", d}};
}

Matrix matrix_from_json(const json& j) {
  int n = carrier_of(j);
  const json& d = field(j, "d");
  if (!d.is_array() || static_cast<int>(d.size()) != n) throw ParseError("\"d\" must have n rows");
  Matrix m;
  for (const auto& row : d) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("every row of \"d\" needs n entries");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

json to_json(const Dyadic& d) { return to_fraction_string(d); }

Dyadic dyadic_from_json(const json& j) {
  if (j.is_number_integer()) return Dyadic(j.get<long long>());
  if (j.is_string()) return parse_dyadic(j.get<std::string>());
  throw ParseError("dyadic must be an integer or a string");
}

std::vector<Dyadic> dyadic_vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of dyadics");
  std::vector<Dyadic> v;
  for (const auto& e : j) v.push_back(dyadic_from_json(e));
  return v;
}

json to_json(const GeneratingFamily& fam) {
  json pairs = json::array();
  for (const auto& [f, t] : fam.pairs) pairs.push_back({{"map", f.values()}, {"space", to_json(t)}});
  return {{"direction", fam.direction == Direction::Inverse ? "inverse" : "direct"}, {"n", fam.n}, {"pairs", pairs}};
}

GeneratingFamily family_from_json(const json& j) {
  GeneratingFamily fam;
  std::string dir = field(j, "direction").is_string() ? j.at("direction").get<std::string>() : "";
  if (dir == "inverse")
    fam.direction = Direction::Inverse;
  else if (dir == "direct")
    fam.direction = Direction::Direct;
  else
    throw ParseError("direction must be \"inverse\" or \"direct\"");
  fam.n = carrier_of(j);
  for (const auto& p : field(j, "pairs")) {
    Topology t = topology_from_json(field(p, "space"));
    std::vector<int> v = ints_of(field(p, "map"), "map value");
    int src = fam.direction == Direction::Inverse ? fam.n : t.n();
    int dst = fam.direction == Direction::Inverse ? t.n() : fam.n;
    fam.pairs.emplace_back(FiniteMap(src, dst, std::move(v)), std::move(t));
  }
  return fam;
}

json to_json(const Limits& l) { return {{"lim", to_json(l.lim)}, {"adh", to_json(l.adh)}}; }

json to_json(const SubsetAnalysis& a) {
  return {{"interior", to_json(a.interior)},
          {"closure", to_json(a.closure)},
          {"derived", to_json(a.derived)},
          {"boundary", to_json(a.boundary)}};
}

json to_json(const Violation& v) {
  json j = {{"axiom", v.axiom}, {"detail", v.detail}, {"a", to_json(v.a)}, {"b", to_json(v.b)}};
  if (v.point >= 0) j["point"] = v.point;
  return j;
}

}  // namespace topo
