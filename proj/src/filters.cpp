#include "topo/filters.hpp"

namespace topo {

std::optional<Violation> filter_violation(const SetSystem& sys) {
  if (sys.has(0)) return Violation{1, 0, 0, "empty set is a member"};
  if (!sys.has(sys.full())) return Violation{2, sys.full(), 0, "X missing"};
  const auto& v = sys.sets();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!sys.has(v[i] & v[j]))
        return Violation{3, v[i], v[j], "intersection of " + format_subset(v[i]) + " and " + format_subset(v[j]) + " missing"};
  for (Subset a : v)
    for (int x = 0; x < sys.n(); ++x)
      if (!sys.has(a | singleton(x)))
        return Violation{4, a, a | singleton(x), "superset " + format_subset(a | singleton(x)) + " missing"};
  return std::nullopt;
}

Filter::Filter(SetSystem members) : members_(std::move(members)) {
  if (auto v = filter_violation(members_))
    throw NotAFilter("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
}

std::optional<Violation> filter_base_violation(const SetSystem& sys) {
  if (sys.empty()) return Violation{1, 0, 0, "base is empty"};
  if (sys.has(0)) return Violation{2, 0, 0, "empty set is a member"};
  const auto& v = sys.sets();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Subset m = v[i] & v[j];
      bool found = false;
      for (Subset c : v)
        if (is_subset(c, m)) {
          found = true;
          break;
        }
      if (!found)
        return Violation{3, v[i], v[j],
                         "no member inside the intersection of " + format_subset(v[i]) + " and " + format_subset(v[j])};
    }
  return std::nullopt;
}

FilterBase::FilterBase(SetSystem members) : members_(std::move(members)) {
  if (auto v = filter_base_violation(members_))
    throw FilterBaseViolation("axiom (" + std::to_string(v->axiom) + "): " + v->detail);
}

bool has_finite_intersection_property(const SetSystem& sys) { return !psi(sys).has(0); }

bool phi_finer(const SetSystem& a, const SetSystem& b) {
  for (Subset sb : b) {
    bool found = false;
    for (Subset sa : a)
      if (is_subset(sa, sb)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

Filter generate_filter(const FilterBase& base) { return Filter(phi(base.members())); }

Filter principal_filter(int n, Subset core) { return Filter(phi(SetSystem(n, {core}))); }

Filter point_filter(int n, int x) { return principal_filter(n, singleton(x)); }

Subset cluster_points(const Filter& f) { return f.core(); }

bool is_ultrafilter(const Filter& f) {
  const int n = f.n();
  for (Subset a = 0; a <= full_set(n); ++a)
    if (!f.has(a) && !f.has(complement(a, n))) return false;
  return true;
}

Filter extend_to_ultrafilter(const FilterBase& base) {
  Subset core = base.members().big_intersection();
  return point_filter(base.n(), lowest_point(core));
}

std::vector<Filter> all_filters_bruteforce(int n) {
  if (n < 0 || n > 4) throw CapExceeded("filter scan supports n <= 4");
  const std::uint64_t count = std::uint64_t{1} << (1u << n);
  std::vector<Filter> out;
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<Subset> v;
    for (std::uint64_t r = m; r; r &= r - 1) v.push_back(static_cast<Subset>(std::countr_zero(r)));
    SetSystem sys(n, std::move(v));
    if (is_filter(sys)) out.emplace_back(std::move(sys));
  }
  return out;
}

FilterBase supremum_of_filterbases(const std::vector<FilterBase>& bases) {
  if (bases.empty()) throw EmptyArgument("supremum of an empty family of filter bases");
  const int n = bases.front().n();
  // Each entry records a meet and the members chosen to form it.
  std::vector<std::pair<Subset, std::vector<Subset>>> meets;
  std::vector<char> seen(std::size_t{1} << n, 0);
  for (const FilterBase& b : bases) {
    if (b.n() != n) throw UniverseMismatch("filter bases on different carriers");
    std::vector<std::pair<Subset, std::vector<Subset>>> next = meets;
    for (Subset m : b.members()) next.push_back({m, {m}});
    for (const auto& [s, chosen] : meets)
      for (Subset m : b.members()) {
        auto c = chosen;
        c.push_back(m);
        next.push_back({s & m, std::move(c)});
      }
    for (const auto& [s, chosen] : next)
      if (s == 0) {
        std::string w;
        for (Subset c : chosen) w += format_subset(c);
        throw EmptyMeet("meet of " + w + " is empty");
      }
    // keep one witness per distinct meet
    meets.clear();
    std::fill(seen.begin(), seen.end(), 0);
    for (auto& e : next)
      if (!seen[e.first]) {
        seen[e.first] = 1;
        meets.push_back(std::move(e));
      }
  }
  std::vector<Subset> v;
  for (const auto& e : meets) v.push_back(e.first);
  return FilterBase(SetSystem(n, std::move(v)));
}

Filter image_filter(const FilterBase& base, const FiniteMap& f) {
  if (base.n() != f.src_n()) throw UniverseMismatch("filter base carrier differs from map source");
  return Filter(phi(f.image(base.members())));
}

Filter inverse_image_filter(const FilterBase& base, const FiniteMap& f) {
  if (base.n() != f.dst_n()) throw UniverseMismatch("filter base carrier differs from map target");
  if (!f.is_surjective()) throw NotSurjective("inverse image filter needs a surjective map");
  return Filter(phi(f.preimage(base.members())));
}

}  // namespace topo
