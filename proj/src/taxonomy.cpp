#include "mapref/taxonomy.hpp"

#include <algorithm>
#include <sstream>

namespace mapref {

namespace {

constexpr Range kZero{0, 0};
constexpr Range kOne{1, 1};

std::vector<GWType> build_table() {
  // label, symbols, quotient flags, cr, (cr_0, cr_1, cr_2)
  return {
      {"1", "VFP", 1, {1, 3}, {kOne, kOne, kOne}},          // N = Gamma, regular
      {"2Pex", "VFP", 2, {0, 0}, {kZero, kZero, kZero}},    // N = Gamma+, chiral
      {"2*ex", "VFP", 2, {1, 1}, {kOne, kZero, kZero}},     // only R0 in N
      {"2P", "VF", 2, {1, 2}, {kZero, Range{1, 2}, kZero}},  // only R1 in N
      {"2ex", "VFP", 2, {1, 1}, {kZero, kZero, kOne}},      // only R2 in N
      {"2*", "VP", 2, {1, 3}, {kOne, Range{1, 2}, kZero}},   // R0, R1 in N
      {"2", "FP", 2, {1, 3}, {kZero, Range{1, 2}, kOne}},    // R1, R2 in N
      {"3", "", 4, {1, 4}, {kZero, Range{1, 4}, kZero}},     // R1 acts trivially, V4 on cosets
      {"4", "FP", 4, {1, 2}, {kZero, Range{1, 2}, kZero}},   // D4 on cosets
      {"4P", "VF", 4, {1, 2}, {kZero, Range{1, 2}, kZero}},
      {"4*", "VP", 4, {1, 2}, {kZero, Range{1, 2}, kZero}},
      {"5*", "VP", 4, {0, 0}, {kZero, kZero, kZero}},  // R1 a double transposition
      {"5P", "VF", 4, {0, 0}, {kZero, kZero, kZero}},
      {"5", "FP", 4, {0, 0}, {kZero, kZero, kZero}},
  };
}

bool within(int v, Range r) { return r.first <= v && v <= r.second; }

// 0-based canonical quotient generators on four flags.
const Perm& canonical_r0() {
  static const Perm p = Perm::parse_cycles(4, "(0 1)(2 3)");
  return p;
}
const Perm& canonical_r2() {
  static const Perm p = Perm::parse_cycles(4, "(0 3)(1 2)");
  return p;
}

const GWType& classify_four(const FlagMap& q) {
  for (int i : {0, 2}) {
    for (Point x = 0; x < 4; ++x) {
      if (q.apply(x, i) == x) throw UnclassifiableQuotient("E does not act regularly on the quotient");
    }
  }
  std::vector<Point> sigma{0, 1, 2, 3};
  do {
    const Perm s(sigma);
    if (conjugate(q.r(0), s) != canonical_r0() || conjugate(q.r(2), s) != canonical_r2()) continue;
    const std::string r1 = conjugate(q.r(1), s).to_cycle_string();
    // E-conjugate patterns are merged pairwise.
    if (r1 == "()") return gw_type_info("3");
    if (r1 == "(1 2)" || r1 == "(0 3)") return gw_type_info("4");
    if (r1 == "(1 3)" || r1 == "(0 2)") return gw_type_info("4P");
    if (r1 == "(2 3)" || r1 == "(0 1)") return gw_type_info("4*");
    if (r1 == "(0 1)(2 3)") return gw_type_info("5*");
    if (r1 == "(0 2)(1 3)") return gw_type_info("5P");
    if (r1 == "(0 3)(1 2)") return gw_type_info("5");
    throw UnclassifiableQuotient("unexpected r1 on quotient: " + r1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  throw UnclassifiableQuotient("quotient cannot be put in canonical form");
}

}  // namespace

bool GWType::admits(int cr_value, const std::array<int, 3>& cr_by_type) const {
  if (!within(cr_value, cr)) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!within(cr_by_type[i], cr_i[i])) return false;
  }
  return true;
}

const std::vector<GWType>& gw_table() {
  static const std::vector<GWType> table = build_table();
  return table;
}

const GWType& gw_type_info(std::string_view label) {
  for (const auto& t : gw_table()) {
    if (t.label == label) return t;
  }
  throw std::invalid_argument("unknown edge-transitive type: " + std::string(label));
}

std::string_view dual_label(std::string_view label) {
  static const std::array<std::pair<std::string_view, std::string_view>, 4> pairs{{
      {"2", "2*"}, {"4", "4*"}, {"5", "5*"}, {"2ex", "2*ex"}}};
  for (const auto& [a, b] : pairs) {
    if (label == a) return b;
    if (label == b) return a;
  }
  return gw_type_info(label).label;
}

bool is_edge_transitive(const FlagMap& m, const PermGroup& aut) { return transitivity(m, aut).edge; }

bool is_edge_transitive(const FlagMap& m) { return is_edge_transitive(m, automorphism_group(m)); }

const GWType& classify_quotient(const FlagMap& q) {
  switch (q.n_flags()) {
    case 1:
      return gw_type_info("1");
    case 2: {
      std::string trivial;
      for (int i = 0; i < 3; ++i) {
        if (q.r(i).is_identity()) trivial += static_cast<char>('0' + i);
      }
      if (trivial.empty()) return gw_type_info("2Pex");
      if (trivial == "0") return gw_type_info("2*ex");
      if (trivial == "1") return gw_type_info("2P");
      if (trivial == "2") return gw_type_info("2ex");
      if (trivial == "01") return gw_type_info("2*");
      if (trivial == "12") return gw_type_info("2");
      throw UnclassifiableQuotient("2-flag quotient with trivial set {" + trivial + "}");
    }
    case 4:
      return classify_four(q);
    default:
      throw UnclassifiableQuotient("edge-transitive quotient has " + std::to_string(q.n_flags()) +
                                   " flags");
  }
}

const GWType& gw_type(const FlagMap& m, const PermGroup& aut) {
  if (!is_edge_transitive(m, aut)) throw NotEdgeTransitive();
  return classify_quotient(quotient_map(m, aut));
}

const GWType& gw_type(const FlagMap& m) { return gw_type(m, automorphism_group(m)); }

std::string observed_symbols(const TransitivityProfile& t) {
  std::string s;
  if (t.vertex) s += 'V';
  if (t.face) s += 'F';
  if (t.petrie) s += 'P';
  return s;
}

std::string Classification::line() const {
  std::ostringstream out;
  out << "type=" << (type ? type->label : std::string("none")) << " symbols=" << observed_symbols
      << " cr=" << reflections.cr << " cr_i=" << reflections.cr_by_type[0] << ','
      << reflections.cr_by_type[1] << ',' << reflections.cr_by_type[2]
      << " bounds_ok=" << (bounds_ok ? "true" : "false");
  return out.str();
}

Classification classify(const FlagMap& m) {
  const auto aut = automorphism_group(m);
  const auto t = transitivity(m, aut);
  if (!t.edge) throw NotEdgeTransitive();
  Classification c;
  c.type = &classify_quotient(quotient_map(m, aut));
  c.observed_symbols = observed_symbols(t);
  c.reflections = reflections(m, aut);
  c.bounds_ok = c.type->admits(c.reflections.cr, c.reflections.cr_by_type);
  c.symbols_ok = c.observed_symbols == c.type->symbols;
  return c;
}

bool Thm13Report::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
}

Thm13Report check_thm13(const std::vector<FlagMap>& corpus) {
  Thm13Report report;
  for (const auto& m : corpus) {
    ++report.maps_seen;
    // the bound is stated for closed maps
    if (!is_closed(m)) {
      ++report.bordered_skipped;
      continue;
    }
    const auto aut = automorphism_group(m);
    if (!is_edge_transitive(m, aut)) continue;
    Thm13Entry e;
    e.name = m.meta().value("name", std::string("map"));
    const auto& type = classify_quotient(quotient_map(m, aut));
    const auto refl = reflections(m, aut);
    e.label = type.label;
    e.cr = refl.cr;
    e.cr_by_type = refl.cr_by_type;
    const bool bound = refl.cr <= 4;
    const bool four_is_type3 = refl.cr != 4 || type.label == "3";
    const bool in_type = type.admits(refl.cr, refl.cr_by_type);
    e.passed = bound && four_is_type3 && in_type;
    if (!bound) e.detail = "cr exceeds 4";
    else if (!four_is_type3) e.detail = "cr = 4 outside type 3";
    else if (!in_type) e.detail = "cr outside the bounds of type " + type.label;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace mapref
