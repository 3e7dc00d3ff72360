#include "setkit/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setkit/ad_families.hpp"
#include "setkit/binary_conditions.hpp"
#include "setkit/boolean_completion.hpp"
#include "setkit/errors.hpp"
#include "setkit/finite_poset.hpp"
#include "setkit/generic_filter.hpp"
#include "setkit/ordinal.hpp"
#include "setkit/relation_file.hpp"
#include "setkit/well_orders.hpp"

namespace setkit {

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& t : out)
    if (t.empty()) throw parse_error("empty entry in list '" + s + "'");
  return out;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

bool parse_uint(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---- ord ----------------------------------------------------------------

int cmd_ord_eval(const std::string& expr, bool jmode, std::ostream& out) {
  Ordinal v = parse_ordinal(expr);
  std::string s = to_string(v);
  const char* kind = "zero";
  switch (classify(v)) {
    case OrdinalKind::Zero: kind = "zero"; break;
    case OrdinalKind::Successor: kind = "successor"; break;
    case OrdinalKind::Limit: kind = "limit"; break;
  }
  if (jmode) {
    out << json{{"value", s}, {"kind", kind}}.dump(2) << "\n";
  } else {
    out << "value: " << s << "\n";
    out << "kind: " << kind << "\n";
  }
  return 0;
}

// ---- wo -----------------------------------------------------------------

int cmd_wo_trichotomy(const std::string& path_a, const std::string& path_b,
                      bool jmode, std::ostream& out) {
  FiniteRelation a = as_relation(load_relation_file(path_a));
  FiniteRelation b = as_relation(load_relation_file(path_b));
  TrichotomyResult r = trichotomy(a, b);
  const char* which = "iso";
  switch (r.which) {
    case TrichotomyCase::Iso: which = "iso"; break;
    case TrichotomyCase::PredOfFirst: which = "pred-of-first"; break;
    case TrichotomyCase::PredOfSecond: which = "pred-of-second"; break;
  }
  if (jmode) {
    json j{{"case", which}};
    if (r.cut_point) j["cut"] = *r.cut_point;
    json m = json::array();
    for (const auto& [x, y] : r.iso) m.push_back({x, y});
    j["map"] = m;
    out << j.dump(2) << "\n";
  } else {
    out << "case: " << which << "\n";
    if (r.cut_point) out << "cut: " << *r.cut_point << "\n";
    for (const auto& [x, y] : r.iso) out << "map: " << x << " -> " << y << "\n";
  }
  return 0;
}

// ---- poset --------------------------------------------------------------

FiniteRelation closed_relation(const FinitePoset& P) {
  std::vector<std::pair<std::string, std::string>> prs;
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t q = 0; q < P.size(); ++q)
      if (P.leq(p, q)) prs.emplace_back(P.label(p), P.label(q));
  return FiniteRelation(P.elements(), prs);
}

int cmd_poset_check(const std::string& path, bool jmode, std::ostream& out) {
  RelationFile f = load_relation_file(path);
  FiniteRelation r = f.close ? closed_relation(as_poset(f)) : as_relation(f);
  OrderReport rep = check_order_properties(r);
  if (jmode) {
    json j{{"elements", r.size()},
           {"partial", rep.is_partial},
           {"total", rep.is_total},
           {"well", rep.is_well}};
    if (!rep.partial_witness.empty()) j["partial_witness"] = rep.partial_witness;
    if (!rep.total_witness.empty()) j["total_witness"] = rep.total_witness;
    if (!rep.well_witness.empty()) j["well_witness"] = rep.well_witness;
    out << j.dump(2) << "\n";
  } else {
    out << "elements: " << r.size() << "\n";
    out << "partial: " << bool_str(rep.is_partial) << "\n";
    if (!rep.partial_witness.empty()) out << "partial_witness: " << rep.partial_witness << "\n";
    out << "total: " << bool_str(rep.is_total) << "\n";
    if (!rep.total_witness.empty()) out << "total_witness: " << rep.total_witness << "\n";
    out << "well: " << bool_str(rep.is_well) << "\n";
    if (!rep.well_witness.empty()) out << "well_witness: " << rep.well_witness << "\n";
  }
  return rep.is_partial ? 0 : 1;
}

int cmd_poset_dense(const std::string& path, const std::string& set_name,
                    bool jmode, std::ostream& out) {
  RelationFile f = load_relation_file(path);
  FinitePoset P = as_poset(f);
  ElementSet D = named_set(f, P, set_name);
  bool dense = is_dense(P, D);
  std::string witness;
  if (!dense) {
    for (std::size_t p = 0; p < P.size() && witness.empty(); ++p) {
      bool hit = false;
      for (std::size_t q = 0; q < P.size() && !hit; ++q)
        if (D.test(q) && P.leq(q, p)) hit = true;
      if (!hit) witness = P.label(p);
    }
  }
  if (jmode) {
    json j{{"set", set_name}, {"dense", dense}};
    if (!witness.empty()) j["witness"] = witness;
    out << j.dump(2) << "\n";
  } else {
    out << "set: " << set_name << "\n";
    out << "dense: " << bool_str(dense) << "\n";
    if (!witness.empty()) out << "witness: " << witness << "\n";
  }
  return dense ? 0 : 1;
}

int cmd_poset_generic_k(const std::vector<std::string>& tokens, std::size_t fuel,
                        bool jmode, std::ostream& out) {
  std::vector<std::function<bool(const BinaryCondition&)>> dense;
  for (const auto& tok : tokens) {
    if (tok.size() >= 2 && tok[0] == 'd') {
      std::uint64_t n = 0;
      if (!parse_uint(tok.substr(1), n))
        throw parse_error("bad dense token '" + tok + "' (want dN or e:bits)");
      dense.push_back(k_defined_at(static_cast<std::uint32_t>(n)));
    } else if (tok.size() > 2 && tok.rfind("e:", 0) == 0) {
      std::string bits = tok.substr(2);
      for (char c : bits)
        if (c != '0' && c != '1')
          throw parse_error("bad dense token '" + tok + "' (bits must be 0/1)");
      // h is the periodic extension of the given bit pattern.
      auto h = [bits](std::uint32_t x) -> int { return bits[x % bits.size()] - '0'; };
      dense.push_back(k_disagrees_with(h));
    } else {
      throw parse_error("bad dense token '" + tok + "' (want dN or e:bits)");
    }
  }
  LazyPoset<BinaryCondition> L = k_poset();
  FilterResult<BinaryCondition> res = generic_filter(L, dense, BinaryCondition{}, fuel);
  BinaryCondition f = union_of_filter(res.chain);
  if (jmode) {
    json j{{"poset", "k"}, {"dense", tokens}, {"fuel", fuel}};
    json chain = json::array();
    for (const auto& c : res.chain) chain.push_back(to_string(c));
    j["chain"] = chain;
    json met = json::array();
    for (const auto& [idx, c] : res.met)
      met.push_back({{"dense", tokens[idx]}, {"witness", to_string(c)}});
    j["met"] = met;
    j["filter_size"] = res.filter.size();
    j["f"] = to_string(f);
    out << j.dump(2) << "\n";
  } else {
    out << "poset: k\n";
    for (const auto& c : res.chain) out << "chain: " << to_string(c) << "\n";
    for (const auto& [idx, c] : res.met)
      out << "met: " << tokens[idx] << " => " << to_string(c) << "\n";
    out << "filter_size: " << res.filter.size() << "\n";
    out << "f: " << to_string(f) << "\n";
  }
  return 0;
}

int cmd_poset_generic_file(const std::string& path,
                           const std::vector<std::string>& tokens, std::size_t fuel,
                           bool jmode, std::ostream& out) {
  RelationFile file = load_relation_file(path);
  FinitePoset P = as_poset(file);
  std::vector<ElementSet> sets;
  for (const auto& name : tokens) {
    ElementSet D = named_set(file, P, name);
    if (!is_dense(P, D)) {
      if (jmode)
        out << json{{"poset", path}, {"violation", "set " + name + " is not dense"}}.dump(2)
            << "\n";
      else
        out << "violation: set " << name << " is not dense\n";
      return 1;
    }
    sets.push_back(D);
  }
  std::vector<std::function<bool(const std::size_t&)>> dense;
  for (const auto& D : sets)
    dense.push_back([D](const std::size_t& q) { return D.test(q); });
  LazyPoset<std::size_t> L = as_lazy(P);
  FilterResult<std::size_t> res = generic_filter(L, dense, std::size_t{0}, fuel);
  if (jmode) {
    json j{{"poset", path}, {"dense", tokens}, {"fuel", fuel}};
    json chain = json::array();
    for (auto p : res.chain) chain.push_back(P.label(p));
    j["chain"] = chain;
    json met = json::array();
    for (const auto& [idx, p] : res.met)
      met.push_back({{"dense", tokens[idx]}, {"witness", P.label(p)}});
    j["met"] = met;
    json filt = json::array();
    for (auto p : res.filter) filt.push_back(P.label(p));
    j["filter"] = filt;
    out << j.dump(2) << "\n";
  } else {
    out << "poset: " << path << "\n";
    for (auto p : res.chain) out << "chain: " << P.label(p) << "\n";
    for (const auto& [idx, p] : res.met)
      out << "met: " << tokens[idx] << " => " << P.label(p) << "\n";
    for (auto p : res.filter) out << "filter: " << P.label(p) << "\n";
  }
  return 0;
}

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

void emit_algebra_dot(const RegularOpenAlgebra& A, std::ostream& out) {
  const int k = static_cast<int>(A.size());
  if (k > 256) throw limit_error("--dot: carrier too large to draw");
  out << "digraph ro {\n  rankdir=BT;\n";
  for (int i = 0; i < k; ++i)
    out << "  n" << i << " [label=\"" << dot_escape(A.describe(i)) << "\"];\n";
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !A.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < k && cover; ++c)
        if (c != a && c != b && A.leq(a, c) && A.leq(c, b)) cover = false;
      if (cover) out << "  n" << a << " -> n" << b << ";\n";
    }
  out << "}\n";
}

int cmd_poset_ro(const std::string& path, bool dot, bool jmode, std::ostream& out) {
  FinitePoset P = as_poset(load_relation_file(path));
  RegularOpenAlgebra A = ro_algebra(P);
  if (dot) {
    emit_algebra_dot(A, out);
    return 0;
  }
  EmbeddingReport emb = verify_embedding(A);
  BaLawsReport laws = ba_laws_check(A);
  std::vector<int> atoms = A.atoms();
  if (jmode) {
    json j{{"elements", P.size()},
           {"carrier", A.size()},
           {"zero", A.describe(A.zero())},
           {"one", A.describe(A.one())}};
    json at = json::array();
    for (int a : atoms) at.push_back(A.describe(a));
    j["atoms"] = at;
    json em = json::array();
    for (std::size_t p = 0; p < P.size(); ++p)
      em.push_back({{"p", P.label(p)}, {"image", A.describe(A.embed(p))}});
    j["embedding"] = em;
    j["dense_range"] = emb.dense_range;
    j["monotone"] = emb.monotone;
    j["incompat_iff_disjoint"] = emb.incompat_iff_disjoint;
    j["third_clause_vacuous"] = emb.third_clause_vacuous;
    if (!emb.witness.empty()) j["embedding_witness"] = emb.witness;
    j["laws"] = laws.laws;
    j["complete"] = laws.complete;
    j["complete_exhaustive"] = laws.complete_exhaustive;
    if (!laws.witness.empty()) j["laws_witness"] = laws.witness;
    out << j.dump(2) << "\n";
  } else {
    out << "elements: " << P.size() << "\n";
    out << "carrier: " << A.size() << "\n";
    out << "zero: " << A.describe(A.zero()) << "\n";
    out << "one: " << A.describe(A.one()) << "\n";
    out << "atoms: " << atoms.size() << "\n";
    for (int a : atoms) out << "atom: " << A.describe(a) << "\n";
    for (std::size_t p = 0; p < P.size(); ++p)
      out << "embed: " << P.label(p) << " -> " << A.describe(A.embed(p)) << "\n";
    out << "dense_range: " << bool_str(emb.dense_range) << "\n";
    out << "monotone: " << bool_str(emb.monotone) << "\n";
    out << "incompat_iff_disjoint: " << bool_str(emb.incompat_iff_disjoint) << "\n";
    out << "third_clause_vacuous: " << bool_str(emb.third_clause_vacuous) << "\n";
    if (!emb.witness.empty()) out << "embedding_witness: " << emb.witness << "\n";
    out << "laws: " << bool_str(laws.laws) << "\n";
    out << "complete: " << bool_str(laws.complete) << "\n";
    out << "complete_exhaustive: " << bool_str(laws.complete_exhaustive) << "\n";
    if (!laws.witness.empty()) out << "laws_witness: " << laws.witness << "\n";
  }
  return (emb.ok() && laws.ok()) ? 0 : 1;
}

std::string points_str(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) {
      if (!first) s += ", ";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

int cmd_poset_stone(const std::string& path, bool dot, bool jmode, std::ostream& out) {
  FinitePoset P = as_poset(load_relation_file(path));
  RegularOpenAlgebra A = ro_algebra(P);
  if (dot) {
    emit_algebra_dot(A, out);
    return 0;
  }
  StoneSpace S = stone_space(A);
  StoneReport rep = stone_ccc_check(A, S);
  if (jmode) {
    json j{{"carrier", A.size()}, {"points", S.points.size()}};
    json pts = json::array();
    for (std::size_t i = 0; i < S.points.size(); ++i)
      pts.push_back({{"min", A.describe(S.point_min[i])}, {"members", S.points[i].size()}});
    j["point"] = pts;
    json nb = json::array();
    for (std::size_t b = 0; b < A.size(); ++b)
      nb.push_back({{"b", A.describe(static_cast<int>(b))},
                    {"points", points_str(S.basic_open[b])}});
    j["N"] = nb;
    j["disjointness"] = rep.disjointness;
    j["meets_map"] = rep.meets_map;
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    out << j.dump(2) << "\n";
  } else {
    out << "carrier: " << A.size() << "\n";
    out << "points: " << S.points.size() << "\n";
    for (std::size_t i = 0; i < S.points.size(); ++i)
      out << "point: " << A.describe(S.point_min[i]) << " (" << S.points[i].size()
          << " members)\n";
    for (std::size_t b = 0; b < A.size(); ++b)
      out << "N: " << A.describe(static_cast<int>(b)) << " -> "
          << points_str(S.basic_open[b]) << "\n";
    out << "disjointness: " << bool_str(rep.disjointness) << "\n";
    out << "meets_map: " << bool_str(rep.meets_map) << "\n";
    if (!rep.witness.empty()) out << "witness: " << rep.witness << "\n";
  }
  return rep.ok() ? 0 : 1;
}

// ---- ad -----------------------------------------------------------------

ad::SetGen named_setgen(const std::string& name) {
  if (name == "evens") return ad::evens();
  if (name == "odds") return ad::odds();
  if (name == "omega") return ad::whole_omega();
  if (name.size() >= 2 && name[0] == 'N') {
    std::uint64_t k = 0;
    if (parse_uint(name.substr(1), k) && k <= 1000)
      return ad::triangular_family(static_cast<std::uint32_t>(k));
  }
  throw parse_error("unknown set name '" + name + "' (want Nk, evens, odds or omega)");
}

int cmd_ad_family(const std::string& name, std::uint32_t i, std::uint64_t below,
                  bool jmode, std::ostream& out) {
  ad::SetGen g;
  if (name == "triangular") {
    g = ad::triangular_family(i);
  } else if (name == "evens" || name == "odds" || name == "omega") {
    g = named_setgen(name);
  } else {
    throw parse_error("unknown family '" + name + "' (want triangular, evens, odds or omega)");
  }
  std::vector<std::uint64_t> members = g.enumerate_below(below);
  if (jmode) {
    out << json{{"set", g.id()}, {"below", below}, {"members", members},
                {"count", members.size()}}
               .dump(2)
        << "\n";
  } else {
    out << "set: " << g.id() << "\n";
    out << "below: " << below << "\n";
    out << "members: " << join_u64(members) << "\n";
    out << "count: " << members.size() << "\n";
  }
  return 0;
}

int cmd_ad_check(const std::string& x, const std::string& y, std::uint64_t below,
                 bool jmode, std::ostream& out) {
  ad::SetGen gx = named_setgen(x);
  ad::SetGen gy = named_setgen(y);
  ad::AdReport rep = ad::ad_check(gx, gy, below);
  if (jmode) {
    out << json{{"x", gx.id()},
                {"y", gy.id()},
                {"below", below},
                {"intersection", rep.intersection_size},
                {"ad_at_bound", rep.ad_at_bound}}
               .dump(2)
        << "\n";
  } else {
    out << "x: " << gx.id() << "\n";
    out << "y: " << gy.id() << "\n";
    out << "below: " << below << "\n";
    out << "intersection: " << rep.intersection_size << "\n";
    out << "ad_at_bound: " << bool_str(rep.ad_at_bound) << "\n";
  }
  return rep.ad_at_bound ? 0 : 1;
}

int cmd_ad_diagonalize(const std::string& family, std::uint32_t count,
                       std::uint64_t below, bool jmode, std::ostream& out) {
  if (family != "triangular")
    throw parse_error("unknown family '" + family + "' (only triangular is built in)");
  std::vector<ad::SetGen> fam;
  for (std::uint32_t k = 0; k < count; ++k) fam.push_back(ad::triangular_family(k));
  std::vector<std::uint64_t> pts = ad::diagonalize(fam, count, below);
  if (jmode) {
    out << json{{"family", family}, {"count", count}, {"below", below}, {"points", pts}}
               .dump(2)
        << "\n";
  } else {
    out << "family: " << family << "\n";
    out << "count: " << count << "\n";
    out << "below: " << below << "\n";
    out << "points: " << join_u64(pts) << "\n";
  }
  return 0;
}

int cmd_ad_generic(const std::string& dense_list, std::size_t fuel,
                   std::uint32_t universe, std::uint32_t count, bool jmode,
                   std::ostream& out) {
  std::vector<std::string> tokens = split_commas(dense_list);
  std::vector<ad::DenseSpec> specs;
  std::vector<std::string> gen_ids;
  std::uint32_t need = count;
  for (const auto& tok : tokens) {
    ad::DenseSpec spec;
    if (tok.rfind("dx:", 0) == 0) {
      spec.kind = ad::DenseSpec::AddGen;
      spec.set_id = tok.substr(3);
      if (spec.set_id.empty()) throw parse_error("bad dense token '" + tok + "'");
      if (std::find(gen_ids.begin(), gen_ids.end(), spec.set_id) == gen_ids.end())
        gen_ids.push_back(spec.set_id);
    } else if (tok.rfind("eyn:", 0) == 0) {
      std::string rest = tok.substr(4);
      auto colon = rest.find(':');
      std::uint64_t n = 0;
      if (colon == std::string::npos || !parse_uint(rest.substr(colon + 1), n))
        throw parse_error("bad dense token '" + tok + "' (want eyn:NAME:N)");
      spec.kind = ad::DenseSpec::HitAbove;
      spec.set_id = rest.substr(0, colon);
      spec.above = n;
      if (spec.set_id.empty()) throw parse_error("bad dense token '" + tok + "'");
    } else {
      throw parse_error("bad dense token '" + tok + "' (want dx:NAME or eyn:NAME:N)");
    }
    // Triangular ids push the registry size up as needed.
    if (spec.set_id.size() >= 2 && spec.set_id[0] == 'N') {
      std::uint64_t k = 0;
      if (parse_uint(spec.set_id.substr(1), k) && k + 1 > need)
        need = static_cast<std::uint32_t>(k + 1);
    }
    specs.push_back(spec);
  }
  std::sort(gen_ids.begin(), gen_ids.end());
  ad::Registry reg = ad::standard_registry(need);
  for (const auto& s : specs) reg.resolve(s.set_id);

  LazyPoset<ad::Condition> L = ad::pa_lazy_poset(reg, gen_ids, universe);
  std::vector<std::function<bool(const ad::Condition&)>> dense;
  for (const auto& s : specs)
    dense.push_back([&reg, s](const ad::Condition& c) { return ad::in_dense_set(reg, s, c); });
  FilterResult<ad::Condition> res = generic_filter(L, dense, ad::Condition{}, fuel);
  std::vector<std::uint64_t> d = ad::extract_d(reg, res.chain);
  if (jmode) {
    json j{{"universe", universe}, {"dense", tokens}, {"fuel", fuel}};
    json chain = json::array();
    for (const auto& c : res.chain) chain.push_back(ad::to_string(c));
    j["chain"] = chain;
    json met = json::array();
    for (const auto& [idx, c] : res.met)
      met.push_back({{"dense", tokens[idx]}, {"witness", ad::to_string(c)}});
    j["met"] = met;
    j["d"] = d;
    out << j.dump(2) << "\n";
  } else {
    out << "universe: " << universe << "\n";
    for (const auto& c : res.chain) out << "chain: " << ad::to_string(c) << "\n";
    for (const auto& [idx, c] : res.met)
      out << "met: " << tokens[idx] << " => " << ad::to_string(c) << "\n";
    out << "d: " << join_u64(d) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite combinatorics of orders, forcing posets and Boolean completions"};
  app.name("setkit");
  bool jmode = false;
  app.add_flag("--json", jmode, "emit one JSON object instead of key: value lines");
  app.require_subcommand(1);

  int rc = 0;

  // ord
  auto* ord = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
  ord->require_subcommand(1);
  auto* ord_eval = ord->add_subcommand("eval", "evaluate an ordinal expression");
  std::string expr;
  ord_eval->add_option("expr", expr, "expression over w, decimals, +, *, ^")->required();
  ord_eval->callback([&] { rc = cmd_ord_eval(expr, jmode, out); });

  // wo
  auto* wo = app.add_subcommand("wo", "finite well-orders");
  wo->require_subcommand(1);
  auto* wo_tri = wo->add_subcommand("trichotomy", "compare two well-orders from files");
  std::string wo_a, wo_b;
  wo_tri->add_option("fileA", wo_a, "relation file")->required();
  wo_tri->add_option("fileB", wo_b, "relation file")->required();
  wo_tri->callback([&] { rc = cmd_wo_trichotomy(wo_a, wo_b, jmode, out); });

  // poset
  auto* poset = app.add_subcommand("poset", "finite posets and completions");
  poset->require_subcommand(1);

  auto* p_check = poset->add_subcommand("check", "report order properties of a file");
  std::string p_check_file;
  p_check->add_option("file", p_check_file, "relation file")->required();
  p_check->callback([&] { rc = cmd_poset_check(p_check_file, jmode, out); });

  auto* p_dense = poset->add_subcommand("dense", "test density of a named subset");
  std::string p_dense_file, p_dense_set;
  p_dense->add_option("file", p_dense_file, "relation file")->required();
  p_dense->add_option("--set", p_dense_set, "name under the file's sets field")->required();
  p_dense->callback([&] { rc = cmd_poset_dense(p_dense_file, p_dense_set, jmode, out); });

  auto* p_gen = poset->add_subcommand("generic", "run the generic-filter construction");
  std::string p_gen_poset, p_gen_dense;
  std::size_t p_gen_fuel = 100000;
  p_gen->add_option("--poset", p_gen_poset, "k for the binary-condition poset, or a file path")
      ->required();
  p_gen->add_option("--dense", p_gen_dense,
                    "comma list: dN / e:bits for k, set names for a file")
      ->required();
  p_gen->add_option("--fuel", p_gen_fuel, "search and closure budget");
  p_gen->callback([&] {
    auto tokens = split_commas(p_gen_dense);
    if (p_gen_poset == "k")
      rc = cmd_poset_generic_k(tokens, p_gen_fuel, jmode, out);
    else
      rc = cmd_poset_generic_file(p_gen_poset, tokens, p_gen_fuel, jmode, out);
  });

  auto* p_ro = poset->add_subcommand("ro", "regular-open completion of a file poset");
  std::string p_ro_file;
  bool p_ro_dot = false;
  p_ro->add_option("file", p_ro_file, "relation file")->required();
  p_ro->add_flag("--dot", p_ro_dot, "emit the algebra Hasse diagram as DOT");
  p_ro->callback([&] { rc = cmd_poset_ro(p_ro_file, p_ro_dot, jmode, out); });

  auto* p_stone = poset->add_subcommand("stone", "Stone space of the completion");
  std::string p_stone_file;
  bool p_stone_dot = false;
  p_stone->add_option("file", p_stone_file, "relation file")->required();
  p_stone->add_flag("--dot", p_stone_dot, "emit the algebra Hasse diagram as DOT");
  p_stone->callback([&] { rc = cmd_poset_stone(p_stone_file, p_stone_dot, jmode, out); });

  // ad
  auto* adc = app.add_subcommand("ad", "almost-disjoint families and their forcing");
  adc->require_subcommand(1);

  auto* a_family = adc->add_subcommand("family", "list members of a built-in set");
  std::string a_family_name;
  std::uint32_t a_family_i = 0;
  std::uint64_t a_family_below = 100;
  a_family->add_option("--name", a_family_name, "triangular, evens, odds or omega")->required();
  a_family->add_option("-i,--i", a_family_i, "shift index for triangular");
  a_family->add_option("--below", a_family_below, "list members below this bound");
  a_family->callback([&] { rc = cmd_ad_family(a_family_name, a_family_i, a_family_below, jmode, out); });

  auto* a_check = adc->add_subcommand("check", "almost-disjointness of two sets at a bound");
  std::string a_check_x, a_check_y;
  std::uint64_t a_check_below = 1000;
  a_check->add_option("--x", a_check_x, "set name (Nk, evens, odds, omega)")->required();
  a_check->add_option("--y", a_check_y, "set name (Nk, evens, odds, omega)")->required();
  a_check->add_option("--below", a_check_below, "window bound");
  a_check->callback([&] { rc = cmd_ad_check(a_check_x, a_check_y, a_check_below, jmode, out); });

  auto* a_diag = adc->add_subcommand("diagonalize", "transversal through a family prefix");
  std::string a_diag_family = "triangular";
  std::uint32_t a_diag_count = 6;
  std::uint64_t a_diag_below = 10000;
  a_diag->add_option("--family", a_diag_family, "family name (triangular)");
  a_diag->add_option("--count", a_diag_count, "members to walk");
  a_diag->add_option("--below", a_diag_below, "search bound");
  a_diag->callback([&] { rc = cmd_ad_diagonalize(a_diag_family, a_diag_count, a_diag_below, jmode, out); });

  auto* a_gen = adc->add_subcommand("generic", "generic filter over the truncated forcing");
  std::string a_gen_dense;
  std::size_t a_gen_fuel = 100000;
  std::uint32_t a_gen_universe = 16, a_gen_count = 10;
  a_gen->add_option("--dense", a_gen_dense, "comma list: dx:NAME / eyn:NAME:N")->required();
  a_gen->add_option("--fuel", a_gen_fuel, "search and closure budget");
  a_gen->add_option("--universe", a_gen_universe, "chosen points live below this bound");
  a_gen->add_option("--count", a_gen_count, "triangular members in the registry");
  a_gen->callback([&] {
    rc = cmd_ad_generic(a_gen_dense, a_gen_fuel, a_gen_universe, a_gen_count, jmode, out);
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const limit_error& e) {
    err << "limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace setkit
