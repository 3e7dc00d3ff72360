#include "setkit/ad_families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace setkit::ad {

std::vector<std::uint64_t> SetGen::enumerate_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < bound; ++n)
    if (member_(n)) out.push_back(n);
  return out;
}

void Registry::add(SetGen gen) {
  auto id = gen.id();
  if (!gens_.emplace(id, std::move(gen)).second)
    throw parse_error("registry: duplicate id " + id);
}

const SetGen& Registry::resolve(const std::string& id) const {
  auto it = gens_.find(id);
  if (it == gens_.end()) throw parse_error("registry: unknown set id " + id);
  return it->second;
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, g] : gens_) out.push_back(id);
  return out;
}

namespace {

bool is_triangular(std::uint64_t n) {
  // n = k(k+1)/2 for some k.
  std::uint64_t k = static_cast<std::uint64_t>(std::sqrt(2.0 * n));
  for (std::uint64_t c = (k > 1 ? k - 1 : 0); c <= k + 1; ++c)
    if (c * (c + 1) / 2 == n) return true;
  return false;
}

}  // namespace

SetGen triangular_family(std::uint32_t i) {
  return SetGen("N" + std::to_string(i), [i](std::uint64_t n) {
    return n >= i && is_triangular(n - i);
  });
}

SetGen evens() {
  return SetGen("evens", [](std::uint64_t n) { return n % 2 == 0; });
}

SetGen odds() {
  return SetGen("odds", [](std::uint64_t n) { return n % 2 == 1; });
}

SetGen whole_omega() {
  return SetGen("omega", [](std::uint64_t) { return true; });
}

Registry standard_registry(std::uint32_t triangular_count) {
  Registry reg;
  for (std::uint32_t i = 0; i < triangular_count; ++i) reg.add(triangular_family(i));
  reg.add(evens());
  reg.add(odds());
  reg.add(whole_omega());
  return reg;
}

Registry demo_finite_subsets(std::uint32_t count) {
  // The k-th finite subset reads k in binary: bit i set means i belongs.
  Registry reg;
  for (std::uint32_t k = 0; k < count; ++k) {
    reg.add(SetGen("fin" + std::to_string(k), [k](std::uint64_t n) {
      return n < 32 && (k >> n & 1u);
    }));
  }
  return reg;
}

Registry demo_omega_only() {
  Registry reg;
  reg.add(whole_omega());
  return reg;
}

AdReport ad_check(const SetGen& x, const SetGen& y, std::uint64_t bound) {
  AdReport rep;
  rep.ad_at_bound = true;
  for (std::uint64_t n = 0; n < bound; ++n) {
    if (x.member(n) && y.member(n)) {
      ++rep.intersection_size;
      if (n >= bound / 2) rep.ad_at_bound = false;
    }
  }
  return rep;
}

std::string to_string(const Condition& c) {
  std::string out = "<{";
  bool first = true;
  for (auto n : c.s) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(n);
  }
  out += "}, {";
  first = true;
  for (const auto& g : c.gens) {
    if (!first) out += ",";
    first = false;
    out += g;
  }
  return out + "}>";
}

bool pa_leq(const Registry& reg, const Condition& c1, const Condition& c2) {
  if (!std::includes(c1.s.begin(), c1.s.end(), c2.s.begin(), c2.s.end()))
    return false;
  if (!std::includes(c1.gens.begin(), c1.gens.end(), c2.gens.begin(), c2.gens.end()))
    return false;
  for (const auto& id : c2.gens) {
    const SetGen& x = reg.resolve(id);
    for (auto n : c1.s)
      if (x.member(n) && !c2.s.count(n)) return false;
  }
  return true;
}

bool pa_compatible(const Registry& reg, const Condition& c1, const Condition& c2) {
  for (const auto& id : c1.gens) {
    const SetGen& x = reg.resolve(id);
    for (auto n : c2.s)
      if (x.member(n) && !c1.s.count(n)) return false;
  }
  for (const auto& id : c2.gens) {
    const SetGen& x = reg.resolve(id);
    for (auto n : c1.s)
      if (x.member(n) && !c2.s.count(n)) return false;
  }
  return true;
}

bool in_dense_set(const Registry& reg, const DenseSpec& spec, const Condition& c) {
  if (spec.kind == DenseSpec::AddGen) return c.gens.count(spec.set_id) != 0;
  const SetGen& y = reg.resolve(spec.set_id);
  for (auto n : c.s)
    if (n >= spec.above && y.member(n)) return true;
  return false;
}

Condition dense_witness(const Registry& reg, const DenseSpec& spec, const Condition& c,
                        std::uint64_t search_bound) {
  Condition out = c;
  if (spec.kind == DenseSpec::AddGen) {
    reg.resolve(spec.set_id);  // id must exist
    out.gens.insert(spec.set_id);
    return out;
  }
  const SetGen& y = reg.resolve(spec.set_id);
  for (std::uint64_t m = spec.above + 1; m < search_bound; ++m) {
    if (!y.member(m)) continue;
    bool blocked = false;
    for (const auto& id : c.gens)
      if (reg.resolve(id).member(m)) {
        blocked = true;
        break;
      }
    if (!blocked) {
      out.s.insert(m);
      return out;
    }
  }
  throw limit_error("dense_witness: no eligible point below search bound");
}

std::vector<std::uint64_t> extract_d(const Registry& reg,
                                     const std::vector<Condition>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!pa_compatible(reg, G[i], G[j]))
        throw std::invalid_argument("extract_d: incompatible pair in G");
  std::set<std::uint64_t> acc;
  for (const auto& c : G) acc.insert(c.s.begin(), c.s.end());
  return {acc.begin(), acc.end()};
}

std::vector<std::uint64_t> diagonalize(const std::vector<SetGen>& family,
                                       std::size_t steps, std::uint64_t bound) {
  if (steps > family.size())
    throw std::invalid_argument("diagonalize: more steps than family members");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!ad_check(family[i], family[j], bound).ad_at_bound)
        throw std::invalid_argument("diagonalize: family not a.d. at bound (" +
                                    family[i].id() + " vs " + family[j].id() + ")");
  std::vector<std::uint64_t> out;
  for (std::size_t xi = 0; xi < steps; ++xi) {
    bool found = false;
    for (std::uint64_t v = 0; v < bound && !found; ++v) {
      if (!family[xi].member(v)) continue;
      bool earlier = false;
      for (std::size_t eta = 0; eta < xi; ++eta)
        if (family[eta].member(v)) {
          earlier = true;
          break;
        }
      if (!earlier) {
        out.push_back(v);
        found = true;
      }
    }
    if (!found)
      throw limit_error("diagonalize: difference set empty below bound at step " +
                        std::to_string(xi));
  }
  return out;
}

LazyPoset<Condition> pa_lazy_poset(const Registry& reg,
                                   std::vector<std::string> gen_ids,
                                   std::uint32_t universe) {
  if (universe + gen_ids.size() > 48)
    throw limit_error("pa_lazy_poset: universe plus generator count too large");
  for (const auto& id : gen_ids) reg.resolve(id);

  struct Ctx {
    Registry reg;
    std::vector<std::string> ids;
    std::uint32_t u;

    Condition decode(std::uint64_t packed) const {
      Condition c;
      for (std::uint32_t b = 0; b < u; ++b)
        if (packed >> b & 1ull) c.s.insert(b);
      for (std::size_t g = 0; g < ids.size(); ++g)
        if (packed >> (u + g) & 1ull) c.gens.insert(ids[g]);
      return c;
    }
    std::uint64_t encode(const Condition& c) const {
      std::uint64_t packed = 0;
      for (auto n : c.s) packed |= 1ull << n;
      for (std::size_t g = 0; g < ids.size(); ++g)
        if (c.gens.count(ids[g])) packed |= 1ull << (u + g);
      return packed;
    }
  };
  auto ctx = std::make_shared<Ctx>(Ctx{reg, std::move(gen_ids), universe});
  const std::uint64_t total = 1ull << (ctx->u + ctx->ids.size());

  LazyPoset<Condition> L;
  L.at = [ctx, total](std::size_t i) -> std::optional<Condition> {
    if (i >= total) return std::nullopt;
    return ctx->decode(i);
  };
  L.leq = [ctx](const Condition& a, const Condition& b) {
    return pa_leq(ctx->reg, a, b);
  };
  L.describe = [](const Condition& c) { return to_string(c); };
  L.extensions = [ctx, total](const Condition& p) {
    // Extensions of p in packed ascending order: higher gens bits first
    // iterate slowest.  New chosen points must dodge every set p already
    // promises, which is exactly pa_leq's third clause.
    std::uint64_t base = ctx->encode(p);
    std::uint64_t s_allowed = 0;
    for (std::uint32_t b = 0; b < ctx->u; ++b) {
      if (p.s.count(b)) continue;
      bool blocked = false;
      for (const auto& id : p.gens)
        if (ctx->reg.resolve(id).member(b)) {
          blocked = true;
          break;
        }
      if (!blocked) s_allowed |= 1ull << b;
    }
    std::uint64_t g_free = 0;
    for (std::size_t g = 0; g < ctx->ids.size(); ++g)
      if (!p.gens.count(ctx->ids[g])) g_free |= 1ull << (ctx->u + g);
    // Iterate submasks of (g_free | s_allowed) ascending; OR with base is
    // monotone on the disjoint free bits, so packed order is preserved.
    auto free = g_free | s_allowed;
    auto cur = std::make_shared<std::uint64_t>(0);
    auto done = std::make_shared<bool>(false);
    return LazyPoset<Condition>::Cursor(
        [ctx, base, free, cur, done]() -> std::optional<Condition> {
          if (*done) return std::nullopt;
          std::uint64_t extra = *cur;
          if (extra == free)
            *done = true;
          else
            *cur = (extra - free) & free;
          return ctx->decode(base | extra);
        });
  };
  return L;
}

}  // namespace setkit::ad
