#include "setkit/binary_conditions.hpp"

#include <bit>
#include <stdexcept>

namespace setkit {

bool BinaryCondition::extends(const BinaryCondition& q) const {
  for (const auto& [x, v] : q.assignment) {
    auto it = assignment.find(x);
    if (it == assignment.end() || it->second != v) return false;
  }
  return true;
}

bool BinaryCondition::compatible_with(const BinaryCondition& q) const {
  for (const auto& [x, v] : q.assignment) {
    auto it = assignment.find(x);
    if (it != assignment.end() && it->second != v) return false;
  }
  return true;
}

std::string to_string(const BinaryCondition& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, v] : c.assignment) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(x) + ":" + std::to_string(v);
  }
  return out + "}";
}

namespace {

// Condition with domain mask `dom` (bit x set means x in the domain) and
// value bits `vals` indexed by position within the sorted domain.
BinaryCondition from_masks(std::uint64_t dom, std::uint64_t vals) {
  BinaryCondition c;
  std::uint32_t j = 0;
  for (std::uint32_t x = 0; x < 64; ++x)
    if (dom >> x & 1ull) c.assignment[x] = static_cast<int>(vals >> j++ & 1ull);
  return c;
}

}  // namespace

BinaryCondition k_condition_at(std::uint64_t index) {
  if (index == 0) return BinaryCondition{};
  std::uint64_t i = index - 1;
  // Conditions with maximum domain element m: domain masks run over
  // [2^m, 2^(m+1)), each mask with k set bits contributing 2^k value
  // patterns; the block holds 2*3^m conditions.
  for (std::uint32_t m = 0;; ++m) {
    std::uint64_t block = 2;
    for (std::uint32_t t = 0; t < m; ++t) block *= 3;
    if (m > 36) throw limit_error("k_condition_at: index too large");
    if (i >= block) {
      i -= block;
      continue;
    }
    for (std::uint64_t dom = 1ull << m; dom < (2ull << m); ++dom) {
      std::uint64_t patterns = 1ull << std::popcount(dom);
      if (i < patterns) return from_masks(dom, i);
      i -= patterns;
    }
  }
}

std::function<std::optional<BinaryCondition>()> k_extensions(const BinaryCondition& p) {
  // Walk supersets of p's domain in (max domain element, domain mask,
  // value mask) order, keeping p's values fixed and running the new
  // positions through all patterns, low patterns first.  The stream is
  // the global enumeration restricted to extensions of p: p itself comes
  // first, then the block of domains with the same maximum, then blocks
  // with ever larger maxima.
  struct State {
    BinaryCondition p;
    std::uint64_t pdom = 0;
    std::uint32_t pmax = 0;
    bool p_empty = true;
    bool emitted_self = false;
    std::uint32_t m = 0;       // current max-domain-element block
    std::uint64_t free = 0;    // positions below m not in p's domain
    std::uint64_t extra = 0;   // chosen submask of free
    std::uint64_t nbits = 0;   // new positions of the current domain
    std::uint64_t vals = 0;    // next pattern over the new positions
    std::uint64_t npatterns = 0;

    void set_domain() {
      bool m_new = p_empty || m > pmax;
      nbits = extra | (m_new ? (1ull << m) : 0);
      vals = 0;
      npatterns = 1ull << std::popcount(nbits);
    }
    // False when block m holds no extension beyond p itself.
    bool enter_block() {
      free = ~pdom & ((1ull << m) - 1);
      if (!p_empty && m == pmax) {
        if (free == 0) return false;
        extra = (0 - free) & free;  // smallest nonzero submask
      } else {
        extra = 0;  // p's domain plus the new maximum alone
      }
      set_domain();
      return true;
    }
    // Next domain within the block, submasks of free ascending.
    bool next_domain() {
      if (extra == free) return false;
      extra = (extra - free) & free;
      set_domain();
      return true;
    }
  };
  auto st = std::make_shared<State>();
  st->p = p;
  for (const auto& [x, v] : p.assignment) st->pdom |= 1ull << x;
  st->p_empty = p.assignment.empty();
  st->pmax = st->p_empty ? 0 : p.assignment.rbegin()->first;

  return [st]() -> std::optional<BinaryCondition> {
    if (!st->emitted_self) {
      st->emitted_self = true;
      st->m = st->p_empty ? 0 : st->pmax;
      while (!st->enter_block()) ++st->m;
      return st->p;
    }
    while (true) {
      if (st->vals < st->npatterns) {
        BinaryCondition c = st->p;
        std::uint32_t j = 0;
        for (std::uint32_t x = 0; x < 64; ++x)
          if (st->nbits >> x & 1ull)
            c.assignment[x] = static_cast<int>(st->vals >> j++ & 1ull);
        ++st->vals;
        return c;
      }
      if (!st->next_domain()) {
        do {
          ++st->m;
          if (st->m > 60) return std::nullopt;  // practically unreachable
        } while (!st->enter_block());
      }
    }
  };
}

LazyPoset<BinaryCondition> k_poset() {
  LazyPoset<BinaryCondition> L;
  L.at = [](std::size_t i) -> std::optional<BinaryCondition> {
    return k_condition_at(i);
  };
  L.leq = [](const BinaryCondition& p, const BinaryCondition& q) {
    return p.extends(q);
  };
  L.describe = [](const BinaryCondition& c) { return to_string(c); };
  L.extensions = [](const BinaryCondition& p) { return k_extensions(p); };
  return L;
}

std::function<bool(const BinaryCondition&)> k_defined_at(std::uint32_t n) {
  return [n](const BinaryCondition& c) { return c.defined_at(n); };
}

std::function<bool(const BinaryCondition&)> k_disagrees_with(
    std::function<int(std::uint32_t)> h) {
  return [h](const BinaryCondition& c) {
    for (const auto& [x, v] : c.assignment)
      if (v != h(x)) return true;
    return false;
  };
}

std::vector<BinaryCondition> k_window_conditions(std::uint32_t max_dom) {
  if (max_dom > 7) throw limit_error("k_window: window too large");
  std::uint64_t count = 1;
  for (std::uint32_t t = 0; t <= max_dom; ++t) count *= 3;
  std::vector<BinaryCondition> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(k_condition_at(i));
  return out;
}

FinitePoset k_window(std::uint32_t max_dom) {
  auto conds = k_window_conditions(max_dom);
  std::vector<std::string> labels;
  labels.reserve(conds.size());
  for (const auto& c : conds) labels.push_back(to_string(c));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < conds.size(); ++i)
    for (std::size_t j = 0; j < conds.size(); ++j)
      if (conds[i].extends(conds[j])) pairs.emplace_back(labels[i], labels[j]);
  return FinitePoset(std::move(labels), pairs);
}

BinaryCondition union_of_filter(const std::vector<BinaryCondition>& conditions) {
  BinaryCondition out;
  for (const auto& c : conditions) {
    if (!out.compatible_with(c))
      throw std::invalid_argument("union_of_filter: incompatible pair");
    for (const auto& [x, v] : c.assignment) out.assignment[x] = v;
  }
  return out;
}

}  // namespace setkit
