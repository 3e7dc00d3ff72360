#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setkit/errors.hpp"
#include "setkit/finite_poset.hpp"

namespace setkit {

// A countable preorder given by a stable enumeration.  `at` yields the
// i-th element (nullopt past the end for finite posets).  `extensions(p)`
// returns a cursor over {q : q <= p} in exactly the enumeration order;
// the default cursor filters `at`, specialised posets provide structural
// ones so deep extensions are reachable.  Either way the first element a
// cursor produces for a predicate is the first hit of the enumeration.
template <class T>
struct LazyPoset {
  using Cursor = std::function<std::optional<T>()>;

  std::function<std::optional<T>(std::size_t)> at;
  std::function<bool(const T&, const T&)> leq;
  std::function<std::string(const T&)> describe;
  std::function<Cursor(const T&)> extensions;  // optional; default derived

  Cursor extensions_of(const T& p) const {
    if (extensions) return extensions(p);
    auto self = *this;
    auto i = std::make_shared<std::size_t>(0);
    return [self, p, i]() -> std::optional<T> {
      while (true) {
        auto q = self.at((*i)++);
        if (!q) return std::nullopt;
        if (self.leq(*q, p)) return q;
      }
    };
  }
};

template <class T>
struct FilterResult {
  std::vector<T> chain;  // chain[0] = start, descending
  // Upward closure of the chain within the first `fuel` enumerated
  // elements (the whole poset when the enumeration ends sooner).
  std::vector<T> filter;
  // For each dense set, (its index, the chain element that landed in it).
  std::vector<std::pair<std::size_t, T>> met;
};

// The countable-dense-sets construction: starting from `start`, walk down
// through one witness per dense set, taking as p_n the first enumerated
// element that extends p_{n-1} and lies in dense[n-1].  Each witness
// search and the closing window are bounded by `fuel` steps; running out
// signals the window was too small, not that density fails.
template <class T>
FilterResult<T> generic_filter(const LazyPoset<T>& P,
                               const std::vector<std::function<bool(const T&)>>& dense,
                               const T& start, std::size_t fuel) {
  FilterResult<T> res;
  res.chain.push_back(start);
  for (std::size_t n = 0; n < dense.size(); ++n) {
    auto cursor = P.extensions_of(res.chain.back());
    bool found = false;
    for (std::size_t step = 0; step < fuel; ++step) {
      auto q = cursor();
      if (!q) break;  // finite poset exhausted below p
      if (dense[n](*q)) {
        res.met.emplace_back(n, *q);
        res.chain.push_back(*q);
        found = true;
        break;
      }
    }
    if (!found)
      throw limit_error("generic_filter: fuel exhausted searching dense set " +
                        std::to_string(n));
  }
  for (std::size_t i = 0; i < fuel; ++i) {
    auto q = P.at(i);
    if (!q) break;
    for (const auto& p : res.chain)
      if (P.leq(p, *q)) {
        res.filter.push_back(*q);
        break;
      }
  }
  return res;
}

// View a FinitePoset as a lazy poset over element indices.  The poset is
// copied so the view owns its data.
inline LazyPoset<std::size_t> as_lazy(const FinitePoset& P) {
  auto held = std::make_shared<FinitePoset>(P);
  LazyPoset<std::size_t> L;
  L.at = [held](std::size_t i) -> std::optional<std::size_t> {
    if (i >= held->size()) return std::nullopt;
    return i;
  };
  L.leq = [held](std::size_t p, std::size_t q) { return held->leq(p, q); };
  L.describe = [held](std::size_t p) { return held->label(p); };
  return L;
}

}  // namespace setkit
