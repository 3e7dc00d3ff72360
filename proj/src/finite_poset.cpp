#include "setkit/finite_poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace setkit {

FinitePoset::FinitePoset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& pairs, bool close)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw parse_error("duplicate element label: " + elements_[i]);
  }
  // rel[p] = {q : p <= q} while building; transposed into below_ at the end.
  std::vector<ElementSet> rel(n, ElementSet(n));
  for (const auto& [p, q] : pairs) rel[index(p)].set(index(q));
  if (close) {
    for (std::size_t i = 0; i < n; ++i) rel[i].set(i);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = rel[p].find_first(); q != ElementSet::npos;
             q = rel[p].find_next(q)) {
          if (!rel[q].is_subset_of(rel[p])) {
            rel[p] |= rel[q];
            changed = true;
          }
        }
    }
  } else {
    for (std::size_t p = 0; p < n; ++p)
      if (!rel[p].test(p))
        throw std::invalid_argument("leq not reflexive at " + elements_[p]);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = rel[p].find_first(); q != ElementSet::npos;
           q = rel[p].find_next(q))
        if (!rel[q].is_subset_of(rel[p]))
          throw std::invalid_argument("leq not transitive at " + elements_[p] +
                                      " <= " + elements_[q]);
  }
  below_.assign(n, ElementSet(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = rel[p].find_first(); q != ElementSet::npos;
         q = rel[p].find_next(q))
      below_[q].set(p);
}

std::size_t FinitePoset::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw parse_error("unknown element label: " + label);
  return it->second;
}

bool compatible(const FinitePoset& P, std::size_t p, std::size_t q) {
  if (p >= P.size() || q >= P.size())
    throw std::invalid_argument("compatible: element out of range");
  return (P.down_set(p) & P.down_set(q)).any();
}

bool is_antichain(const FinitePoset& P, const ElementSet& S) {
  for (std::size_t p = S.find_first(); p != ElementSet::npos; p = S.find_next(p))
    for (std::size_t q = S.find_next(p); q != ElementSet::npos; q = S.find_next(q))
      if (compatible(P, p, q)) return false;
  return true;
}

bool is_dense(const FinitePoset& P, const ElementSet& D) {
  for (std::size_t p = 0; p < P.size(); ++p)
    if (!(P.down_set(p) & D).any()) return false;
  return true;
}

ElementSet dpq_dense(const FinitePoset& P, std::size_t p, std::size_t q) {
  ElementSet out = P.empty_set();
  for (std::size_t r = 0; r < P.size(); ++r) {
    if ((P.leq(r, p) && P.leq(r, q)) || !compatible(P, r, p) || !compatible(P, r, q))
      out.set(r);
  }
  if (!is_dense(P, out))
    throw std::logic_error("dpq_dense: construction is not dense");
  return out;
}

bool is_filter(const FinitePoset& P, const ElementSet& G) {
  // Upward closed: q in G and q <= p puts p in G.
  for (std::size_t p = 0; p < P.size(); ++p)
    if (!G.test(p) && (P.down_set(p) & G).any()) {
      // Some q <= p lies in G while p does not: only a violation when the
      // witness is in G below p, which is exactly what we found.
      return false;
    }
  // Downward directed within G.
  for (std::size_t p = G.find_first(); p != ElementSet::npos; p = G.find_next(p))
    for (std::size_t q = G.find_next(p); q != ElementSet::npos; q = G.find_next(q))
      if (!(P.down_set(p) & P.down_set(q) & G).any()) return false;
  return true;
}

namespace {

ElementSet up_closure(const FinitePoset& P, ElementSet S) {
  for (std::size_t p = 0; p < P.size(); ++p)
    if (!S.test(p) && (P.down_set(p) & S).any()) S.set(p);
  return S;
}

// Does any filter strictly containing G exist?  Backtracking search over
// added elements; each explored node costs one unit of fuel.
bool proper_extension_exists(const FinitePoset& P, const ElementSet& G,
                             std::size_t& fuel) {
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (G.test(x)) continue;
    std::vector<ElementSet> stack;
    ElementSet start = G;
    start.set(x);
    stack.push_back(up_closure(P, start));
    std::set<std::vector<bool>> seen;
    while (!stack.empty()) {
      if (fuel == 0) throw limit_error("is_ultrafilter: fuel exhausted");
      --fuel;
      ElementSet cur = stack.back();
      stack.pop_back();
      {
        std::vector<bool> key(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) key[i] = cur.test(i);
        if (!seen.insert(std::move(key)).second) continue;
      }
      // Find a directedness gap.
      bool gap = false;
      for (std::size_t p = cur.find_first(); p != ElementSet::npos && !gap;
           p = cur.find_next(p))
        for (std::size_t q = cur.find_next(p); q != ElementSet::npos;
             q = cur.find_next(q)) {
          ElementSet lows = P.down_set(p) & P.down_set(q);
          if ((lows & cur).any()) continue;
          gap = true;
          // Branch over every possible witness.
          for (std::size_t r = lows.find_first(); r != ElementSet::npos;
               r = lows.find_next(r)) {
            ElementSet next = cur;
            next.set(r);
            stack.push_back(up_closure(P, next));
          }
          break;
        }
      if (!gap) return true;  // directed, upward closed, strictly bigger
    }
  }
  return false;
}

}  // namespace

bool is_ultrafilter(const FinitePoset& P, const ElementSet& G, std::size_t fuel) {
  if (!is_filter(P, G)) throw std::invalid_argument("is_ultrafilter: G is not a filter");
  const std::size_t n = P.size();
  if (n <= 15) {
    // Enumerate every strict superset of G and look for a filter.
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (!G.test(i)) rest.push_back(i);
    for (std::uint32_t m = 1; m < (1u << rest.size()); ++m) {
      ElementSet cand = G;
      for (std::size_t b = 0; b < rest.size(); ++b)
        if (m >> b & 1u) cand.set(rest[b]);
      if (is_filter(P, cand)) return false;
    }
    return true;
  }
  return !proper_extension_exists(P, G, fuel);
}

std::vector<ElementSet> enumerate_filters(const FinitePoset& P) {
  std::vector<ElementSet> out;
  std::set<std::vector<bool>> seen;
  auto push = [&](const ElementSet& s) {
    std::vector<bool> key(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) key[i] = s.test(i);
    if (seen.insert(std::move(key)).second) out.push_back(s);
  };
  push(P.empty_set());
  for (std::size_t m = 0; m < P.size(); ++m) {
    ElementSet up = P.empty_set();
    for (std::size_t q = 0; q < P.size(); ++q)
      if (P.leq(m, q)) up.set(q);
    push(up);
  }
  return out;
}

std::vector<ElementSet> enumerate_ultrafilters(const FinitePoset& P) {
  std::vector<ElementSet> out;
  std::set<std::vector<bool>> seen;
  for (std::size_t m = 0; m < P.size(); ++m) {
    // Minimal up to order equivalence: nothing strictly below m.
    bool minimal = true;
    for (std::size_t x = P.down_set(m).find_first(); x != ElementSet::npos;
         x = P.down_set(m).find_next(x))
      if (!P.leq(m, x)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    ElementSet up = P.empty_set();
    for (std::size_t q = 0; q < P.size(); ++q)
      if (P.leq(m, q)) up.set(q);
    std::vector<bool> key(up.size());
    for (std::size_t i = 0; i < up.size(); ++i) key[i] = up.test(i);
    if (seen.insert(std::move(key)).second) out.push_back(up);
  }
  return out;
}

bool fip_check(const std::vector<std::vector<int>>& family) {
  if (family.empty())
    throw std::invalid_argument("fip_check: family must be nonempty");
  if (family.size() > 20) throw limit_error("fip_check: family too large");
  std::vector<std::vector<int>> sorted = family;
  for (auto& s : sorted) std::sort(s.begin(), s.end());
  // DFS over subfamilies carrying the running intersection; a branch
  // whose intersection dies refutes the property immediately (supersets
  // of a dead branch are dead too, so pruning loses nothing).
  struct Walker {
    const std::vector<std::vector<int>>& fam;
    bool ok = true;
    void walk(std::size_t i, const std::vector<int>& inter, bool any) {
      if (!ok) return;
      if (any && inter.empty()) {
        ok = false;
        return;
      }
      if (i == fam.size()) return;
      walk(i + 1, inter, any);  // skip fam[i]
      std::vector<int> next;
      if (!any) {
        next = fam[i];
      } else {
        std::set_intersection(inter.begin(), inter.end(), fam[i].begin(),
                              fam[i].end(), std::back_inserter(next));
      }
      walk(i + 1, next, true);  // take fam[i]
    }
  } walker{sorted};
  walker.walk(0, {}, false);
  return walker.ok;
}

}  // namespace setkit
