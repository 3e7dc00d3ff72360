#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <unordered_map>
#include <vector>

#include "setkit/errors.hpp"

namespace setkit {

using ElementSet = boost::dynamic_bitset<>;

// A finite preorder: leq is reflexive and transitive.  Smaller elements
// are the stronger conditions.  Antisymmetry is not required; everything
// downstream works up to order equivalence.
class FinitePoset {
 public:
  FinitePoset() = default;
  // pairs are (p, q) meaning p <= q.  With close=true the reflexive
  // transitive closure is taken first; otherwise reflexivity and
  // transitivity are validated and a violation throws invalid_argument.
  FinitePoset(std::vector<std::string> elements,
              const std::vector<std::pair<std::string, std::string>>& pairs,
              bool close = false);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  std::size_t index(const std::string& label) const;  // throws parse_error

  bool leq(std::size_t p, std::size_t q) const { return below_[q].test(p); }
  // All r with r <= p.
  const ElementSet& down_set(std::size_t p) const { return below_[p]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { ElementSet s(size()); s.set(); return s; }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ElementSet> below_;  // below_[q] = {p : p <= q}
};

// Common lower bound exists.
bool compatible(const FinitePoset& P, std::size_t p, std::size_t q);

// Every two distinct members of S are incompatible (in P; being mutually
// incomparable is not enough).
bool is_antichain(const FinitePoset& P, const ElementSet& S);

// Every element has an extension inside D.
bool is_dense(const FinitePoset& P, const ElementSet& D);

// {r : (r <= p and r <= q) or r incompatible p or r incompatible q}.
// Dense for every p, q; verified before returning.
ElementSet dpq_dense(const FinitePoset& P, std::size_t p, std::size_t q);

// Upward closed and downward directed.  The empty set counts as a filter.
bool is_filter(const FinitePoset& P, const ElementSet& G);

// Maximal among filters.  Pre: G is a filter (invalid_argument otherwise).
// For |P| <= 15 every superset is enumerated; beyond that a fuel-bounded
// backtracking extension search runs and throws limit_error on exhaustion.
bool is_ultrafilter(const FinitePoset& P, const ElementSet& G,
                    std::size_t fuel = 1u << 20);

// Every filter of a finite poset is a principal up-set (fold directedness
// witnesses down to a least member), so these lists are complete.
std::vector<ElementSet> enumerate_filters(const FinitePoset& P);
std::vector<ElementSet> enumerate_ultrafilters(const FinitePoset& P);

// True iff every nonempty subfamily has nonempty intersection.  Family
// size is capped at 20 (limit_error beyond); the family must be nonempty.
bool fip_check(const std::vector<std::vector<int>>& family);

}  // namespace setkit
