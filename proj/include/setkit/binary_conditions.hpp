#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "setkit/finite_poset.hpp"
#include "setkit/generic_filter.hpp"

namespace setkit {

// A finite partial function from naturals to {0,1}.  As a forcing
// condition, p <= q means p extends q (q is a subset of p).
struct BinaryCondition {
  std::map<std::uint32_t, int> assignment;

  bool defined_at(std::uint32_t x) const { return assignment.count(x) != 0; }
  int value(std::uint32_t x) const { return assignment.at(x); }
  bool extends(const BinaryCondition& q) const;
  bool compatible_with(const BinaryCondition& q) const;  // agree on overlap

  bool operator==(const BinaryCondition& o) const = default;
};

std::string to_string(const BinaryCondition& c);  // e.g. "{0:1, 3:0}"

// Conditions in the canonical enumeration: the empty condition first,
// then ascending by (max domain element, domain bitmask, value bitmask),
// value bit j belonging to the j-th smallest domain element.  Small
// conditions come early and the order is stable.
BinaryCondition k_condition_at(std::uint64_t index);

// {q : q extends p} in the same order; the cursor starts with p itself.
std::function<std::optional<BinaryCondition>()> k_extensions(const BinaryCondition& p);

// The full countable poset as a lazy view.
LazyPoset<BinaryCondition> k_poset();

// Dense-set predicates: defined at n, and disagrees-with-h somewhere.
std::function<bool(const BinaryCondition&)> k_defined_at(std::uint32_t n);
std::function<bool(const BinaryCondition&)> k_disagrees_with(
    std::function<int(std::uint32_t)> h);

// The finite sub-poset of all conditions with domain inside {0..max_dom},
// in enumeration order (these are exactly the first 3^(max_dom+1)
// enumerated conditions).  Labels are the canonical renderings.
FinitePoset k_window(std::uint32_t max_dom);
std::vector<BinaryCondition> k_window_conditions(std::uint32_t max_dom);

// Union of a pairwise compatible chain of conditions; throws
// invalid_argument when two members conflict.
BinaryCondition union_of_filter(const std::vector<BinaryCondition>& conditions);

}  // namespace setkit
