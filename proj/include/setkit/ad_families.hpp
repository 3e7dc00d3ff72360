#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "setkit/errors.hpp"
#include "setkit/generic_filter.hpp"

namespace setkit::ad {

// An infinite (or finite) set of naturals given by a membership test.
// enumerate_below always agrees with member because it is derived from it.
class SetGen {
 public:
  SetGen() = default;
  SetGen(std::string id, std::function<bool(std::uint64_t)> member)
      : id_(std::move(id)), member_(std::move(member)) {}

  const std::string& id() const { return id_; }
  bool member(std::uint64_t n) const { return member_(n); }
  std::vector<std::uint64_t> enumerate_below(std::uint64_t bound) const;

 private:
  std::string id_;
  std::function<bool(std::uint64_t)> member_;
};

// Named generators; conditions refer to sets by id only.
class Registry {
 public:
  void add(SetGen gen);
  const SetGen& resolve(const std::string& id) const;  // throws parse_error
  bool has(const std::string& id) const { return gens_.count(id) != 0; }
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, SetGen> gens_;
};

// The shifted-triangular family: member i is the triangular numbers
// {0,1,3,6,10,...} moved up by i.  Any two members share at most |i-j|
// elements, so the family is almost disjoint.
SetGen triangular_family(std::uint32_t i);
SetGen evens();
SetGen odds();
SetGen whole_omega();

// Registry with N0..N(count-1) from the triangular family plus evens,
// odds and omega.
Registry standard_registry(std::uint32_t triangular_count);

// Demo registries mirroring classic non-maximality examples: the family
// of all finite subsets of omega fails to be maximal in spirit (every
// infinite set meets finite sets only finitely), and {omega} alone is
// trivially maximal-ish for the wrong reason.  Shipped for the CLI demos,
// no theorem checked against them.
Registry demo_finite_subsets(std::uint32_t count);
Registry demo_omega_only();

struct AdReport {
  std::uint64_t intersection_size = 0;  // |x ∩ y ∩ [0, bound)|
  // Empirical only, never a proof: true when no common element lies in
  // the top half [bound/2, bound) of the window, i.e. the intersection
  // has visibly stopped growing.
  bool ad_at_bound = false;
};

AdReport ad_check(const SetGen& x, const SetGen& y, std::uint64_t bound);

// A forcing condition: finitely many chosen naturals plus finitely many
// family members (by id) promised to stay almost untouched.
struct Condition {
  std::set<std::uint64_t> s;
  std::set<std::string> gens;

  bool operator==(const Condition& o) const = default;
};

std::string to_string(const Condition& c);

// c1 extends c2: s and gens grow, and no member promised by c2 gained
// new points: x ∩ s1 ⊆ s2 for every x in c2's gens.
bool pa_leq(const Registry& reg, const Condition& c1, const Condition& c2);

// Mutual no-new-points check; equivalent to the union condition
// <s1 ∪ s2, F1 ∪ F2> extending both.
bool pa_compatible(const Registry& reg, const Condition& c1, const Condition& c2);

struct DenseSpec {
  enum Kind { AddGen, HitAbove } kind;
  std::string set_id;       // x for AddGen, y for HitAbove
  std::uint64_t above = 0;  // n for HitAbove
};

// Membership in the selected dense set: AddGen wants the generator
// promised; HitAbove wants some chosen point of y at or above n.
bool in_dense_set(const Registry& reg, const DenseSpec& spec, const Condition& c);

// An extension of c inside the named dense set: AddGen returns
// <s, gens ∪ {x}>; HitAbove returns <s ∪ {m}, gens> with m the least
// member of y above n avoiding every promised set.  Throws limit_error
// when no eligible m is found below search_bound.
Condition dense_witness(const Registry& reg, const DenseSpec& spec, const Condition& c,
                        std::uint64_t search_bound = 1u << 20);

// Union of the chosen-point parts of a pairwise compatible run.
// Throws invalid_argument on an incompatible pair.
std::vector<std::uint64_t> extract_d(const Registry& reg,
                                     const std::vector<Condition>& G);

// Transversal construction: for each family member in order, the least
// point below `bound` not in any earlier member.  Pre: the family is
// pairwise a.d. at `bound` per ad_check (invalid_argument otherwise);
// limit_error when some difference set is empty below the bound.
std::vector<std::uint64_t> diagonalize(const std::vector<SetGen>& family,
                                       std::size_t steps, std::uint64_t bound);

// The truncated forcing poset: conditions with s inside [0, universe) and
// gens among gen_ids, enumerated ascending by the packed integer
// (gens bitmask << universe) | s bitmask, so small conditions come first.
// universe + |gen_ids| must stay within 48 bits of packing.
LazyPoset<Condition> pa_lazy_poset(const Registry& reg,
                                   std::vector<std::string> gen_ids,
                                   std::uint32_t universe);

}  // namespace setkit::ad
