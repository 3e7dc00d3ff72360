#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "setkit/errors.hpp"
#include "setkit/finite_poset.hpp"

namespace setkit {

// Subsets of a poset of at most 12 elements, bit p = element p.
using Mask = std::uint32_t;

// The topology on a finite preorder whose opens are the down-closed sets;
// {q : q <= p} is the smallest open around p, so interior and closure
// have one-pass formulas.
class DownSetTopology {
 public:
  explicit DownSetTopology(const FinitePoset& P);

  std::size_t ground_size() const { return n_; }
  Mask full() const { return n_ == 32 ? ~Mask{0} : ((Mask{1} << n_) - 1); }
  Mask basic_open(std::size_t p) const { return below_[p]; }  // {q : q <= p}

  bool is_open(Mask b) const;          // down-closed
  Mask interior(Mask b) const;         // largest open inside b
  Mask closure(Mask b) const;          // up-closure
  Mask regularize(Mask b) const;       // interior of closure

 private:
  std::size_t n_;
  std::vector<Mask> below_;
};

// The algebra of regular open sets (fixed points of regularize), with the
// canonical dense embedding p -> regularize({q : q <= p}).  Meet is
// intersection, join regularizes the union, complement takes the interior
// of the set difference; all three stay inside the carrier.
class RegularOpenAlgebra {
 public:
  RegularOpenAlgebra(FinitePoset poset, DownSetTopology topology,
                     std::vector<Mask> carrier, std::vector<int> embedding);

  const FinitePoset& poset() const { return poset_; }
  const DownSetTopology& topology() const { return topo_; }

  std::size_t size() const { return carrier_.size(); }
  Mask element(int i) const { return carrier_[i]; }
  int index_of(Mask b) const;  // throws invalid_argument if not regular open

  int zero() const { return zero_; }
  int one() const { return one_; }
  int meet(int a, int b) const;
  int join(int a, int b) const;
  int complement(int a) const;
  bool leq(int a, int b) const;  // carrier order: subset

  int embed(std::size_t p) const { return embedding_[p]; }
  std::vector<int> atoms() const;  // minimal nonzero elements

  // Pretty form of a carrier element as a set of poset labels.
  std::string describe(int i) const;

 private:
  FinitePoset poset_;
  DownSetTopology topo_;
  std::vector<Mask> carrier_;
  std::unordered_map<Mask, int> index_;
  std::vector<int> embedding_;
  int zero_ = 0, one_ = 0;
};

// Builds the completion.  Throws limit_error when the poset exceeds
// max_size elements (default 12, carrier then at most 4096).
RegularOpenAlgebra ro_algebra(const FinitePoset& P, std::size_t max_size = 12);

struct EmbeddingReport {
  bool dense_range = false;        // image meets every nonzero element from below
  bool monotone = false;           // p <= q gives i(p) <= i(q)
  bool incompat_iff_disjoint = false;  // p incompatible q iff i(p) meet i(q) = 0
  std::size_t incompatible_pairs = 0;  // pairs feeding the third clause
  bool third_clause_vacuous = false;   // no incompatible pairs existed
  std::string witness;                 // first failure, empty when all pass
  bool ok() const { return dense_range && monotone && incompat_iff_disjoint; }
};

EmbeddingReport verify_embedding(const RegularOpenAlgebra& A);

struct BaLawsReport {
  bool laws = false;           // lattice + complement + distributivity laws
  bool complete = false;       // every subset has sup and inf
  bool complete_exhaustive = false;  // subsets enumerated (carrier <= 16)
  std::string witness;
  bool ok() const { return laws && complete; }
};

// Checks the Boolean algebra laws on the operation tables and, for
// carriers of at most 16 elements, sup/inf existence for every subset.
// Larger carriers get completeness from table closure plus the bounds
// (finite lattices), and carriers above 512 throw limit_error.
BaLawsReport ba_laws_check(const RegularOpenAlgebra& A);

// The nonzero part of the algebra as a poset under the algebra order,
// labels the describe() strings.
FinitePoset algebra_poset(const RegularOpenAlgebra& A);

struct StoneSpace {
  // Each point is an ultrafilter of the nonzero carrier, stored as sorted
  // algebra indices; point_min[i] names the least element (an atom).
  std::vector<std::vector<int>> points;
  std::vector<int> point_min;
  // basic_open[b] = bitmask over points of {G : b in G}.
  std::vector<std::uint32_t> basic_open;
};

// Enumerates the ultrafilters of the nonzero carrier (every filter of a
// finite poset is a principal up-set, so these are the up-sets of minimal
// elements) and the basic-open map.  Pre: carrier <= 4096.
StoneSpace stone_space(const RegularOpenAlgebra& A);

struct StoneReport {
  bool disjointness = false;  // N_b and N_c miss iff b meet c = 0
  bool meets_map = false;     // N_{b meet c} = N_b intersect N_c
  std::string witness;
  bool ok() const { return disjointness && meets_map; }
};

StoneReport stone_ccc_check(const RegularOpenAlgebra& A, const StoneSpace& S);

}  // namespace setkit
