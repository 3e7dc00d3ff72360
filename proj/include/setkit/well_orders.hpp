#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "setkit/errors.hpp"
#include "setkit/ordinal.hpp"

namespace setkit {

// A binary relation on finitely many labelled elements.  Stored as an
// adjacency matrix; labels are opaque and only resolved at the boundary.
class FiniteRelation {
 public:
  FiniteRelation() = default;
  FiniteRelation(std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  std::size_t index(const std::string& label) const;  // throws parse_error

  bool related(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set_related(std::size_t i, std::size_t j) { rows_[i].set(j); }
  const boost::dynamic_bitset<>& row(std::size_t i) const { return rows_[i]; }

  std::vector<std::pair<std::string, std::string>> pairs() const;

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<boost::dynamic_bitset<>> rows_;
};

// The canonical strict order 0 < 1 < ... < n-1 with labels prefix+digit.
FiniteRelation chain(std::size_t n, const std::string& prefix = "e");

struct OrderReport {
  // "partial" here asks only for transitivity and reflexivity;
  // "total" asks for transitivity, trichotomy and irreflexivity (a strict
  // order); "well" additionally wants a least element in every nonempty
  // subset, which for finite carriers coincides with "total".
  bool is_partial = false;
  bool is_total = false;
  bool is_well = false;
  // Nonempty exactly when the matching flag is false.
  std::string partial_witness;
  std::string total_witness;
  std::string well_witness;
};

OrderReport check_order_properties(const FiniteRelation& r);

// Strict predecessors of x.  Throws parse_error for an unknown label.
std::vector<std::string> pred(const FiniteRelation& r, const std::string& x);

// Order type of a finite well-order, as a natural-valued ordinal.
// Throws std::invalid_argument when r is not a well-order.
Ordinal order_type_small(const FiniteRelation& r);

// Disjoint-sum order: a copy of a (labels tagged "#0") followed by a copy
// of b (labels tagged "#1").  Pre: both are well-orders.
FiniteRelation sum_order(const FiniteRelation& a, const FiniteRelation& b);

// Lexicographic order on pairs "(y,x)" with y from b dominant; realizes
// the product with b counting copies of a.  Pre: both are well-orders.
FiniteRelation product_order(const FiniteRelation& a, const FiniteRelation& b);

enum class TrichotomyCase { Iso, PredOfFirst, PredOfSecond };

struct TrichotomyResult {
  TrichotomyCase which = TrichotomyCase::Iso;
  // PredOfFirst: a restricted below cut_point is isomorphic to b;
  // PredOfSecond: a is isomorphic to b restricted below cut_point.
  std::optional<std::string> cut_point;
  // Pairs (label in a, label in b), in order.
  std::vector<std::pair<std::string, std::string>> iso;
};

// Exactly one of the three comparison cases, with the witnessing map.
// Pre: both are well-orders.
TrichotomyResult trichotomy(const FiniteRelation& a, const FiniteRelation& b);

// Exhaustively checks every map from an n-element set into its power set:
// none is onto, and the diagonal set {a : a not in f(a)} is never hit.
// Pre: 0 <= n <= 4.
bool cantor_no_surjection(unsigned n);

}  // namespace setkit
