#pragma once

#include <map>
#include <string>
#include <vector>

#include "setkit/errors.hpp"
#include "setkit/finite_poset.hpp"
#include "setkit/well_orders.hpp"

namespace setkit {

// On-disk description of a finite relation or poset, shared by every
// subcommand.  JSON object with fields:
//   elements: list of distinct label strings            (required)
//   leq | pairs: list of [from, to] label pairs         (exactly one)
//   close: take the reflexive transitive closure first  (optional, posets)
//   sets: named subsets, name -> list of labels         (optional)
struct RelationFile {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool leq_field = false;  // which of leq/pairs appeared
  bool close = false;
  std::map<std::string, std::vector<std::string>> sets;
};

RelationFile load_relation_file(const std::string& path);   // throws parse_error
RelationFile parse_relation_text(const std::string& text);  // throws parse_error

// Interpretations.  Both resolve `sets` labels against `elements` and
// throw parse_error on unknown labels.
FiniteRelation as_relation(const RelationFile& f);
FinitePoset as_poset(const RelationFile& f);  // honors `close`

ElementSet named_set(const RelationFile& f, const FinitePoset& P,
                     const std::string& name);

}  // namespace setkit
