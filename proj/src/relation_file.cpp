#include "setkit/relation_file.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace setkit {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + ": expected an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw parse_error(what + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::unordered_map<std::string, std::size_t> index_of(const RelationFile& f) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    if (!idx.emplace(f.elements[i], i).second)
      throw parse_error("elements: duplicate label '" + f.elements[i] + "'");
  }
  return idx;
}

std::size_t resolve(const std::unordered_map<std::string, std::size_t>& idx,
                    const std::string& label, const std::string& where) {
  auto it = idx.find(label);
  if (it == idx.end()) throw parse_error(where + ": unknown label '" + label + "'");
  return it->second;
}

}  // namespace

RelationFile parse_relation_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("relation file: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("relation file: top level must be an object");

  RelationFile f;
  if (!j.contains("elements")) throw parse_error("relation file: missing 'elements'");
  f.elements = string_list(j.at("elements"), "elements");

  const bool has_leq = j.contains("leq");
  const bool has_pairs = j.contains("pairs");
  if (has_leq == has_pairs)
    throw parse_error("relation file: need exactly one of 'leq' or 'pairs'");
  f.leq_field = has_leq;
  const json& rel = has_leq ? j.at("leq") : j.at("pairs");
  const std::string rel_name = has_leq ? "leq" : "pairs";
  if (!rel.is_array()) throw parse_error(rel_name + ": expected an array of pairs");
  for (const auto& pr : rel) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
      throw parse_error(rel_name + ": each entry must be a [from, to] pair of labels");
    f.pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
  }

  if (j.contains("close")) {
    if (!j.at("close").is_boolean()) throw parse_error("close: expected a boolean");
    f.close = j.at("close").get<bool>();
  }
  if (j.contains("sets")) {
    const json& sets = j.at("sets");
    if (!sets.is_object()) throw parse_error("sets: expected an object of name -> labels");
    for (const auto& [name, labels] : sets.items())
      f.sets[name] = string_list(labels, "sets." + name);
  }

  for (const auto& key : j.items()) {
    const std::string& k = key.key();
    if (k != "elements" && k != "leq" && k != "pairs" && k != "close" && k != "sets")
      throw parse_error("relation file: unknown field '" + k + "'");
  }

  // Validate labels up front so later interpretation cannot fail silently.
  auto idx = index_of(f);
  for (const auto& [a, b] : f.pairs) {
    resolve(idx, a, f.leq_field ? "leq" : "pairs");
    resolve(idx, b, f.leq_field ? "leq" : "pairs");
  }
  for (const auto& [name, labels] : f.sets)
    for (const auto& l : labels) resolve(idx, l, "sets." + name);
  return f;
}

RelationFile load_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_relation_text(buf.str());
}

FiniteRelation as_relation(const RelationFile& f) {
  return FiniteRelation(f.elements, f.pairs);
}

FinitePoset as_poset(const RelationFile& f) {
  return FinitePoset(f.elements, f.pairs, f.close);
}

ElementSet named_set(const RelationFile& f, const FinitePoset& P,
                     const std::string& name) {
  auto it = f.sets.find(name);
  if (it == f.sets.end()) throw parse_error("no set named '" + name + "' in file");
  auto idx = index_of(f);
  ElementSet s = P.empty_set();
  for (const auto& l : it->second) s.set(resolve(idx, l, "sets." + name));
  return s;
}

}  // namespace setkit
