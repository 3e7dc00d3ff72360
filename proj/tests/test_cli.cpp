#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "setkit/cli.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = setkit::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string got;
  while (std::getline(in, got))
    if (got == line) return true;
  return false;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << text;
  return p;
}

}  // namespace

TEST_CASE("ord eval") {
  auto r = run({"ord", "eval", "w*2+3"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "value: w*2 + 3"));
  CHECK(has_line(r.out, "kind: successor"));

  r = run({"ord", "eval", "(w+1)*w"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "value: w^2"));
  CHECK(has_line(r.out, "kind: limit"));

  r = run({"ord", "eval", "0"});
  CHECK(has_line(r.out, "kind: zero"));

  r = run({"--json", "ord", "eval", "w^w + 5"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == "w^w + 5");
  CHECK(j["kind"] == "successor");

  r = run({"ord", "eval", "w+"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);

  r = run({"ord", "eval", "2^(1<<30)"});
  CHECK(r.code == 2);  // malformed, not a limit problem
  r = run({"ord", "eval", "(w+1)^200000"});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("limit: ", 0) == 0);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"ord"}).code == 2);
  CHECK(run({"ord", "eval"}).code == 2);
  CHECK(run({"ord", "eval", "w", "--wat"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"poset", "--help"}).code == 0);
}

TEST_CASE("wo trichotomy") {
  auto a3 = write_file("setkit_t_a3.json", R"({
    "elements": ["a0", "a1", "a2"],
    "leq": [["a0","a1"], ["a0","a2"], ["a1","a2"]]
  })");
  auto b2 = write_file("setkit_t_b2.json", R"({
    "elements": ["b0", "b1"],
    "leq": [["b0","b1"]]
  })");

  auto r = run({"wo", "trichotomy", a3.string(), b2.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "case: pred-of-first"));
  CHECK(has_line(r.out, "cut: a2"));
  CHECK(has_line(r.out, "map: a0 -> b0"));
  CHECK(has_line(r.out, "map: a1 -> b1"));

  r = run({"wo", "trichotomy", b2.string(), a3.string()});
  CHECK(has_line(r.out, "case: pred-of-second"));
  CHECK(has_line(r.out, "cut: a2"));

  r = run({"--json", "wo", "trichotomy", a3.string(), a3.string()});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == "iso");
  CHECK(j["map"].size() == 3);
  CHECK(j["map"][0][0] == "a0");
  CHECK(j["map"][0][1] == "a0");

  auto bad = write_file("setkit_t_bad.json", "{ not json");
  CHECK(run({"wo", "trichotomy", bad.string(), b2.string()}).code == 2);

  auto cyc = write_file("setkit_t_cyc.json", R"({
    "elements": ["x", "y"],
    "leq": [["x","y"], ["y","x"]]
  })");
  r = run({"wo", "trichotomy", cyc.string(), b2.string()});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);

  CHECK(run({"wo", "trichotomy", "/nonexistent.json", b2.string()}).code == 2);
}

TEST_CASE("poset check") {
  auto good = write_file("setkit_t_diamond.json", R"({
    "elements": ["bot", "l", "r", "top"],
    "pairs": [["bot","l"], ["bot","r"], ["l","top"], ["r","top"]],
    "close": true
  })");
  auto r = run({"poset", "check", good.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "elements: 4"));
  CHECK(has_line(r.out, "partial: true"));
  CHECK(has_line(r.out, "total: false"));

  auto raw = write_file("setkit_t_raw.json", R"({
    "elements": ["x", "y", "z"],
    "pairs": [["x","y"], ["y","z"]]
  })");
  r = run({"poset", "check", raw.string()});
  CHECK(r.code == 1);  // not reflexive, not transitive as given
  CHECK(has_line(r.out, "partial: false"));
  CHECK(r.out.find("partial_witness: ") != std::string::npos);

  auto extra = write_file("setkit_t_extra.json", R"({
    "elements": ["x"], "pairs": [], "bogus": 1
  })");
  CHECK(run({"poset", "check", extra.string()}).code == 2);
}

TEST_CASE("poset dense") {
  auto f = write_file("setkit_t_anti.json", R"({
    "elements": ["a0", "a1"],
    "pairs": [],
    "close": true,
    "sets": {"d": ["a0", "a1"], "x": ["a0"]}
  })");
  auto r = run({"poset", "dense", f.string(), "--set", "d"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "dense: true"));

  r = run({"poset", "dense", f.string(), "--set", "x"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "dense: false"));
  CHECK(has_line(r.out, "witness: a1"));

  CHECK(run({"poset", "dense", f.string(), "--set", "nope"}).code == 2);
}

TEST_CASE("poset generic on the binary conditions") {
  auto r = run({"poset", "generic", "--poset", "k", "--dense", "d0,d1,e:01"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "poset: k"));
  CHECK(has_line(r.out, "f: {0:0, 1:0}"));
  CHECK(r.out.find("filter_size: ") != std::string::npos);
  CHECK(r.out.find("met: d0 => ") != std::string::npos);

  r = run({"--json", "poset", "generic", "--poset", "k", "--dense", "d0,e:1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["poset"] == "k");
  CHECK(j["chain"].size() >= 2);
  CHECK(j["met"].size() == 2);

  r = run({"poset", "generic", "--poset", "k", "--dense", "d0", "--fuel", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("limit: ", 0) == 0);

  CHECK(run({"poset", "generic", "--poset", "k", "--dense", "q9"}).code == 2);
  CHECK(run({"poset", "generic", "--poset", "k", "--dense", "e:02"}).code == 2);
  CHECK(run({"poset", "generic", "--poset", "k", "--dense", "d0,,d1"}).code == 2);
}

TEST_CASE("poset generic on a file poset") {
  auto f = write_file("setkit_t_anti2.json", R"({
    "elements": ["a0", "a1"],
    "pairs": [],
    "close": true,
    "sets": {"d": ["a0", "a1"], "x": ["a0"]}
  })");
  auto r = run({"poset", "generic", "--poset", f.string(), "--dense", "d"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "chain: a0"));
  CHECK(has_line(r.out, "filter: a0"));

  r = run({"poset", "generic", "--poset", f.string(), "--dense", "x"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "violation: set x is not dense"));
}

TEST_CASE("poset ro and stone") {
  auto diamond = write_file("setkit_t_diamond2.json", R"({
    "elements": ["bot", "l", "r", "top"],
    "pairs": [["bot","l"], ["bot","r"], ["l","top"], ["r","top"]],
    "close": true
  })");
  auto r = run({"poset", "ro", diamond.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "carrier: 2"));
  CHECK(has_line(r.out, "atoms: 1"));
  CHECK(has_line(r.out, "laws: true"));
  CHECK(has_line(r.out, "complete: true"));

  r = run({"poset", "ro", diamond.string(), "--dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph ro {", 0) == 0);

  auto anti = write_file("setkit_t_anti3.json", R"({
    "elements": ["a0", "a1"], "pairs": [], "close": true
  })");
  r = run({"poset", "ro", anti.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "carrier: 4"));
  CHECK(has_line(r.out, "embed: a0 -> {a0}"));

  r = run({"--json", "poset", "stone", anti.string()});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["points"] == 2);
  CHECK(j["disjointness"] == true);
  CHECK(j["meets_map"] == true);

  r = run({"poset", "stone", anti.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "points: 2"));

  std::string els = "[";
  for (int i = 0; i < 13; ++i) {
    if (i) els += ", ";
    els += "\"e" + std::to_string(i) + "\"";
  }
  els += "]";
  auto big = write_file("setkit_t_big.json",
                        "{ \"elements\": " + els + ", \"pairs\": [], \"close\": true }");
  r = run({"poset", "ro", big.string()});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("limit: ", 0) == 0);
}

TEST_CASE("ad family") {
  auto r = run({"ad", "family", "--name", "triangular", "--below", "16"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "set: N0"));
  CHECK(has_line(r.out, "members: 0 1 3 6 10 15"));
  CHECK(has_line(r.out, "count: 6"));

  r = run({"ad", "family", "--name", "triangular", "-i", "2", "--below", "13"});
  CHECK(has_line(r.out, "set: N2"));
  CHECK(has_line(r.out, "members: 2 3 5 8 12"));

  r = run({"--json", "ad", "family", "--name", "evens", "--below", "10"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["members"] == nlohmann::json({0, 2, 4, 6, 8}));

  CHECK(run({"ad", "family", "--name", "bogus"}).code == 2);
}

TEST_CASE("ad check and diagonalize") {
  auto r = run({"ad", "check", "--x", "evens", "--y", "odds", "--below", "100"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "intersection: 0"));
  CHECK(has_line(r.out, "ad_at_bound: true"));

  r = run({"ad", "check", "--x", "evens", "--y", "evens", "--below", "100"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "intersection: 50"));

  CHECK(run({"ad", "check", "--x", "N2000", "--y", "odds"}).code == 2);

  r = run({"ad", "diagonalize", "--count", "3", "--below", "200"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "points: 0 2 5"));

  r = run({"ad", "diagonalize", "--count", "2", "--below", "1"});
  CHECK(r.code == 3);

  CHECK(run({"ad", "diagonalize", "--family", "bogus"}).code == 2);
}

TEST_CASE("ad generic") {
  auto r = run({"ad", "generic", "--dense", "dx:N0,eyn:omega:3", "--universe", "8"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "universe: 8"));
  CHECK(has_line(r.out, "d: 4"));
  CHECK(has_line(r.out, "chain: <{4}, {N0}>"));

  r = run({"--json", "ad", "generic", "--dense", "dx:N0,eyn:omega:3", "--universe", "8"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == nlohmann::json({4}));
  CHECK(j["met"].size() == 2);

  CHECK(run({"ad", "generic", "--dense", "zz:N0"}).code == 2);
  CHECK(run({"ad", "generic", "--dense", "eyn:omega"}).code == 2);
  CHECK(run({"ad", "generic", "--dense", "dx:"}).code == 2);
}
