#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolsemi/report.hpp"
#include "cli.hpp"
#include "doctest.h"

using boolsemi::Json;

namespace {

const std::string kData = BOOLSEMI_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = boolsemi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto o = run(std::move(args));
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

const Json& claim(const Json& report, const std::string& id) {
  for (const auto& c : report["claims"]) {
    if (c["id"] == id) return c;
  }
  FAIL("no claim " << id);
  static Json none;
  return none;
}

}  // namespace

TEST_CASE("sha256 digests") {
  CHECK(boolsemi::cli::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(boolsemi::cli::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cli check") {
  const auto j = run_json({"check", "--free-atoms", "2"});
  CHECK(j["version"] == "0.1.0");
  CHECK(j["seed"] == boolsemi::kDefaultSeed);
  for (const char* id : {"semiring_laws", "zerosumfree", "simple", "commutative",
                         "multiplicatively_absorbing"}) {
    CHECK(claim(j, id)["verdict"] == "confirmed");
  }
  const auto& entire = claim(j, "entire");
  CHECK(entire["verdict"] == "refuted-with-witness");
  CHECK(entire["witness"].size() == 2);

  const auto z = run_json({"check", "--table", kData + "/z3.json"});
  CHECK(claim(z, "semiring_laws")["verdict"] == "confirmed");
  CHECK(z["inputs"][0]["sha256"].get<std::string>().size() == 64);

  const auto big = run({"check", "--free-atoms", "9"});
  CHECK(big.code == 2);
  CHECK(big.err.find("limit") != std::string::npos);
  CHECK(run({"check", "--table", kData + "/missing.json"}).code == 2);
  CHECK(run({"check", "--free-atoms", "1", "--table", kData + "/z3.json"}).code == 2);
  CHECK(run({"check"}).code == 2);
}

TEST_CASE("cli output is deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"check", "--free-atoms", "3"},
        std::vector<std::string>{"order", "--free-atoms", "3"},
        std::vector<std::string>{"diff", "--table", kData + "/z5.json"}}) {
    CHECK(run(args).out == run(args).out);
  }
  const auto a = run_json({"--seed", "7", "order", "--free-atoms", "3"});
  CHECK(a["seed"] == 7);
  bool sampled = false;
  for (const auto& r : a["reports"]) {
    if (r.contains("note") && r["note"].get<std::string>().find("seed 7") != std::string::npos) {
      sampled = true;
    }
  }
  CHECK(sampled);
}

TEST_CASE("cli order") {
  const auto j = run_json({"order", "--free-atoms", "2"});
  for (const char* id : {"partial_order", "monotony_add", "monotony_mul", "lemma_bounds",
                         "decomposition", "pairwise_monotony", "positive_cone_is_carrier"}) {
    CHECK(claim(j, id)["verdict"] == "confirmed");
  }
  const auto& neg = claim(j, "negative_cone_empty");
  CHECK(neg["verdict"] == "refuted-with-witness");
  CHECK(neg["witness"] == Json::array({"⊥"}));

  const auto s = run_json({"order", "--free-atoms", "1", "--sub", "a"});
  CHECK(s["reports"].back()["property"] == "subalgebra_equals_parent");
  CHECK(s["reports"].back()["verdict"] == "holds");

  CHECK(run({"order", "--table", kData + "/z3.json"}).code == 2);
  const auto d = run_json({"order", "--table", kData + "/z3.json", "--order-matrix",
                           kData + "/discrete3.json"});
  CHECK(d["result"]["order_source"] == "matrix");
  CHECK(claim(d, "partial_order")["verdict"] == "confirmed");
}

TEST_CASE("cli hom") {
  std::ostringstream out, err;
  REQUIRE(boolsemi::cli::run({"hom", "enumerate", "--src", "free:1", "--dst", "free:0", "--kind",
                              "bpa"},
                             out, err) == 0);
  std::istringstream lines(out.str());
  std::vector<Json> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(Json::parse(line));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["map"]["a"] == "⊥");
  CHECK(rows[1]["map"]["a"] == "⊤");
  CHECK(rows[2]["result"]["count"] == 2);

  const auto c = run_json({"hom", "check", "--psi", kData + "/eval_top.json"});
  CHECK(c["reports"][0]["verdict"] == "holds");
  CHECK(c["result"]["kernel"] == Json::parse(R"([["⊥","!a"],["a","⊤"]])"));

  const auto f = run_json({"hom", "factor", "--psi1", kData + "/eval_top.json", "--psi2",
                           kData + "/eval_bot.json"});
  CHECK(f["result"]["message"] == "no factorization: kernels incomparable");
  const auto g = run_json({"hom", "factor", "--psi1", kData + "/eval_top.json", "--psi2",
                           kData + "/eval_top.json"});
  CHECK(g["result"]["factor"]["map"]["⊤"] == "⊤");
  CHECK(claim(g, "factorization")["verdict"] == "confirmed");

  const auto i = run_json({"hom", "iso-theorem", "--src", "free:1", "--dst", "free:0", "--mode",
                           "monotone"});
  CHECK(claim(i, "onto_order_preserving_iff_isomorphism")["verdict"] == "refuted-with-witness");
  bool eval_top = false;
  for (const auto& ce : i["result"]["counterexamples"]) {
    if (ce["map"]["a"] == "⊤" && ce["map"]["!a"] == "⊥") eval_top = true;
  }
  CHECK(eval_top);
  const auto e = run_json({"hom", "iso-theorem", "--src", "free:1", "--dst", "free:1"});
  CHECK(claim(e, "onto_order_preserving_iff_isomorphism")["verdict"] == "confirmed");

  CHECK(run({"hom", "enumerate", "--src", "free:9", "--dst", "free:0"}).code == 2);
  CHECK(run({"hom", "check", "--psi", kData + "/bad_map.json"}).code == 2);
}

TEST_CASE("cli diff") {
  const auto tmp = std::filesystem::temp_directory_path() / "boolsemi_cli_diff.json";
  const auto z = run_json({"diff", "--table", kData + "/z3.json", "--emit", tmp.string()});
  CHECK(claim(z, "difference_cancellation")["verdict"] == "confirmed");
  CHECK(z["result"]["difference"]["classes"] == 3);
  const auto back = run_json({"check", "--table", tmp.string()});
  CHECK(claim(back, "semiring_laws")["verdict"] == "confirmed");
  std::filesystem::remove(tmp);

  const auto f = run_json({"diff", "--free-atoms", "1"});
  CHECK(f["result"]["subtrahends"]["members"] == Json::array({"⊤"}));
  CHECK(f["result"]["difference"]["isomorphic_to_parent"] == true);
  CHECK(claim(f, "difference_cancellation")["verdict"] == "out-of-hypothesis");

  const auto u = run_json({"diff", "--free-atoms", "1", "--universal"});
  CHECK(u["reports"][1]["quantifier"] == "universal");
  CHECK(run({"diff", "--free-atoms", "1", "--subtrahends", "a"}).code == 2);
}

TEST_CASE("cli parse") {
  const auto a = run_json({"parse", "a & !a", "--atoms", "a"});
  CHECK(a["result"]["element"] == "⊥");
  CHECK(a["result"]["truth_table"] == "00");
  const auto one = run_json({"parse", "1", "--atoms", "a,b"});
  CHECK(one["result"]["element"] == "⊤");
  CHECK(one["result"]["truth_table"] == "1111");
  CHECK(run_json({"parse", "a -> b", "--atoms", "a,b"})["result"]["id"] ==
        run_json({"parse", "!a | b", "--atoms", "a,b"})["result"]["id"]);
  const auto bad = run({"parse", "a & & b"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("byte 4") != std::string::npos);
  CHECK(run({"parse", "c", "--atoms", "a"}).code == 2);
}
