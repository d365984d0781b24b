#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qqengine/exact_series.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QQ_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

qq::Rational coeff(const nlohmann::ordered_json& t) {
  return qq::ratFromString(t["num"].get<std::string>() + "/" + t["den"].get<std::string>());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("zr normalized constant term and direction independence") {
    auto h = run("zr --r 1 --cap-q 2 --cap-a 2 --seed 7 --direction h");
    auto v = run("zr --r 1 --cap-q 2 --cap-a 2 --seed 7 --direction v");
    REQUIRE(h.code == 0);
    REQUIRE(v.code == 0);
    auto jh = nlohmann::ordered_json::parse(h.out), jv = nlohmann::ordered_json::parse(v.out);
    auto norm = jh["results"][0]["normalized"];
    CHECK(norm["vars"] == nlohmann::ordered_json({"Q", "A"}));
    CHECK(norm["terms"][0]["exp"] == nlohmann::ordered_json({0, 0}));
    CHECK(norm["terms"][0]["num"] == "1");
    CHECK(norm["terms"][0]["den"] == "1");
    CHECK(norm == jv["results"][0]["normalized"]);
    CHECK(jh.contains("conventions"));
    CHECK(jh["seeds"] == nlohmann::ordered_json({7}));
  }

  TEST_CASE("byte-identical output") {
    auto a = run("zr --r 2 --cap-q 1 --cap-a 1 --cap-b 1 --seeds 1,2");
    auto b = run("zr --r 2 --cap-q 1 --cap-a 1 --cap-b 1 --seeds 1,2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run("verify oracle-trace --seeds 4");
    auto d = run("verify oracle-trace --seeds 4");
    CHECK(c.out == d.out);
  }

  TEST_CASE("csv format") {
    auto r = run("zr --r 1 --cap-q 1 --cap-a 1 --seed 7 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("Q,A,num,den\n0,0,1,1\n", 0) == 0);
    auto multi = run("zr --r 1 --cap-q 1 --cap-a 1 --seeds 1,2 --format csv");
    CHECK(multi.out.rfind("seed,Q,A,num,den\n", 0) == 0);
  }

  TEST_CASE("chiy m = 1 column") {
    auto r = run("chiy --r 1 --cap-q 2 --cap-m 4 --seed 1");
    REQUIRE(r.code == 0);
    auto terms = nlohmann::ordered_json::parse(r.out)["results"][0]["genus"]["terms"];
    // Σ_m coefficients at fixed Q: 1, 1, 2
    std::array<qq::Rational, 3> sums;
    for (auto& t : terms) sums[t["exp"][0].get<int>()] += coeff(t);
    CHECK(sums[0] == 1);
    CHECK(sums[1] == 1);
    CHECK(sums[2] == 2);
    auto r2 = run("chiy --r 2 --cap-q 1 --cap-m 4 --seed 1");
    qq::Rational s = 0;
    const auto j2 = nlohmann::ordered_json::parse(r2.out);
    for (auto& t : j2["results"][0]["genus"]["terms"])
      if (t["exp"][0] == 1) s += coeff(t);
    CHECK(s == 2);
  }

  TEST_CASE("verify examples") {
    CHECK(run("verify thm-3-5 --r 1 --cap-a 3 --seeds 3,5,11").code == 0);
    CHECK(run("verify oracle-contraction").code == 0);
    CHECK(run("verify prop-3-4 --r 2 --cap-q 2 --cap-m 3").code == 0);
    auto rep = nlohmann::ordered_json::parse(run("verify identity-3-16 --seeds 3,5,11").out);
    CHECK(rep["passed"] == true);
    CHECK(rep["firstMismatch"].is_null());
    CHECK(rep["seeds"].size() == 3);
    CHECK(rep["window"].contains("partitionSize"));
    CHECK(rep["conventions"]["cellIndexBase"] == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(run("zr --r 0").code == 2);
    CHECK(run("zr --cap-q -1").code == 2);
    CHECK(run("zr --direction x").code == 2);
    CHECK(run("zr --format xml").code == 2);
    CHECK(run("verify nonsense").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("zr --genericity-bound 3").code == 3);
    CHECK(run("verify thm-3-5 --genericity-bound 5").code == 3);
    CHECK(run("--help").code == 0);
  }
}
