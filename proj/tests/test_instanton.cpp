#include <set>

#include "doctest.h"
#include "qqengine/instanton.hpp"
#include "qqengine/partitions.hpp"
#include "qqengine/vertex_networks.hpp"
#include "test_util.hpp"

using namespace qq;
using qqtest::rat;

namespace {

std::vector<PartitionTuple> allTuples(int r, int maxSize) {
  std::vector<PartitionTuple> out;
  for (int n = 0; n <= maxSize; ++n)
    for (auto& t : tuples(r, n)) out.push_back(t);
  return out;
}

}  // namespace

TEST_SUITE("instanton") {
  TEST_CASE("tangent character basics") {
    CHECK(tangentCharacter({Partition(), Partition()}).weights.empty());
    auto T = tangentCharacter({Partition({1})});
    std::multiset<std::pair<int, int>> w;
    for (auto& x : T.weights) w.insert({x.eq, x.et});
    CHECK(w == std::multiset<std::pair<int, int>>{{0, 1}, {1, 0}});  // {t, q}
    for (int r = 1; r <= 2; ++r)
      for (auto& t : allTuples(r, 4)) {
        CHECK(tangentCharacter(t).count() == 2 * r * tupleSize(t));
        CHECK(symplecticPairing(tangentCharacter(t)));
      }
  }

  TEST_CASE("weights are never trivial at a generic point") {
    auto p = qqtest::point();
    for (auto& t : allTuples(2, 3))
      for (auto& w : tangentCharacter(t).weights) CHECK(evalWeight(w, p) != 1);
  }

  TEST_CASE("chi_y ratio") {
    auto p = qqtest::point();
    CHECK(chiYRatio({Partition()}, p, 3) == MultiSeries::constant({{"m", 0, 3}}, 1));
    for (int r = 1; r <= 2; ++r)
      for (auto& t : allTuples(r, 3)) {
        CHECK(chiYRatioAt(t, p, 1) == 1);
        // the series is a polynomial of degree 2r|λ⃗|; its coefficient sum is the m = 1 value
        const int deg = 2 * r * tupleSize(t);
        auto s = chiYRatio(t, p, deg);
        Rational sum = 0;
        for (auto& [e, c] : s.terms()) sum += c;
        CHECK(sum == 1);
        CHECK(s.coeff({deg}) != 0);
        const Rational m = rat(3, 7);
        Rational val = 0;
        for (auto& [e, c] : s.terms()) val += c * pw(m, e[0]);
        CHECK(val == chiYRatioAt(t, p, m));
      }
  }

  TEST_CASE("palindromic numerator") {
    // Π_w (1 - m/w) = Π_w (1 - m w/ħ) because T = ħ T^∨
    auto p = qqtest::point();
    const Rational hbar = p.q() * p.t(), m = rat(-5, 4);
    for (auto& t : allTuples(2, 3)) {
      Rational a = 1, b = 1;
      for (auto& w : tangentCharacter(t).weights) {
        const Rational v = evalWeight(w, p);
        a *= pw(1 - m / v, w.mult);
        b *= pw(1 - m * v / hbar, w.mult);
      }
      CHECK(a == b);
    }
  }

  TEST_CASE("genus at m = 1 counts fixed points") {
    auto p = qqtest::point();
    for (int r = 1; r <= 2; ++r) {
      const int capQ = 3;
      auto g = chiYGenus(r, capQ, 2 * r * capQ, p);
      for (int n = 0; n <= capQ; ++n) {
        Rational s = 0;
        for (auto& [e, c] : g.terms())
          if (e[0] == n) s += c;
        CHECK(s == static_cast<long>(tuples(r, n).size()));
      }
      CHECK(g.coeff({0, 0}) == 1);
    }
    // 1, r, r(r+3)/2
    CHECK(tuples(3, 2).size() == 9);
    CHECK(tuples(1, 2).size() == 2);
    CHECK_THROWS(chiYGenus(0, 1, 1, p));
  }

  TEST_CASE("psi eigenvalue") {
    auto p = qqtest::point();
    const Rational uh = rat(3, 11), u = uh * uh, hbar = p.q() * p.t();
    CHECK(psiEigenvalue(Partition(), uh, p) == 1);
    // (1 - ħ^{-1})u: monomials u and -u/ħ
    const Rational expected = (uh / (1 - u)) * ((1 - u / hbar) / (uh / p.sqrtQT()));
    CHECK(psiEigenvalue(Partition({1}), uh, p) == expected);
  }

  TEST_CASE("q-character trace") {
    auto p = qqtest::point();
    const Rational uh = rat(3, 11);
    CHECK(qCharacterTrace(0, uh, p) == MultiSeries::constant({{"Q", 0, 0}}, 1));
    auto tr = qCharacterTrace(3, uh, p);
    CHECK(tr.coeff({1}) == psiEigenvalue(Partition({1}), uh, p));
    // m = 1 qq-character with insertion ψ is the q-character
    auto qq = qqCharacterAt(1, 3, p, 1, [&](const PartitionTuple& t) { return psiEigenvalue(t[0], uh, p); });
    CHECK(qq == tr);
  }

  TEST_CASE("localization matches the network") {
    for (std::uint64_t seed : {3u, 5u}) {
      for (int r = 1; r <= 2; ++r) {
        auto p = randomParamPoint(seed, r, 40);
        NetworkConfig cfg{r, Direction::Horizontal, 2, 2, std::vector<int>(r - 1, 1), p};
        auto N = normalizedZr(cfg);
        CHECK(localizationZr(r, p, 2, 2, cfg.capB) == N);
        if (r == 1) CHECK(genusToNetwork(chiYGenus(1, 2, 2, p), p, 2, 2) == N);
      }
    }
  }

  TEST_CASE("tangent JSON") {
    auto j = toJson(tangentCharacter({Partition({1})}));
    CHECK(j.size() == 2);
    CHECK(j[0].contains("q"));
  }
}
