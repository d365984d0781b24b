#include <algorithm>

#include "doctest.h"
#include "qqengine/partitions.hpp"
#include "qqengine/symfun.hpp"
#include "qqengine/vertex_networks.hpp"
#include "test_util.hpp"

using namespace qq;
using qqtest::rat;

namespace {

NetworkConfig config(int r, Direction d, int capQ, int capA, int capB, const ParamPoint& p) {
  return NetworkConfig{r, d, capQ, capA, std::vector<int>(r - 1, capB), p};
}

}  // namespace

TEST_SUITE("vertex-networks") {
  TEST_CASE("refined vertex examples") {
    auto p = qqtest::point();
    CHECK(refinedVertex(Partition(), Partition(), Partition(), p.qHalf, p.tHalf) == 1);
    CHECK(refinedVertex(Partition(), Partition(), Partition({1}), p.qHalf, p.tHalf) == p.tHalf / (1 - p.q()));
  }

  TEST_CASE("unrefined limit is cyclic") {
    const Rational x = rat(2, 5);
    auto parts = enumerateUpTo(3);
    for (auto& a : parts)
      for (auto& b : parts)
        for (auto& c : parts) {
          if (a.size() + b.size() + c.size() > 4) continue;
          const Rational v = refinedVertex(a, b, c, x, x);
          CHECK(v == refinedVertex(b, c, a, x, x));
        }
  }

  TEST_CASE("windows") {
    auto p = qqtest::point();
    auto cfg = config(3, Direction::Horizontal, 2, 3, 1, p);
    auto w = zrWindows(cfg);
    REQUIRE(w.size() == 4);
    CHECK(w[0] == VarWindow{"Q", 0, 2});
    CHECK(w[1] == VarWindow{"A", 0, 3});
    CHECK(w[3] == VarWindow{"B2", 0, 1});
  }

  TEST_CASE("validation") {
    auto p = qqtest::point();
    auto bad = config(2, Direction::Horizontal, 2, 2, 1, p);
    bad.capB.clear();
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    auto neg = config(1, Direction::Horizontal, -1, 2, 1, p);
    CHECK_THROWS_AS(validate(neg), std::invalid_argument);
    auto big = config(2, Direction::Horizontal, 6, 6, 6, p.withBound(10));
    CHECK_THROWS_AS(validate(big), GenericityError);
    CHECK(requiredGenericity(config(1, Direction::Horizontal, 0, 0, 0, p)) >= 1);
  }

  TEST_CASE("four-point functions at empty legs") {
    auto p = qqtest::point();
    auto c0 = config(1, Direction::Horizontal, 0, 0, 0, p);
    CHECK(fourPointH(Partition(), Partition(), c0) == MultiSeries::constant(qaWindows(0, 0), 1));
    c0.direction = Direction::Vertical;
    CHECK(fourPointV(Partition(), Partition(), c0) == MultiSeries::constant(qaWindows(0, 0), 1));
    auto c1 = config(1, Direction::Horizontal, 1, 1, 0, p);
    auto f = fourPointH(Partition(), Partition(), c1);
    const Partition box({1});
    CHECK(f.coeff({0, 1}) == refinedVertex(box, Partition(), Partition(), p.qHalf, 1 / p.tHalf) *
                                 refinedVertex(box, Partition(), Partition(), 1 / p.tHalf, p.qHalf));
  }

  TEST_CASE("eq. 3.13 equals the gauged skew form") {
    auto p = qqtest::point();
    for (auto& n1 : enumerateUpTo(2))
      for (auto& n2 : enumerateUpTo(2))
        for (auto& lam : enumerateUpTo(2)) {
          auto skew = fourPointHSkewFixed(n1, n2, lam, p, 3);
          skew *= legGauge(n1, n2, p);
          CHECK(fourPointHFixed(n1, n2, lam, p, 3) == skew);
        }
  }

  TEST_CASE("printed vertical prefactor disagrees") {
    auto p = qqtest::point();
    auto cfg = config(1, Direction::Vertical, 2, 2, 0, p);
    const Partition box({1}), two({2});
    CHECK_FALSE(fourPointV(box, two, cfg, true) == fourPointV(box, two, cfg, false));
  }

  TEST_CASE("fixed legs sum to the full function") {
    auto p = qqtest::point();
    for (int r = 1; r <= 2; ++r) {
      auto cfg = config(r, Direction::Horizontal, 2, 2, 2, p);
      auto Z = zrFull(cfg);
      MultiSeries sum(Z.vars());
      for (int n = 0; n <= 2; ++n)
        for (auto& t : tuples(r, n)) {
          const MultiSeries fixed = zrFixedLegs(t, cfg);
          for (auto& [e, c] : fixed.terms()) {
            MultiSeries::Exp full{n};
            full.insert(full.end(), e.begin(), e.end());
            sum.addTerm(full, c);
          }
        }
      CHECK(sum == Z);
      auto empty = zrFixedLegs(PartitionTuple(r), config(r, Direction::Horizontal, 0, 0, 0, p));
      CHECK(empty.constantTerm() == 1);
      CHECK(empty.terms().size() == 1);
    }
    CHECK_THROWS(zrFixedLegs({Partition()}, config(2, Direction::Horizontal, 1, 1, 1, p)));
  }

  TEST_CASE("normalization") {
    auto p = qqtest::point();
    for (int r = 1; r <= 2; ++r) {
      auto N = normalizedZr(config(r, Direction::Horizontal, 2, 2, 1, p));
      CHECK(N.constantTerm() == 1);
      // the Q^0 slice is exactly 1
      for (auto& [e, c] : N.terms())
        if (e[0] == 0) CHECK((c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })));
    }
  }

  TEST_CASE("filtration consistency in A") {
    auto p = qqtest::point();
    auto lo = zrFull(config(2, Direction::Horizontal, 2, 2, 1, p));
    auto hi = zrFull(config(2, Direction::Horizontal, 2, 3, 1, p));
    CHECK(hi.rewindow(lo.vars()) == lo);
    bool newOrder = false;
    for (auto& [e, c] : hi.terms())
      if (e[1] == 3) newOrder = true;
    CHECK(newOrder);
  }

  TEST_CASE("horizontal and vertical assemblies agree") {
    for (std::uint64_t seed : {3u, 5u}) {
      for (int r = 1; r <= 2; ++r) {
        auto p = randomParamPoint(seed, r, 40);
        auto h = zrFull(config(r, Direction::Horizontal, 2, 2, 2, p));
        auto v = zrFull(config(r, Direction::Vertical, 2, 2, 2, p));
        CHECK(h == v);
      }
    }
  }
}
