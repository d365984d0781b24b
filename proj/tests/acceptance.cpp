#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qqengine/fock_operators.hpp"
#include "qqengine/instanton.hpp"
#include "qqengine/partitions.hpp"
#include "qqengine/verify.hpp"

using namespace qq;

namespace {

const std::vector<std::uint64_t> kSeeds{3, 5, 11};

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> info;
};

void runSuite(Outcome& out, const std::string& id, VerifyOptions o) {
  o.seeds = kSeeds;
  const VerifyReport rep = runVerify(id, o);
  out.detail += (out.detail.empty() ? "" : "; ") + id + " r=" + std::to_string(o.r) + " checks=" +
                std::to_string(rep.checks);
  if (!rep.passed) {
    out.ok = false;
    if (rep.firstMismatch)
      out.detail += " first mismatch " + rep.firstMismatch->context + " at " + rep.firstMismatch->exponent + ": " +
                    rep.firstMismatch->lhs + " vs " + rep.firstMismatch->rhs;
  }
  for (auto& n : rep.notes)
    if (n.is_string()) out.info.push_back(id + ": " + n.get<std::string>());
}

VerifyOptions opts(int r, int capQ, int capA, int capB, int capM = -1) {
  VerifyOptions o;
  o.r = r;
  o.capQ = capQ;
  o.capA = capA;
  o.capB = capB;
  o.capM = capM;
  return o;
}

Outcome structural() {
  Outcome out;
  long checks = 0;
  auto expect = [&](bool cond, const std::string& what) {
    ++checks;
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = "failed: " + what;
    }
  };
  for (auto seed : kSeeds) {
    for (int r = 1; r <= 3; ++r) {
      const ParamPoint p = randomParamPoint(seed, r, 44);
      const int capQ = r == 3 ? 2 : 3;
      for (int n = 0; n <= capQ; ++n)
        for (auto& t : tuples(r, n)) {
          expect(chiYRatioAt(t, p, 1) == 1, "chiYRatio(m=1) = 1");
          const TangentChar T = tangentCharacter(t);
          expect(T.count() == 2 * r * n, "tangent count 2r|lambda|");
          expect(symplecticPairing(T), "symplectic pairing");
        }
      const auto g = chiYGenus(r, capQ, 2 * r * capQ, p);
      for (int n = 0; n <= capQ; ++n) {
        Rational s = 0;
        for (auto& [e, c] : g.terms())
          if (e[0] == n) s += c;
        expect(s == static_cast<long>(tuples(r, n).size()), "m=1 genus counts");
      }
      if (capQ >= 2) {
        Rational s2 = 0;
        for (auto& [e, c] : g.terms())
          if (e[0] == 2) s2 += c;
        expect(s2 == r * (r + 3) / 2, "Q^2 count r(r+3)/2");
      }
    }
    for (int r = 1; r <= 2; ++r) {
      const ParamPoint p = randomParamPoint(seed, r, 44);
      const std::vector<int> capB(r - 1, 2);
      for (int n = 0; n <= 2; ++n)
        for (auto& t : tuples(r, n)) {
          const MultiSeries rr = rrHDiagonal(t, p, 3, capB);
          for (auto& [e, c] : rr.terms()) expect(e[0] >= 0, "no negative A powers");
        }
    }
  }
  out.detail = (out.ok ? "" : out.detail + "; ") + "checks=" + std::to_string(checks);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 Thm 3.5 RR^H diagonal elements vs fixed-leg network (r<=2, |lambda|<=3, A-cap 4, B-cap 2)",
       [] {
         Outcome o;
         for (int r = 1; r <= 2; ++r) runSuite(o, "thm-3-5", opts(r, 3, 4, 2));
         return o;
       }},
      {"2 Prop 3.4 localization genus vs normalized network (r=1 Q-cap 3, r=2 Q-cap 2, m-cap 3)",
       [] {
         Outcome o;
         runSuite(o, "prop-3-4", opts(1, 3, 3, 0, 3));
         runSuite(o, "prop-3-4", opts(2, 2, 3, 2, 3));
         return o;
       }},
      {"3 Thm 3.17 rrVTrace vs Z_r and rrHTrace vs rrVTrace (r<=2, caps 3)",
       [] {
         Outcome o;
         for (int r = 1; r <= 2; ++r) runSuite(o, "thm-3-17", opts(r, 3, 3, 3));
         return o;
       }},
      {"4 Preferred-direction independence H vs V (r<=2, caps 3)",
       [] {
         Outcome o;
         for (int r = 1; r <= 2; ++r) runSuite(o, "pref-dir", opts(r, 3, 3, 3));
         return o;
       }},
      {"5 Lemma 3.9 / 3.10 matrix elements and principal closed forms",
       [] {
         Outcome o;
         runSuite(o, "lemma-3-9", opts(1, 2, 2, 2));
         runSuite(o, "lemma-3-10", opts(1, 2, 2, 2));
         return o;
       }},
      {"6 Identity 3.16 for |lambda|<=5 and convention calibration",
       [] {
         Outcome o;
         runSuite(o, "identity-3-16", opts(1, 2, 2, 2));
         runSuite(o, "calibration", opts(1, 2, 2, 2));
         return o;
       }},
      {"7 Oracle duality: contraction and graded trace (D<=5)",
       [] {
         Outcome o;
         runSuite(o, "oracle-contraction", opts(1, 2, 2, 2));
         runSuite(o, "oracle-trace", opts(1, 2, 2, 2));
         return o;
       }},
      {"8 Structural checks: chi_y(m=1)=1, genus counts, tangent count, symplectic pairing, no negative A",
       structural},
  };

  bool all = true;
  std::vector<std::string> info;
  for (auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.name << " [" << o.detail << "] (" << secs << " s)"
              << std::endl;
    for (auto& line : o.info)
      if (std::find(info.begin(), info.end(), line) == info.end()) info.push_back(line);
  }
  for (auto& line : info) std::cout << "INFO " << line << "\n";
  return all ? 0 : 1;
}
