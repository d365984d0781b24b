#include "qqengine/instanton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qqengine/parallel.hpp"
#include "qqengine/vertex_networks.hpp"

namespace qq {

int TangentChar::count() const {
  int n = 0;
  for (auto& w : weights) n += w.mult;
  return n;
}

TangentChar tangentCharacter(const PartitionTuple& lams) {
  TangentChar T;
  const int r = static_cast<int>(lams.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Partition& L = lams[i];
      const Partition& M = lams[j];
      const Partition Lt = conjugate(L), Mt = conjugate(M);
      for (auto& c : L.cells()) {
        int a = L.part(c.row) - c.col - 1;
        int l = Mt.part(c.col) - c.row - 1;
        T.weights.push_back({1, -l, a + 1, i, j});
      }
      for (auto& c : M.cells()) {
        int a = M.part(c.row) - c.col - 1;
        int l = Lt.part(c.col) - c.row - 1;
        T.weights.push_back({1, l + 1, -a, i, j});
      }
    }
  return T;
}

Rational evalWeight(const TangentWeight& w, const ParamPoint& p) {
  Rational v = pw(p.qHalf, 2L * w.eq) * pw(p.tHalf, 2L * w.et);
  if (w.i != w.j) v *= p.framing.at(w.j) / p.framing.at(w.i);
  return v;
}

bool symplecticPairing(const TangentChar& T) {
  std::map<std::tuple<int, int, int, int>, int> a, b;
  for (auto& w : T.weights) {
    a[{w.eq, w.et, w.i, w.j}] += w.mult;
    b[{1 - w.eq, 1 - w.et, w.j, w.i}] += w.mult;
  }
  return a == b;
}

nlohmann::ordered_json toJson(const TangentChar& T) {
  auto arr = nlohmann::ordered_json::array();
  for (auto& w : T.weights) arr.push_back({{"mult", w.mult}, {"q", w.eq}, {"t", w.et}, {"i", w.i}, {"j", w.j}});
  return arr;
}

MultiSeries chiYRatio(const PartitionTuple& lams, const ParamPoint& p, int capM) {
  const std::vector<VarWindow> vars{{"m", 0, capM}};
  MultiSeries s = MultiSeries::constant(vars, 1);
  Rational scalar = 1;
  for (auto& w : tangentCharacter(lams).weights) {
    Rational v = evalWeight(w, p);
    if (v == 1) throw GenericityError("tangent weight equals 1");
    for (int k = 0; k < w.mult; ++k) {
      MultiSeries f = MultiSeries::constant(vars, 1);
      f.addTerm({1}, -1 / v);
      s = s * f;
      scalar /= (1 - 1 / v);
    }
  }
  s *= scalar;
  return s;
}

Rational chiYRatioAt(const PartitionTuple& lams, const ParamPoint& p, const Rational& m) {
  Rational out = 1;
  for (auto& w : tangentCharacter(lams).weights) {
    Rational v = evalWeight(w, p);
    if (v == 1) throw GenericityError("tangent weight equals 1");
    out *= pw((1 - m / v) / (1 - 1 / v), w.mult);
  }
  return out;
}

MultiSeries chiYGenus(int r, int capQ, int capM, const ParamPoint& p) {
  if (r < 1 || capQ < 0 || capM < 0) throw std::invalid_argument("chiYGenus: bad configuration");
  const std::vector<VarWindow> vars{{"Q", 0, capQ}, {"m", 0, capM}};
  std::vector<PartitionTuple> fps;
  for (int n = 0; n <= capQ; ++n)
    for (auto& t : tuples(r, n)) fps.push_back(t);
  auto parts = parallelMap(fps.size(), [&](size_t k) { return chiYRatio(fps[k], p, capM); });
  MultiSeries out(vars);
  for (size_t k = 0; k < fps.size(); ++k)
    for (auto& [e, c] : parts[k].terms()) out.addTerm({tupleSize(fps[k]), e[0]}, c);
  return out;
}

MultiSeries qqCharacterAt(int r, int capQ, const ParamPoint& p, const Rational& m, const Insertion& f) {
  MultiSeries out(std::vector<VarWindow>{{"Q", 0, capQ}});
  for (int n = 0; n <= capQ; ++n)
    for (auto& t : tuples(r, n)) out.addTerm({n}, chiYRatioAt(t, p, m) * f(t));
  return out;
}

Rational psiEigenvalue(const Partition& lam, const Rational& uHalf, const ParamPoint& p) {
  // (1 - ħ^{-1})·u·χ_λ as monomials u q^i t^j with multiplicity
  std::map<std::pair<int, int>, int> cls;
  for (auto& c : lam.cells()) {
    cls[{c.row, c.col}] += 1;
    cls[{c.row - 1, c.col - 1}] -= 1;
  }
  Rational out = 1;
  for (auto& [ij, mult] : cls) {
    if (mult == 0) continue;
    Rational half = uHalf * pw(p.qHalf, ij.first) * pw(p.tHalf, ij.second);
    Rational w = half * half;
    if (w == 1) throw GenericityError("psiEigenvalue: vanishing 1 - w");
    // Ŝ(w) = w^{1/2}/(1 - w)
    out *= pw(half / (1 - w), mult);
  }
  return out;
}

MultiSeries qCharacterTrace(int capQ, const Rational& uHalf, const ParamPoint& p) {
  MultiSeries out(std::vector<VarWindow>{{"Q", 0, capQ}});
  for (auto& lam : enumerateUpTo(capQ)) out.addTerm({lam.size()}, psiEigenvalue(lam, uHalf, p));
  return out;
}

namespace {
MultiSeries localizationTerm(const PartitionTuple& lams, const ParamPoint& p, const std::vector<VarWindow>& vars) {
  const int nv = static_cast<int>(vars.size());
  const Rational k = -1 / p.sqrtQT();
  const MultiSeries::Exp zero(nv, 0);
  const int n = tupleSize(lams);
  MultiSeries::Exp eq(nv, 0);
  eq[0] = n;
  MultiSeries s = MultiSeries::monomial(vars, eq, pw(k, n));
  auto binom = [&](const MultiSeries::Exp& e, const Rational& c) {
    MultiSeries f = MultiSeries::constant(vars, 1);
    f.addTerm(e, -c);
    return f;
  };
  for (auto& w : tangentCharacter(lams).weights) {
    const Rational base = pw(p.qHalf, 2L * w.eq) * pw(p.tHalf, 2L * w.et);
    if (w.i == w.j) {
      if (base == 1) throw GenericityError("tangent weight equals 1");
      // (1 - A/(k w)) / (1 - 1/w)
      MultiSeries::Exp ea(nv, 0);
      ea[1] = 1;
      s = s * binom(ea, 1 / (k * base));
      s *= 1 / (1 - 1 / base);
      continue;
    }
    const int lo = std::min(w.i, w.j), hi = std::max(w.i, w.j);
    MultiSeries::Exp eu(nv, 0);
    eu[1] = hi - lo;
    for (int l = lo; l < hi; ++l) eu[2 + l] += 1;
    if (w.j > w.i) {
      // w = base·U, factor m^{-1}(1 - m/w)/(1 - 1/w) = (1 - w/m)/(1 - w)
      MultiSeries::Exp em = eu;
      em[1] -= 1;
      s = s * binom(em, base * k) * seriesInvert(binom(eu, base));
    } else {
      // w = base/U, factor (1 - mU/base)/(1 - U/base)
      MultiSeries::Exp em = eu;
      em[1] += 1;
      s = s * binom(em, 1 / (base * k)) * seriesInvert(binom(eu, 1 / base));
    }
  }
  return s;
}
}  // namespace

MultiSeries localizationZr(int r, const ParamPoint& p, int capQ, int capA, const std::vector<int>& capB) {
  if (static_cast<int>(capB.size()) != r - 1) throw std::invalid_argument("localizationZr: need r-1 B caps");
  NetworkConfig shape{r, Direction::Horizontal, capQ, capA, capB, p};
  auto vars = zrWindows(shape);
  std::vector<PartitionTuple> fps;
  for (int n = 0; n <= capQ; ++n)
    for (auto& t : tuples(r, n)) fps.push_back(t);
  auto parts = parallelMap(fps.size(), [&](size_t k) { return localizationTerm(fps[k], p, vars); });
  MultiSeries out(vars);
  for (auto& s : parts) out += s;
  return out;
}

MultiSeries genusToNetwork(const MultiSeries& genus, const ParamPoint& p, int capQ, int capA) {
  // Q_χ = kQ and m = A/k with k = -1/√(qt): Q_χ^n m^j ↦ k^{n-j} Q^n A^j
  const Rational k = -1 / p.sqrtQT();
  MultiSeries out(qaWindows(capQ, capA));
  const int qi = genus.varIndex("Q"), mi = genus.varIndex("m");
  for (auto& [e, c] : genus.terms()) out.addTerm({e[qi], e[mi]}, c * pw(k, e[qi] - e[mi]));
  return out;
}

}  // namespace qq
