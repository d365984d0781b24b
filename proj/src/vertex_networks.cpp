#include "qqengine/vertex_networks.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qqengine/parallel.hpp"
#include "qqengine/symfun.hpp"

namespace qq {

int requiredGenericity(const NetworkConfig& cfg, int maxLegSize) {
  int s = cfg.capQ + cfg.capA + maxLegSize;
  for (int b : cfg.capB) s += b;
  return std::max(1, 4 * s);
}

void validate(const NetworkConfig& cfg, int maxLegSize) {
  if (cfg.r < 1) throw std::invalid_argument("rank must be at least 1");
  if (static_cast<int>(cfg.capB.size()) != cfg.r - 1) throw std::invalid_argument("need r-1 B caps");
  if (cfg.capQ < 0 || cfg.capA < 0) throw std::invalid_argument("caps must be non-negative");
  for (int b : cfg.capB)
    if (b < 0) throw std::invalid_argument("caps must be non-negative");
  int need = requiredGenericity(cfg, maxLegSize);
  if (cfg.params.genericityBound < need)
    throw GenericityError("genericity bound " + std::to_string(cfg.params.genericityBound) + " below required " +
                          std::to_string(need));
}

std::vector<VarWindow> qaWindows(int capQ, int capA) { return {{"Q", 0, capQ}, {"A", 0, capA}}; }

std::vector<VarWindow> abWindows(int capA, const std::vector<int>& capB) {
  std::vector<VarWindow> v{{"A", 0, capA}};
  for (size_t l = 0; l < capB.size(); ++l) v.push_back({"B" + std::to_string(l + 1), 0, capB[l]});
  return v;
}

std::vector<VarWindow> zrWindows(const NetworkConfig& cfg) {
  auto v = qaWindows(cfg.capQ, cfg.capA);
  for (int l = 0; l < cfg.r - 1; ++l) v.push_back({"B" + std::to_string(l + 1), 0, cfg.capB.at(l)});
  return v;
}

Rational refinedVertex(const Partition& lam, const Partition& mu, const Partition& nu, const Rational& xHalf,
                       const Rational& yHalf) {
  const Rational ratio = yHalf / xHalf;  // (y/x)^{1/2}
  Rational pre = pw(ratio, normSq(mu) + normSq(nu)) * pw(xHalf, kappa(mu)) * framingP(nu, xHalf, yHalf);
  const Partition lt = conjugate(lam);
  const int D = std::max({lam.size(), mu.size(), 1});
  auto a1 = principalAlphabet(xHalf, yHalf, nu, -1, 1, D);
  auto a2 = principalAlphabet(yHalf, xHalf, conjugate(nu), -1, 1, D);
  Rational tot = 0;
  for (int k = 0; k <= std::min(lt.size(), mu.size()); ++k)
    for (auto& eta : enumerate(k)) {
      if (!contains(eta, lt) || !contains(eta, mu)) continue;
      Rational s1 = skewSchur(lt, eta, a1);
      if (s1 == 0) continue;
      tot += pw(ratio, k + lam.size() - mu.size()) * s1 * skewSchur(mu, eta, a2);
    }
  return pre * tot;
}

MultiSeries fourPointHFixed(const Partition& nu1, const Partition& nu2t, const Partition& lam, const ParamPoint& p,
                            int capA) {
  MultiSeries out(std::vector<VarWindow>{{"A", 0, capA}});
  const Rational tiHalf = 1 / p.tHalf;
  const Partition lt = conjugate(lam);
  for (auto& mu : enumerateUpTo(capA)) {
    Rational v = refinedVertex(mu, nu1, lam, p.qHalf, tiHalf) * refinedVertex(conjugate(mu), nu2t, lt, tiHalf, p.qHalf);
    out.addTerm({mu.size()}, v);
  }
  return out;
}

namespace {
MultiSeries assembleQA(const NetworkConfig& cfg, const std::function<MultiSeries(const Partition&)>& perLam) {
  MultiSeries out(qaWindows(cfg.capQ, cfg.capA));
  auto lams = enumerateUpTo(cfg.capQ);
  auto parts = parallelMap(lams.size(), [&](size_t i) { return perLam(lams[i]); });
  for (size_t i = 0; i < lams.size(); ++i)
    for (auto& [e, c] : parts[i].terms()) out.addTerm({lams[i].size(), e[0]}, c);
  return out;
}
}  // namespace

MultiSeries fourPointH(const Partition& nu1, const Partition& nu2t, const NetworkConfig& cfg) {
  return assembleQA(cfg, [&](const Partition& lam) { return fourPointHFixed(nu1, nu2t, lam, cfg.params, cfg.capA); });
}

MultiSeries fourPointHSkewFixed(const Partition& nu1, const Partition& nu2t, const Partition& lam,
                                const ParamPoint& p, int capA) {
  const Rational sq = p.sqrtQT();
  const Partition nu2 = conjugate(nu2t), lt = conjugate(lam);
  const Rational pre =
      pw(sq, normSq(lt) - normSq(lam)) * framingP(lt, 1 / p.tHalf, p.qHalf) * framingP(lam, p.qHalf, 1 / p.tHalf);
  const int D = std::max({capA, nu1.size(), nu2.size(), 1});
  // x = q^{-ρ} t^λ, y = q^{-λ^t} t^ρ
  auto x = pPlusSpec(lam, p, 1, D);
  auto y = pMinusSpec(lam, p, 1, D);
  auto ySq = y.scaled(sq);
  auto xInvSq = x.scaled(1 / sq);
  MultiSeries out(std::vector<VarWindow>{{"A", 0, capA}});
  for (auto& mu : enumerateUpTo(capA)) {
    const Partition mt = conjugate(mu);
    for (auto& e1 : enumerateUpTo(std::min(mu.size(), nu1.size()))) {
      Rational a = skewSchur(mt, e1, x);
      if (a == 0) continue;
      a *= skewSchur(nu1, e1, ySq);
      if (a == 0) continue;
      for (auto& e2 : enumerateUpTo(std::min(mu.size(), nu2t.size()))) {
        Rational b = skewSchur(mu, e2, y);
        if (b == 0) continue;
        b *= skewSchur(nu2t, e2, xInvSq);
        // A^{|ν2|} s_{μ/η2}(A y) s_{ν2t/η2}(A^{-1} ...)
        int aexp = nu2.size() + (mu.size() - e2.size()) - (nu2t.size() - e2.size());
        out.addTerm({aexp}, pre * a * b);
      }
    }
  }
  return out;
}

MultiSeries fourPointHSkew(const Partition& nu1, const Partition& nu2t, const NetworkConfig& cfg) {
  return assembleQA(cfg,
                    [&](const Partition& lam) { return fourPointHSkewFixed(nu1, nu2t, lam, cfg.params, cfg.capA); });
}

Rational legGauge(const Partition& nu1, const Partition& nu2t, const ParamPoint& p) {
  // f(ν) = q^{-‖ν^t‖²/2} t^{-‖ν‖²/2}, g(ν') = 1/f(ν'^t)
  auto f = [&](const Partition& nu) -> Rational { return pw(p.qHalf, -normSq(conjugate(nu))) * pw(p.tHalf, -normSq(nu)); };
  return f(nu1) / f(conjugate(nu2t));
}

MultiSeries fourPointV(const Partition& nu1, const Partition& nu2t, const NetworkConfig& cfg, bool printedPrefactor) {
  const ParamPoint& p = cfg.params;
  const Rational sq = p.sqrtQT();
  const Partition nu2 = conjugate(nu2t);
  Rational pre = pw(sq, normSq(nu2t) - normSq(nu1)) * framingP(nu1, p.qHalf, 1 / p.tHalf);
  pre *= printedPrefactor ? framingP(nu2t, p.qHalf, 1 / p.tHalf) : framingP(nu2t, 1 / p.tHalf, p.qHalf);
  const int D = std::max({cfg.capQ, cfg.capA, 1}) + cfg.capQ;
  auto x1 = pPlusSpec(nu1, p, 1, D), y1 = pMinusSpec(nu1, p, 1, D);
  auto x2 = pPlusSpec(nu2, p, 1, D), y2 = pMinusSpec(nu2, p, 1, D);
  auto y1Sq = y1.scaled(sq), x2InvSq = x2.scaled(1 / sq);
  auto lams = enumerateUpTo(cfg.capQ);
  auto parts = parallelMap(lams.size(), [&](size_t i) {
    const Partition& lam = lams[i];
    const Partition lt = conjugate(lam);
    MultiSeries s(qaWindows(cfg.capQ, cfg.capA));
    for (auto& mu : enumerateUpTo(cfg.capA)) {
      const Partition mt = conjugate(mu);
      for (auto& e1 : enumerateUpTo(std::min(lam.size(), mu.size()))) {
        Rational a = skewSchur(lt, e1, x1);
        if (a == 0) continue;
        a *= skewSchur(mu, e1, y1Sq);
        if (a == 0) continue;
        for (auto& e2 : enumerateUpTo(std::min(lam.size(), mu.size()))) {
          Rational b = skewSchur(lam, e2, y2);
          if (b == 0) continue;
          b *= skewSchur(mt, e2, x2InvSq);
          // (QA)^{|λ|} s_{λ^t/η1}(A^{-1} ..) s_{μ/η1}(A ..)
          int aexp = lam.size() - (lt.size() - e1.size()) + (mu.size() - e1.size());
          s.addTerm({lam.size(), aexp}, pre * a * b);
        }
      }
    }
    return s;
  });
  MultiSeries out(qaWindows(cfg.capQ, cfg.capA));
  for (auto& s : parts) out += s;
  return out;
}

namespace {
// all (r-1)-tuples of internal legs within the B caps
std::vector<PartitionTuple> internalLegs(const std::vector<int>& capB) {
  std::vector<PartitionTuple> out{{}};
  for (int cap : capB) {
    std::vector<PartitionTuple> next;
    for (auto& t : out)
      for (auto& nu : enumerateUpTo(cap)) {
        auto u = t;
        u.push_back(nu);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// Σ_ν Π B_i^{|ν(i)|} Π_i block(i, ν(i-1), ν(i)^t), blocks already embedded into vars
MultiSeries chain(const std::vector<VarWindow>& vars, int r, const std::vector<int>& capB, int bOffset,
                  const std::function<MultiSeries(int, const Partition&, const Partition&)>& block) {
  auto legs = internalLegs(capB);
  auto parts = parallelMap(legs.size(), [&](size_t k) {
    const auto& nus = legs[k];
    std::vector<Partition> ch{Partition()};
    ch.insert(ch.end(), nus.begin(), nus.end());
    ch.push_back(Partition());
    MultiSeries::Exp e(vars.size(), 0);
    for (size_t l = 0; l < nus.size(); ++l) e[bOffset + l] = nus[l].size();
    MultiSeries s = MultiSeries::monomial(vars, e, 1);
    for (int i = 1; i <= r && !s.isZero(); ++i) s = s * block(i, ch[i - 1], conjugate(ch[i]));
    return s;
  });
  MultiSeries out(vars);
  for (auto& s : parts) out += s;
  return out;
}

MultiSeries embed(const MultiSeries& s, const std::vector<VarWindow>& vars, const std::vector<int>& slots) {
  MultiSeries out(vars);
  MultiSeries::Exp f(vars.size(), 0);
  for (auto& [e, c] : s.terms()) {
    std::fill(f.begin(), f.end(), 0);
    for (size_t k = 0; k < slots.size(); ++k) f[slots[k]] = e[k];
    out.addTerm(f, c);
  }
  return out;
}
}  // namespace

MultiSeries zrFixedLegs(const PartitionTuple& lams, const NetworkConfig& cfg) {
  if (static_cast<int>(lams.size()) != cfg.r) throw std::invalid_argument("zrFixedLegs: tuple length must equal r");
  validate(cfg);
  auto vars = abWindows(cfg.capA, cfg.capB);
  return chain(vars, cfg.r, cfg.capB, 1, [&](int i, const Partition& a, const Partition& b) {
    return embed(fourPointHFixed(a, b, lams[i - 1], cfg.params, cfg.capA), vars, {0});
  });
}

MultiSeries zrFull(const NetworkConfig& cfg) {
  validate(cfg);
  auto vars = zrWindows(cfg);
  return chain(vars, cfg.r, cfg.capB, 2, [&](int, const Partition& a, const Partition& b) {
    auto f = cfg.direction == Direction::Horizontal ? fourPointH(a, b, cfg) : fourPointV(a, b, cfg);
    return embed(f, vars, {0, 1});
  });
}

MultiSeries normalizeByPerturbative(const MultiSeries& z) {
  const int qi = z.varIndex("Q");
  MultiSeries pert(z.vars());
  for (auto& [e, c] : z.terms())
    if (e[qi] == 0) pert.addTerm(e, c);
  return z * seriesInvert(pert);
}

MultiSeries normalizedZr(const NetworkConfig& cfg) { return normalizeByPerturbative(zrFull(cfg)); }

}  // namespace qq
