#include "qqengine/symfun.hpp"

#include <stdexcept>

namespace qq {

namespace {
Rational checkedInverse(const Rational& den, const char* what) {
  if (den == 0) throw GenericityError(std::string("vanishing denominator in ") + what);
  return 1 / den;
}

Rational det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}
}  // namespace

PowerSumSpec PowerSumSpec::scaled(const Rational& z) const {
  std::vector<Rational> out(p_.size());
  Rational zn = 1;
  for (size_t n = 0; n < p_.size(); ++n) {
    zn *= z;
    out[n] = zn * p_[n];
  }
  return PowerSumSpec(out);
}

std::vector<Rational> completeFromPowerSums(const PowerSumSpec& spec, int D) {
  if (D > spec.maxDegree()) throw std::invalid_argument("power-sum spec degree too small");
  std::vector<Rational> h(D + 1);
  h[0] = 1;
  for (int k = 1; k <= D; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += spec.p(i) * h[k - i];
    h[k] = s / k;
  }
  return h;
}

Rational skewSchur(const Partition& lam, const Partition& mu, const PowerSumSpec& spec) {
  if (!contains(mu, lam)) return 0;
  const int n = lam.length();
  if (n == 0) return 1;
  const int D = lam.size() - mu.size();
  auto h = completeFromPowerSums(spec, D);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = lam.part(i) - mu.part(j) - i + j;
      m[i][j] = (k >= 0 && k <= D) ? h[k] : Rational(0);
    }
  return det(std::move(m));
}

Rational tautChar(const Partition& lam, const Rational& qv, const Rational& tv) {
  Rational s = 0;
  for (auto& c : lam.cells()) s += pw(qv, c.row) * pw(tv, c.col);
  return s;
}

Rational hEigen(int n, const Partition& lam, const ParamPoint& p) {
  if (n == 0) throw std::invalid_argument("hEigen: n = 0");
  Rational qn = pw(p.qHalf, 2L * n), tn = pw(p.tHalf, 2L * n);
  Rational v = -tautChar(lam, qn, tn) + checkedInverse((1 - qn) * (1 - tn), "hEigen");
  return n > 0 ? v : -v;
}

PowerSumSpec principalAlphabet(const Rational& xHalf, const Rational& yHalf, const Partition& nu, int s,
                               const Rational& scale, int D) {
  std::vector<Rational> out(D);
  for (int n = 1; n <= D; ++n) {
    Rational v = 0;
    for (int k = 1; k <= nu.length(); ++k)
      v += pw(xHalf, static_cast<long>(n) * (2 * k - 1)) * (pw(yHalf, 2L * s * n * nu.part(k - 1)) - 1);
    v += pw(xHalf, n) * checkedInverse(1 - pw(xHalf, 2L * n), "principalAlphabet");
    out[n - 1] = pw(scale, n) * v;
  }
  return PowerSumSpec(out);
}

PowerSumSpec powerSumPrincipal(PrincipalKind kind, const Partition& nu, const ParamPoint& p, const Rational& scale,
                               int D) {
  switch (kind) {
    case PrincipalKind::QRhoTNu:
      return principalAlphabet(p.qHalf, p.tHalf, nu, 1, scale, D);
    case PrincipalKind::QRhoTNegNu:
      return principalAlphabet(p.qHalf, p.tHalf, nu, -1, scale, D);
    case PrincipalKind::TRhoQNegNuT:
      return principalAlphabet(p.tHalf, p.qHalf, conjugate(nu), -1, scale, D);
    case PrincipalKind::TInvRhoQNegNuT:
      return principalAlphabet(1 / p.tHalf, p.qHalf, conjugate(nu), -1, scale, D);
  }
  throw std::invalid_argument("unknown principal kind");
}

Rational pPlus(int n, const Partition& nu, const ParamPoint& p) {
  return -pw(p.sqrtQT(), n) * (pw(p.tHalf, n) - pw(p.tHalf, -n)) * hEigen(n, nu, p);
}

Rational pMinus(int n, const Partition& nu, const ParamPoint& p) {
  return -pw(p.sqrtQT(), -n) * (pw(p.qHalf, n) - pw(p.qHalf, -n)) * hEigen(-n, nu, p);
}

PowerSumSpec pPlusSpec(const Partition& nu, const ParamPoint& p, const Rational& scale, int D) {
  std::vector<Rational> out(D);
  for (int n = 1; n <= D; ++n) out[n - 1] = pw(scale, n) * pPlus(n, nu, p);
  return PowerSumSpec(out);
}

PowerSumSpec pMinusSpec(const Partition& nu, const ParamPoint& p, const Rational& scale, int D) {
  std::vector<Rational> out(D);
  for (int n = 1; n <= D; ++n) out[n - 1] = pw(scale, n) * pMinus(n, nu, p);
  return PowerSumSpec(out);
}

Rational macdonaldNormO(const Partition& lam, const ParamPoint& p) {
  Rational v = pw(p.sqrtQT(), lam.size());
  for (auto& c : lam.cells()) {
    int a = arm(lam, c), l = leg(lam, c);
    v *= (1 - pw(p.qHalf, -2L * (l + 1)) * pw(p.tHalf, 2L * a)) * (1 - pw(p.qHalf, 2L * l) * pw(p.tHalf, -2L * (a + 1)));
  }
  if (v == 0) throw GenericityError("vanishing Macdonald norm");
  return v;
}

Rational framingP(const Partition& nu, const Rational& xHalf, const Rational& yHalf) {
  Rational v = pw(xHalf, normSq(nu));
  for (auto& c : nu.cells())
    v *= checkedInverse(1 - pw(xHalf, 2L * (leg(nu, c) + 1)) * pw(yHalf, 2L * arm(nu, c)), "framingP");
  return v;
}

}  // namespace qq
