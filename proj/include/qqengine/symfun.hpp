#pragma once

#include <vector>

#include "qqengine/exact_series.hpp"
#include "qqengine/partitions.hpp"

namespace qq {

// power sums p_1..p_D of an alphabet specialization
class PowerSumSpec {
 public:
  PowerSumSpec() = default;
  explicit PowerSumSpec(std::vector<Rational> p1ToD) : p_(std::move(p1ToD)) {}
  int maxDegree() const { return static_cast<int>(p_.size()); }
  const Rational& p(int n) const { return p_.at(n - 1); }
  const std::vector<Rational>& values() const { return p_; }
  // alphabet z·x: p_n ↦ z^n p_n
  PowerSumSpec scaled(const Rational& z) const;

 private:
  std::vector<Rational> p_;
};

// h_0..h_D by Newton's identities k h_k = Σ p_i h_{k-i}
std::vector<Rational> completeFromPowerSums(const PowerSumSpec& spec, int D);
Rational skewSchur(const Partition& lam, const Partition& mu, const PowerSumSpec& spec);

// Σ_{cells} qv^row tv^col
Rational tautChar(const Partition& lam, const Rational& qv, const Rational& tv);
// eq. (3.2), including the sign(n) factor
Rational hEigen(int n, const Partition& lam, const ParamPoint& p);

// alphabet scale·(x^{k-1/2} y^{s·ν_k})_{k≥1}, given xHalf = x^{1/2}, yHalf = y^{1/2}
PowerSumSpec principalAlphabet(const Rational& xHalf, const Rational& yHalf, const Partition& nu, int s,
                               const Rational& scale, int D);

enum class PrincipalKind {
  QRhoTNu,        // q^{-ρ} t^{ν}
  QRhoTNegNu,     // q^{-ρ} t^{-ν}
  TRhoQNegNuT,    // t^{-ρ} q^{-ν^t}
  TInvRhoQNegNuT  // q^{-ν^t} t^{ρ}, with t^{ρ} = (t^{-1/2}, t^{-3/2}, ...)
};
PowerSumSpec powerSumPrincipal(PrincipalKind kind, const Partition& nu, const ParamPoint& p, const Rational& scale,
                               int D);

// closed forms through H_n eigenvalues:
// p_n(q^{-ρ} t^ν) = -(qt)^{n/2}(t^{n/2}-t^{-n/2}) h_n(ν)
Rational pPlus(int n, const Partition& nu, const ParamPoint& p);
// p_n(q^{-ν^t} t^ρ) = -(qt)^{-n/2}(q^{n/2}-q^{-n/2}) h_{-n}(ν), h_{-n} with its sign(-n)
Rational pMinus(int n, const Partition& nu, const ParamPoint& p);
PowerSumSpec pPlusSpec(const Partition& nu, const ParamPoint& p, const Rational& scale, int D);
PowerSumSpec pMinusSpec(const Partition& nu, const ParamPoint& p, const Rational& scale, int D);

// ⟨O_λ, O_λ⟩ = (qt)^{|λ|/2} Π (1 - q^{-ℓ-1} t^a)(1 - q^ℓ t^{-a-1})
Rational macdonaldNormO(const Partition& lam, const ParamPoint& p);
// P_{ν^t}(x, y) = x^{‖ν‖²/2} Π 1/(1 - x^{ℓ+1} y^a), arguments given as half roots
Rational framingP(const Partition& nu, const Rational& xHalf, const Rational& yHalf);

}  // namespace qq
