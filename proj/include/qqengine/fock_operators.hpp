#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qqengine/exact_series.hpp"
#include "qqengine/partitions.hpp"

namespace qq {

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// power-sum monomials p_μ, |μ| ≤ D, grouped by degree
class FockSpace {
 public:
  explicit FockSpace(int maxDegree);
  int maxDegree() const { return maxDegree_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Partition& basis(int k) const { return basis_.at(k); }
  int degree(int k) const { return basis_.at(k).size(); }
  // -1 when μ lies beyond the truncation
  int index(const Partition& mu) const;  // throws when out of range
  int find(const Partition& mu) const;   // -1 when out of range

 private:
  int maxDegree_;
  std::vector<Partition> basis_;
  std::map<Partition, int> index_;
};

using FockVector = std::vector<MultiSeries>;

FockVector basisVector(const FockSpace& F, const std::vector<VarWindow>& vars, int k);

// z_ρ = Π n^{m_n} m_n!, so ⟨p_ρ, p_σ⟩ = z_ρ δ_{ρσ}
Rational zee(const Partition& rho);
// s_λ expanded in power sums (Jacobi–Trudi with h_k = Σ p_ρ/z_ρ)
std::map<Partition, Rational> schurInPowerSums(const Partition& lam);
FockVector schurVector(const Partition& lam, const FockSpace& F, const std::vector<VarWindow>& vars);
MultiSeries fockPairing(const FockVector& a, const FockVector& b, const FockSpace& F);

class TruncOperator {
 public:
  TruncOperator(const FockSpace& F, std::vector<VarWindow> vars);
  static TruncOperator identity(const FockSpace& F, const std::vector<VarWindow>& vars);

  const FockSpace& space() const { return *F_; }
  const std::vector<VarWindow>& vars() const { return vars_; }
  void add(int row, int col, const MultiSeries& v);
  MultiSeries entry(int row, int col) const;
  const std::map<int, MultiSeries>& column(int col) const { return cols_.at(col); }

  FockVector apply(const FockVector& v) const;
  // this ∘ rhs
  TruncOperator compose(const TruncOperator& rhs) const;
  TruncOperator plus(const TruncOperator& rhs) const;
  TruncOperator scaled(const Rational& c) const;
  bool operator==(const TruncOperator& o) const;

 private:
  const FockSpace* F_;
  std::vector<VarWindow> vars_;
  std::vector<std::map<int, MultiSeries>> cols_;
};

// α_n = n ∂/∂p_n for n > 0, α_{-n} = p_n
TruncOperator alphaMatrix(int n, const FockSpace& F, const std::vector<VarWindow>& vars);

// exp(Σ_{n=1}^{D} c_n α_{±n}/n)
struct VertexOpSpec {
  enum Sign { Plus, Minus };
  Sign sign = Plus;
  std::vector<MultiSeries> c;  // c[n-1]

  int maxN() const { return static_cast<int>(c.size()); }
  VertexOpSpec inverse() const;
};

VertexOpSpec scalarSpec(VertexOpSpec::Sign sign, const std::vector<Rational>& c, const std::vector<VarWindow>& vars);
TruncOperator expVertexOp(const VertexOpSpec& spec, const FockSpace& F);

// Γ_±(z) at an H-slot fixed point ν, z = zc·x^{ze}; the Γ_- power is z^n, see the decisions notes
//   Γ_+(z): c_n = (qt)^{n/2}(t^{n/2}-t^{-n/2}) h_n(ν) z^n = -p_n(q^{-ρ}t^ν) z^n
//   Γ_-(z): c_n = -p_n(q^{-ν^t}t^ρ) z^n
VertexOpSpec gammaEigen(VertexOpSpec::Sign sign, const Rational& zc, const MultiSeries::Exp& ze, const Partition& nu,
                        const ParamPoint& p, int D, const std::vector<VarWindow>& vars, bool inverse = false);

Rational dEntry(const Partition& lam, const ParamPoint& p);

// an operator or a grading twist x^{e·|·|} in a chain
struct ChainItem {
  bool isTwist = false;
  VertexOpSpec op;
  MultiSeries::Exp twist;
};

// blocks separated by twists: blocks[0] twists[0] blocks[1] ...
std::vector<ChainItem> fusionCompose(const std::vector<std::vector<VertexOpSpec>>& blocks,
                                     const std::vector<MultiSeries::Exp>& twists);

// ⟨∅| items |∅⟩ by matrix products on the truncated Fock space
MultiSeries engineVacuumElement(const std::vector<ChainItem>& items, const FockSpace& F);
// the same by Wick contraction: exp(Σ_{plus i < minus j} Σ_n a_n b_n x^{n·twists(i,j)}/n);
// the exponent must carry no negative powers, and the result lives in outVars
MultiSeries contractionOracle(const std::vector<ChainItem>& items, const std::vector<VarWindow>& outVars);

// Σ_{|μ| ≤ maxDegree} x^{g|μ|} [Op p_μ]_{p_μ}, ops applied left to right as written
MultiSeries engineGradedTrace(const std::vector<VertexOpSpec>& ops, const FockSpace& F, const MultiSeries::Exp& g,
                              int maxDegree);
// tr x^{g|·|} exp(Σ b_n α_{-n}/n) exp(Σ a_n α_n/n)
//   = Π_k (1 - x^{gk})^{-1} exp(Σ_n a_n b_n x^{gn}/(n(1 - x^{gn})))
MultiSeries gradedTraceOracle(const VertexOpSpec& plus, const VertexOpSpec& minus, const MultiSeries::Exp& g,
                              const std::vector<VarWindow>& outVars);

// (-1)^{|λ⃗|} Z_r(q,t^{-1};A,B⃗)_{λ⃗} as ⟨∅|X_1 (AB_1)^{|·|} X_2 ... X_r|∅⟩ with
// X_i = D(λ^i) Γ_-(√qt)^{-1} Γ_+(1)^{-1} Γ_-(-A) Γ_+(-1/(A√qt)); series in {A, B⃗}
MultiSeries rrHDiagonal(const PartitionTuple& lams, const ParamPoint& p, int capA, const std::vector<int>& capB);
// Σ Q^{|λ⃗|} rrHDiagonal(λ⃗) = Z_r(q,t^{-1};-Q,A,B⃗)
MultiSeries rrHTrace(int r, const ParamPoint& p, int capQ, int capA, const std::vector<int>& capB);
// vertical operator formula; equals Z_r(q,t^{-1};Q,A,B⃗)
MultiSeries rrVTrace(int r, const ParamPoint& p, int capQ, int capA, const std::vector<int>& capB);
// one factor of rrVTrace: tr (QA)^{|·|} M(x_L) P(y_L) M(x_R) P(y_R), both paths compared; series in {Q, A}
MultiSeries rrVFactor(const Partition& nuL, const Partition& nuR, const ParamPoint& p, int capQ, int capA);

}  // namespace qq
