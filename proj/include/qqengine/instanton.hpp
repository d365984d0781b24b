#pragma once

#include <functional>
#include <vector>

#include "qqengine/exact_series.hpp"
#include "qqengine/partitions.hpp"

namespace qq {

// mult · q^eq t^et a_j/a_i
struct TangentWeight {
  int mult = 1;
  int eq = 0;
  int et = 0;
  int i = 0;
  int j = 0;
  auto operator<=>(const TangentWeight&) const = default;
};

struct TangentChar {
  std::vector<TangentWeight> weights;
  int count() const;
};

// T = Σ_{i,j} (a_j/a_i)[Σ_{□∈λ^i} q^{-ℓ_{λ^j}(□)} t^{a_{λ^i}(□)+1} + Σ_{□∈λ^j} q^{ℓ_{λ^i}(□)+1} t^{-a_{λ^j}(□)}]
TangentChar tangentCharacter(const PartitionTuple& lams);
Rational evalWeight(const TangentWeight& w, const ParamPoint& p);
// multiset equality T = ħ·T^∨ with ħ = qt
bool symplecticPairing(const TangentChar& T);
nlohmann::ordered_json toJson(const TangentChar& T);

// Π_w (1 - m/w)/(1 - 1/w) as a series in m
MultiSeries chiYRatio(const PartitionTuple& lams, const ParamPoint& p, int capM);
Rational chiYRatioAt(const PartitionTuple& lams, const ParamPoint& p, const Rational& m);

// Σ_{|λ⃗| ≤ capQ} Q^{|λ⃗|} chiYRatio(λ⃗), series in {Q, m}
MultiSeries chiYGenus(int r, int capQ, int capM, const ParamPoint& p);

// Def 2.2 with a multiplicative insertion f evaluated at each fixed point, m set to a number
using Insertion = std::function<Rational(const PartitionTuple&)>;
MultiSeries qqCharacterAt(int r, int capQ, const ParamPoint& p, const Rational& m, const Insertion& f);

// f_ψ(u ⊗ Taut_λ); u = uHalf²
Rational psiEigenvalue(const Partition& lam, const Rational& uHalf, const ParamPoint& p);
MultiSeries qCharacterTrace(int capQ, const Rational& uHalf, const ParamPoint& p);

// localization side of Prop 3.4 in network variables {Q, A, B_1..B_{r-1}}:
// m = -A√(qt), a_{l+1}/a_l = A·B_l, genus variable Q_χ = -Q m^{1-r}/√(qt)
MultiSeries localizationZr(int r, const ParamPoint& p, int capQ, int capA, const std::vector<int>& capB);
// r = 1 only: rewrites a genus series in {Q, m} into network variables {Q, A}
MultiSeries genusToNetwork(const MultiSeries& genus, const ParamPoint& p, int capQ, int capA);

}  // namespace qq
