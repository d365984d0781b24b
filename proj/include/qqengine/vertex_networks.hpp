#pragma once

#include <vector>

#include "qqengine/exact_series.hpp"
#include "qqengine/partitions.hpp"

namespace qq {

enum class Direction { Horizontal, Vertical };

struct NetworkConfig {
  int r = 1;
  Direction direction = Direction::Horizontal;
  int capQ = 0;
  int capA = 0;
  std::vector<int> capB;  // r-1 entries
  ParamPoint params;
};

// 4·(capQ + capA + ΣcapB + maxLegSize)
int requiredGenericity(const NetworkConfig& cfg, int maxLegSize = 0);
// throws std::invalid_argument on bad shape, GenericityError on a weak bound
void validate(const NetworkConfig& cfg, int maxLegSize = 0);

std::vector<VarWindow> qaWindows(int capQ, int capA);
std::vector<VarWindow> zrWindows(const NetworkConfig& cfg);
std::vector<VarWindow> abWindows(int capA, const std::vector<int>& capB);

// eq. (3.12); x, y given as half roots, so C(q, t^{-1}) is refinedVertex(.., qHalf, 1/tHalf)
Rational refinedVertex(const Partition& lam, const Partition& mu, const Partition& nu, const Rational& xHalf,
                       const Rational& yHalf);

// eq. (3.13): Σ A^{|μ|} Q^{|λ|} C_{μ ν1 λ}(q,t^{-1}) C_{μ^t ν2t λ^t}(t^{-1},q)
MultiSeries fourPointH(const Partition& nu1, const Partition& nu2t, const NetworkConfig& cfg);
// the same with λ fixed; series in A alone
MultiSeries fourPointHFixed(const Partition& nu1, const Partition& nu2t, const Partition& lam, const ParamPoint& p,
                            int capA);
// eq. (3.14) as printed, λ fixed
MultiSeries fourPointHSkewFixed(const Partition& nu1, const Partition& nu2t, const Partition& lam,
                                const ParamPoint& p, int capA);
MultiSeries fourPointHSkew(const Partition& nu1, const Partition& nu2t, const NetworkConfig& cfg);
// (3.13) = legGauge·(3.14); the factors cancel along a glued chain
Rational legGauge(const Partition& nu1, const Partition& nu2t, const ParamPoint& p);

// vertical preferred direction; the second framing factor is P_{ν2}(t^{-1},q)
// unless printedPrefactor asks for the displayed P_{ν2}(q,t^{-1})
MultiSeries fourPointV(const Partition& nu1, const Partition& nu2t, const NetworkConfig& cfg,
                       bool printedPrefactor = false);

// coefficient of Q^{|λ⃗|} at fixed horizontal legs; series in {A, B_1..B_{r-1}}
MultiSeries zrFixedLegs(const PartitionTuple& lams, const NetworkConfig& cfg);
// eq. (3.13) chain, assembled from fourPointH or fourPointV per cfg.direction; series in {Q, A, B⃗}
MultiSeries zrFull(const NetworkConfig& cfg);
// divides by the Q^0 part (the perturbative term)
MultiSeries normalizeByPerturbative(const MultiSeries& z);
MultiSeries normalizedZr(const NetworkConfig& cfg);

}  // namespace qq
