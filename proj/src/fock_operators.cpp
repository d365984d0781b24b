#include "qqengine/fock_operators.hpp"

#include <algorithm>
#include <numeric>

#include "qqengine/parallel.hpp"
#include "qqengine/symfun.hpp"

namespace qq {

namespace {
constexpr int kUnbounded = 1 << 20;

std::vector<VarWindow> unbounded(std::vector<VarWindow> vars) {
  for (auto& v : vars) {
    v.lo = -kUnbounded;
    v.hi = kUnbounded;
  }
  return vars;
}

MultiSeries::Exp scaledExp(const MultiSeries::Exp& e, int k) {
  MultiSeries::Exp f(e);
  for (auto& x : f) x *= k;
  return f;
}

// multiplicities m_n of μ
std::vector<int> multiplicities(const Partition& mu, int D) {
  std::vector<int> m(D + 1, 0);
  for (int x : mu.parts()) m[x] += 1;
  return m;
}

Partition fromMultiplicities(const std::vector<int>& m) {
  std::vector<int> parts;
  for (int n = static_cast<int>(m.size()) - 1; n >= 1; --n)
    for (int k = 0; k < m[n]; ++k) parts.push_back(n);
  return Partition(parts);
}

const std::vector<VarWindow>& specVars(const VertexOpSpec& s) {
  if (s.c.empty()) throw std::invalid_argument("vertex operator without coefficients");
  return s.c.front().vars();
}

void requireNoNegative(const MultiSeries& s, const std::string& what) {
  for (auto& [e, c] : s.terms())
    for (int x : e)
      if (x < 0) throw VerificationError(what + ": negative exponent in assembled series");
}
}  // namespace

FockSpace::FockSpace(int maxDegree) : maxDegree_(maxDegree), basis_(enumerateUpTo(maxDegree)) {
  if (maxDegree < 0) throw std::invalid_argument("FockSpace: negative degree");
  for (int k = 0; k < dim(); ++k) index_[basis_[k]] = k;
}

int FockSpace::find(const Partition& mu) const {
  auto it = index_.find(mu);
  return it == index_.end() ? -1 : it->second;
}

int FockSpace::index(const Partition& mu) const {
  const int k = find(mu);
  if (k < 0) throw std::out_of_range("FockSpace: " + mu.str() + " beyond truncation degree");
  return k;
}

FockVector basisVector(const FockSpace& F, const std::vector<VarWindow>& vars, int k) {
  FockVector v(F.dim(), MultiSeries(vars));
  v.at(k) = MultiSeries::constant(vars, 1);
  return v;
}

Rational zee(const Partition& rho) {
  Rational z = 1;
  std::map<int, int> m;
  for (int x : rho.parts()) m[x] += 1;
  for (auto& [n, k] : m)
    for (int j = 1; j <= k; ++j) z *= n * j;
  return z;
}

std::map<Partition, Rational> schurInPowerSums(const Partition& lam) {
  using Poly = std::map<Partition, Rational>;
  auto mul = [](const Poly& a, const Poly& b) {
    Poly out;
    for (auto& [ra, ca] : a)
      for (auto& [rb, cb] : b) {
        std::vector<int> parts = ra.parts();
        parts.insert(parts.end(), rb.parts().begin(), rb.parts().end());
        std::sort(parts.rbegin(), parts.rend());
        Rational& slot = out[Partition(parts)];
        slot += ca * cb;
      }
    return out;
  };
  auto h = [](int k) {
    Poly out;
    if (k < 0) return out;
    for (auto& rho : enumerate(k)) out[rho] = 1 / zee(rho);
    return out;
  };
  const int n = lam.length();
  Poly total;
  if (n == 0) {
    total[Partition()] = 1;
    return total;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term;
    term[Partition()] = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n && !term.empty(); ++i) term = mul(term, h(lam.part(i) - i + perm[i]));
    for (auto& [rho, c] : term) total[rho] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

FockVector schurVector(const Partition& lam, const FockSpace& F, const std::vector<VarWindow>& vars) {
  if (lam.size() > F.maxDegree()) throw std::invalid_argument("schurVector: degree beyond truncation");
  FockVector v(F.dim(), MultiSeries(vars));
  for (auto& [rho, c] : schurInPowerSums(lam)) v[F.index(rho)] = MultiSeries::constant(vars, c);
  return v;
}

MultiSeries fockPairing(const FockVector& a, const FockVector& b, const FockSpace& F) {
  MultiSeries out(a.at(0).vars());
  for (int k = 0; k < F.dim(); ++k)
    if (!a[k].isZero() && !b[k].isZero()) out += seriesScale(zee(F.basis(k)), a[k] * b[k]);
  return out;
}

TruncOperator::TruncOperator(const FockSpace& F, std::vector<VarWindow> vars)
    : F_(&F), vars_(std::move(vars)), cols_(F.dim()) {}

TruncOperator TruncOperator::identity(const FockSpace& F, const std::vector<VarWindow>& vars) {
  TruncOperator I(F, vars);
  for (int k = 0; k < F.dim(); ++k) I.add(k, k, MultiSeries::constant(vars, 1));
  return I;
}

void TruncOperator::add(int row, int col, const MultiSeries& v) {
  if (v.isZero()) return;
  auto& c = cols_.at(col);
  auto it = c.find(row);
  if (it == c.end()) {
    c.emplace(row, v);
    return;
  }
  it->second += v;
  if (it->second.isZero()) c.erase(it);
}

MultiSeries TruncOperator::entry(int row, int col) const {
  auto& c = cols_.at(col);
  auto it = c.find(row);
  return it == c.end() ? MultiSeries(vars_) : it->second;
}

FockVector TruncOperator::apply(const FockVector& v) const {
  if (static_cast<int>(v.size()) != F_->dim()) throw std::invalid_argument("vector dimension mismatch");
  FockVector out(v.size(), MultiSeries(vars_));
  for (int col = 0; col < F_->dim(); ++col) {
    if (v[col].isZero()) continue;
    for (auto& [row, x] : cols_[col]) out[row] += x * v[col];
  }
  return out;
}

TruncOperator TruncOperator::compose(const TruncOperator& rhs) const {
  TruncOperator out(*F_, vars_);
  for (int col = 0; col < F_->dim(); ++col)
    for (auto& [mid, y] : rhs.cols_[col])
      for (auto& [row, x] : cols_[mid]) out.add(row, col, x * y);
  return out;
}

TruncOperator TruncOperator::plus(const TruncOperator& rhs) const {
  TruncOperator out = *this;
  for (int col = 0; col < F_->dim(); ++col)
    for (auto& [row, x] : rhs.cols_[col]) out.add(row, col, x);
  return out;
}

TruncOperator TruncOperator::scaled(const Rational& c) const {
  TruncOperator out(*F_, vars_);
  for (int col = 0; col < F_->dim(); ++col)
    for (auto& [row, x] : cols_[col]) out.add(row, col, seriesScale(c, x));
  return out;
}

bool TruncOperator::operator==(const TruncOperator& o) const {
  if (F_->dim() != o.F_->dim() || !(vars_ == o.vars_)) return false;
  for (int col = 0; col < F_->dim(); ++col)
    if (cols_[col] != o.cols_[col]) return false;
  return true;
}

TruncOperator alphaMatrix(int n, const FockSpace& F, const std::vector<VarWindow>& vars) {
  if (n == 0 || std::abs(n) > F.maxDegree()) throw std::invalid_argument("alphaMatrix: bad mode");
  TruncOperator out(F, vars);
  const int D = F.maxDegree();
  for (int col = 0; col < F.dim(); ++col) {
    auto m = multiplicities(F.basis(col), D);
    if (n > 0) {
      if (m[n] == 0) continue;
      m[n] -= 1;
      out.add(F.index(fromMultiplicities(m)), col, MultiSeries::constant(vars, n * (m[n] + 1)));
    } else {
      m[-n] += 1;
      int row = F.find(fromMultiplicities(m));
      if (row >= 0) out.add(row, col, MultiSeries::constant(vars, 1));
    }
  }
  return out;
}

VertexOpSpec VertexOpSpec::inverse() const {
  VertexOpSpec out = *this;
  for (auto& x : out.c) x *= -1;
  return out;
}

VertexOpSpec scalarSpec(VertexOpSpec::Sign sign, const std::vector<Rational>& c, const std::vector<VarWindow>& vars) {
  VertexOpSpec s{sign, {}};
  for (auto& x : c) s.c.push_back(MultiSeries::constant(vars, x));
  return s;
}

TruncOperator expVertexOp(const VertexOpSpec& spec, const FockSpace& F) {
  const auto& vars = specVars(spec);
  const int D = F.maxDegree();
  const int N = std::min(D, spec.maxN());
  TruncOperator out(F, vars);
  if (spec.sign == VertexOpSpec::Minus) {
    // exp(Σ c_n p_n/n) = Σ_ρ Π_n (c_n/n)^{m_n}/m_n! p_ρ
    std::vector<std::vector<MultiSeries>> powers(N + 1);
    for (int n = 1; n <= N; ++n) {
      MultiSeries base = seriesScale(Rational(1, n), spec.c[n - 1]);
      powers[n].push_back(MultiSeries::constant(vars, 1));
      for (int k = 1; n * k <= D; ++k)
        powers[n].push_back(seriesScale(Rational(1, k), powers[n].back() * base));
    }
    std::vector<std::pair<std::vector<int>, MultiSeries>> terms;
    for (auto& rho : enumerateUpTo(D)) {
      auto m = multiplicities(rho, D);
      MultiSeries e = MultiSeries::constant(vars, 1);
      for (int n = 1; n <= D && !e.isZero(); ++n) {
        if (m[n] == 0) continue;
        if (n > N) e = MultiSeries(vars);
        else e = e * powers[n][m[n]];
      }
      if (!e.isZero()) terms.emplace_back(m, e);
    }
    for (int col = 0; col < F.dim(); ++col) {
      auto mc = multiplicities(F.basis(col), D);
      for (auto& [m, e] : terms) {
        std::vector<int> mm(D + 1);
        for (int n = 0; n <= D; ++n) mm[n] = mc[n] + m[n];
        Partition row = fromMultiplicities(mm);
        if (row.size() > D) continue;
        out.add(F.index(row), col, e);
      }
    }
    return out;
  }
  // exp(Σ c_n ∂/∂p_n) translates p_n ↦ p_n + c_n
  std::vector<std::vector<MultiSeries>> powers(N + 1);
  for (int n = 1; n <= N; ++n) {
    powers[n].push_back(MultiSeries::constant(vars, 1));
    for (int k = 1; n * k <= D; ++k) powers[n].push_back(powers[n].back() * spec.c[n - 1]);
  }
  for (int col = 0; col < F.dim(); ++col) {
    auto mc = multiplicities(F.basis(col), D);
    // enumerate k_n ≤ m_n
    std::vector<int> k(D + 1, 0);
    for (;;) {
      MultiSeries e = MultiSeries::constant(vars, 1);
      std::vector<int> rest(D + 1);
      for (int n = 1; n <= D && !e.isZero(); ++n) {
        rest[n] = mc[n] - k[n];
        if (k[n] == 0) continue;
        if (n > N) {
          e = MultiSeries(vars);
          break;
        }
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), mc[n], k[n]);
        e = seriesScale(Rational(binom), e * powers[n][k[n]]);
      }
      if (!e.isZero()) out.add(F.index(fromMultiplicities(rest)), col, e);
      int n = 1;
      while (n <= D && k[n] == mc[n]) k[n++] = 0;
      if (n > D) break;
      k[n] += 1;
    }
  }
  return out;
}

VertexOpSpec gammaEigen(VertexOpSpec::Sign sign, const Rational& zc, const MultiSeries::Exp& ze, const Partition& nu,
                        const ParamPoint& p, int D, const std::vector<VarWindow>& vars, bool inverse) {
  VertexOpSpec s{sign, {}};
  for (int n = 1; n <= D; ++n) {
    Rational base = sign == VertexOpSpec::Plus ? pPlus(n, nu, p) : pMinus(n, nu, p);
    Rational c = -base * pw(zc, n);
    if (inverse) c = -c;
    s.c.push_back(MultiSeries::monomial(vars, scaledExp(ze, n), c));
  }
  return s;
}

Rational dEntry(const Partition& lam, const ParamPoint& p) { return 1 / macdonaldNormO(lam, p); }

std::vector<ChainItem> fusionCompose(const std::vector<std::vector<VertexOpSpec>>& blocks,
                                     const std::vector<MultiSeries::Exp>& twists) {
  if (blocks.empty()) throw std::invalid_argument("fusionCompose: empty chain");
  if (twists.size() + 1 != blocks.size()) throw std::invalid_argument("fusionCompose: need one twist between blocks");
  std::vector<ChainItem> out;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out.push_back({true, {}, twists[b - 1]});
    for (auto& op : blocks[b]) out.push_back({false, op, {}});
  }
  return out;
}

MultiSeries engineVacuumElement(const std::vector<ChainItem>& items, const FockSpace& F) {
  const std::vector<VarWindow>* vars = nullptr;
  for (auto& it : items)
    if (!it.isTwist) {
      vars = &specVars(it.op);
      break;
    }
  if (!vars) throw std::invalid_argument("engineVacuumElement: no operators");
  FockVector v = basisVector(F, *vars, F.index(Partition()));
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    if (it->isTwist) {
      for (int k = 0; k < F.dim(); ++k)
        if (!v[k].isZero()) v[k] = v[k].shifted(scaledExp(it->twist, F.degree(k)), 1);
    } else {
      v = expVertexOp(it->op, F).apply(v);
    }
  }
  return v[F.index(Partition())];
}

MultiSeries contractionOracle(const std::vector<ChainItem>& items, const std::vector<VarWindow>& outVars) {
  const auto wide = unbounded(outVars);
  MultiSeries expo(wide);
  for (size_t i = 0; i < items.size(); ++i) {
    if (items[i].isTwist || items[i].op.sign != VertexOpSpec::Plus) continue;
    MultiSeries::Exp tw(outVars.size(), 0);
    for (size_t j = i + 1; j < items.size(); ++j) {
      if (items[j].isTwist) {
        for (size_t k = 0; k < tw.size(); ++k) tw[k] += items[j].twist[k];
        continue;
      }
      if (items[j].op.sign != VertexOpSpec::Minus) continue;
      const int N = std::min(items[i].op.maxN(), items[j].op.maxN());
      for (int n = 1; n <= N; ++n) {
        MultiSeries ab = items[i].op.c[n - 1].rewindow(wide) * items[j].op.c[n - 1].rewindow(wide);
        expo += ab.shifted(scaledExp(tw, n), Rational(1, n));
      }
    }
  }
  requireNoNegative(expo, "contractionOracle");
  return seriesExp(expo.rewindow(outVars));
}

MultiSeries engineGradedTrace(const std::vector<VertexOpSpec>& ops, const FockSpace& F, const MultiSeries::Exp& g,
                              int maxDegree) {
  if (ops.empty()) throw std::invalid_argument("engineGradedTrace: no operators");
  const auto& vars = specVars(ops.front());
  std::vector<TruncOperator> mats;
  for (auto& op : ops) mats.push_back(expVertexOp(op, F));
  MultiSeries out(vars);
  for (int k = 0; k < F.dim(); ++k) {
    if (F.degree(k) > maxDegree) continue;
    FockVector v = basisVector(F, vars, k);
    for (auto it = mats.rbegin(); it != mats.rend(); ++it) v = it->apply(v);
    out += v[k].shifted(scaledExp(g, F.degree(k)), 1);
  }
  return out;
}

MultiSeries gradedTraceOracle(const VertexOpSpec& plus, const VertexOpSpec& minus, const MultiSeries::Exp& g,
                              const std::vector<VarWindow>& outVars) {
  // a variable with positive grading bounds the geometric sums
  int bv = -1;
  for (size_t k = 0; k < g.size(); ++k)
    if (g[k] > 0 && outVars[k].lo >= 0) {
      bv = static_cast<int>(k);
      break;
    }
  if (bv < 0) throw std::invalid_argument("gradedTraceOracle: grading needs a bounded positive variable");
  const int hi = outVars[bv].hi;
  const auto wide = unbounded(outVars);
  MultiSeries expo(wide);
  const int N = std::min(plus.maxN(), minus.maxN());
  for (int n = 1; n <= N; ++n) {
    MultiSeries ab = plus.c[n - 1].rewindow(wide) * minus.c[n - 1].rewindow(wide);
    if (ab.isZero()) continue;
    int lo = ab.minExponent(bv);
    for (int j = 1; lo + n * j * g[bv] <= hi; ++j) expo += ab.shifted(scaledExp(g, n * j), Rational(1, n));
  }
  requireNoNegative(expo, "gradedTraceOracle");
  MultiSeries res = seriesExp(expo.rewindow(outVars));
  for (int k = 1; k * g[bv] <= hi; ++k) {
    MultiSeries f = MultiSeries::constant(outVars, 1);
    f.addTerm(scaledExp(g, k), -1);
    res = res * seriesInvert(f);
  }
  return res;
}

MultiSeries rrHDiagonal(const PartitionTuple& lams, const ParamPoint& p, int capA, const std::vector<int>& capB) {
  const int r = static_cast<int>(lams.size());
  if (r < 1 || static_cast<int>(capB.size()) != r - 1) throw std::invalid_argument("rrHDiagonal: need r-1 B caps");
  const int D = std::max(1, capA + std::accumulate(capB.begin(), capB.end(), 0));
  const int L = 2 * D + capA;
  std::vector<VarWindow> out{{"A", 0, capA}};
  for (int l = 0; l < r - 1; ++l) out.push_back({"B" + std::to_string(l + 1), 0, capB[l]});
  auto wide = out;
  wide[0] = {"A", -L, capA + L};
  const int nv = static_cast<int>(out.size());
  const Rational sq = p.sqrtQT();
  MultiSeries::Exp none(nv, 0), aUp(nv, 0), aDown(nv, 0);
  aUp[0] = 1;
  aDown[0] = -1;
  std::vector<std::vector<VertexOpSpec>> blocks;
  Rational pref = 1;
  for (auto& lam : lams) {
    pref *= dEntry(lam, p);
    blocks.push_back({gammaEigen(VertexOpSpec::Minus, sq, none, lam, p, D, wide, true),
                      gammaEigen(VertexOpSpec::Plus, 1, none, lam, p, D, wide, true),
                      gammaEigen(VertexOpSpec::Minus, -1, aUp, lam, p, D, wide),
                      gammaEigen(VertexOpSpec::Plus, -1 / sq, aDown, lam, p, D, wide)});
  }
  std::vector<MultiSeries::Exp> twists;
  for (int l = 0; l < r - 1; ++l) {
    MultiSeries::Exp e(nv, 0);
    e[0] = 1;
    e[1 + l] = 1;
    twists.push_back(e);
  }
  auto items = fusionCompose(blocks, twists);
  FockSpace F(D);
  MultiSeries engine = engineVacuumElement(items, F);
  for (auto& [e, c] : engine.terms())
    if (e[0] < 0) throw VerificationError("rrHDiagonal: negative A power in assembled element");
  engine = engine.rewindow(out);
  MultiSeries oracle = contractionOracle(items, out);
  if (!(engine == oracle)) throw VerificationError("rrHDiagonal: truncated engine disagrees with contraction oracle");
  engine *= pref;
  return engine;
}

MultiSeries rrHTrace(int r, const ParamPoint& p, int capQ, int capA, const std::vector<int>& capB) {
  std::vector<VarWindow> vars{{"Q", 0, capQ}, {"A", 0, capA}};
  for (int l = 0; l < r - 1; ++l) vars.push_back({"B" + std::to_string(l + 1), 0, capB.at(l)});
  std::vector<PartitionTuple> fps;
  for (int n = 0; n <= capQ; ++n)
    for (auto& t : tuples(r, n)) fps.push_back(t);
  auto parts = parallelMap(fps.size(), [&](size_t k) { return rrHDiagonal(fps[k], p, capA, capB); });
  MultiSeries out(vars);
  for (size_t k = 0; k < fps.size(); ++k) {
    const int n = tupleSize(fps[k]);
    for (auto& [e, c] : parts[k].terms()) {
      MultiSeries::Exp f{n};
      f.insert(f.end(), e.begin(), e.end());
      out.addTerm(f, c);
    }
  }
  return out;
}

MultiSeries rrVFactor(const Partition& nuL, const Partition& nuR, const ParamPoint& p, int capQ, int capA) {
  const int D = std::max({capQ, capA, 1});
  const std::vector<VarWindow> out{{"Q", 0, capQ}, {"A", 0, capA}};
  const std::vector<VarWindow> wide{{"Q", 0, capQ}, {"A", -2 * D - capA, 2 * D + capA}};
  const Rational sq = p.sqrtQT();
  auto spec = [&](VertexOpSpec::Sign sign, bool xAlphabet, const Partition& nu, const Rational& z, int aPow,
                  bool omega) {
    VertexOpSpec s{sign, {}};
    for (int n = 1; n <= D; ++n) {
      Rational c = (xAlphabet ? pPlus(n, nu, p) : pMinus(n, nu, p)) * pw(z, n);
      if (omega && n % 2 == 0) c = -c;
      s.c.push_back(MultiSeries::monomial(wide, {0, aPow * n}, c));
    }
    return s;
  };
  // M(x_L/A)_ω P(√qt A y_L)_ω M(x_R/√qt) P(y_R)
  auto mL = spec(VertexOpSpec::Minus, true, nuL, 1, -1, true);
  auto pL = spec(VertexOpSpec::Plus, false, nuL, sq, 1, true);
  auto mR = spec(VertexOpSpec::Minus, true, nuR, 1 / sq, 0, false);
  auto pR = spec(VertexOpSpec::Plus, false, nuR, 1, 0, false);
  const MultiSeries::Exp g{1, 1};
  FockSpace F(D);
  MultiSeries engine = engineGradedTrace({mL, pL, mR, pR}, F, g, capQ);
  for (auto& [e, c] : engine.terms())
    if (e[1] < 0) throw VerificationError("rrVFactor: negative A power in assembled element");
  engine = engine.rewindow(out);
  // oracle: P_L M_R = M_R P_L exp(Σ a b/n), then the normal-ordered graded trace
  MultiSeries swap = contractionOracle({{false, pL, {}}, {false, mR, {}}}, out);
  VertexOpSpec plus{VertexOpSpec::Plus, {}}, minus{VertexOpSpec::Minus, {}};
  for (int n = 1; n <= D; ++n) {
    plus.c.push_back(pL.c[n - 1] + pR.c[n - 1]);
    minus.c.push_back(mL.c[n - 1] + mR.c[n - 1]);
  }
  MultiSeries oracle = swap * gradedTraceOracle(plus, minus, g, out);
  if (!(engine == oracle)) throw VerificationError("rrVFactor: truncated engine disagrees with graded-trace oracle");
  return engine;
}

MultiSeries rrVTrace(int r, const ParamPoint& p, int capQ, int capA, const std::vector<int>& capB) {
  if (r < 1 || static_cast<int>(capB.size()) != r - 1) throw std::invalid_argument("rrVTrace: need r-1 B caps");
  std::vector<VarWindow> vars{{"Q", 0, capQ}, {"A", 0, capA}};
  for (int l = 0; l < r - 1; ++l) vars.push_back({"B" + std::to_string(l + 1), 0, capB[l]});
  std::vector<PartitionTuple> legs{{}};
  for (int cap : capB) {
    std::vector<PartitionTuple> next;
    for (auto& t : legs)
      for (auto& nu : enumerateUpTo(cap)) {
        auto u = t;
        u.push_back(nu);
        next.push_back(std::move(u));
      }
    legs = std::move(next);
  }
  auto parts = parallelMap(legs.size(), [&](size_t k) {
    const auto& nus = legs[k];
    MultiSeries::Exp e(vars.size(), 0);
    Rational w = 1;
    for (size_t l = 0; l < nus.size(); ++l) {
      e[2 + l] = nus[l].size();
      w *= pw(Rational(-1), nus[l].size()) * dEntry(nus[l], p);
    }
    MultiSeries s = MultiSeries::monomial(vars, e, w);
    std::vector<Partition> ch{Partition()};
    ch.insert(ch.end(), nus.begin(), nus.end());
    ch.push_back(Partition());
    for (int i = 1; i <= r && !s.isZero(); ++i) {
      MultiSeries f(vars);
      const MultiSeries factor = rrVFactor(ch[i - 1], ch[i], p, capQ, capA);
      for (auto& [fe, c] : factor.terms()) {
        MultiSeries::Exp x(vars.size(), 0);
        x[0] = fe[0];
        x[1] = fe[1];
        f.addTerm(x, c);
      }
      s = s * f;
    }
    return s;
  });
  MultiSeries out(vars);
  for (auto& s : parts) out += s;
  return out;
}

}  // namespace qq
