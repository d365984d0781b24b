#include "qqengine/exact_series.hpp"

#include <algorithm>
#include <random>

namespace qq {

Rational pw(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("pw: zero to a negative power");
    Rational inv = 1 / x;
    return pw(inv, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

std::string ratStr(const Rational& x) { return x.get_str(); }

Rational ratFromString(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

ParamPoint::ParamPoint(Rational qh, Rational th, std::vector<Rational> a, int G)
    : qHalf(std::move(qh)), tHalf(std::move(th)), framing(std::move(a)), genericityBound(G) {
  qHalf.canonicalize();
  tHalf.canonicalize();
  for (auto& x : framing) x.canonicalize();
  checkGenericity(*this);
}

void checkGenericity(const ParamPoint& p) {
  auto bad = [](const Rational& x) { return x == 0 || x == 1 || x == -1; };
  if (bad(p.qHalf) || bad(p.tHalf)) throw GenericityError("qHalf, tHalf must avoid 0 and ±1");
  for (auto& a : p.framing)
    if (a == 0) throw GenericityError("framing parameters must be nonzero");
  const int G = p.genericityBound;
  if (G < 1) throw GenericityError("genericity bound must be at least 1");
  std::vector<Rational> qp(2 * G + 1), tp(2 * G + 1);
  for (int i = -G; i <= G; ++i) {
    qp[i + G] = pw(p.qHalf, i);
    tp[i + G] = pw(p.tHalf, i);
  }
  std::vector<Rational> ratios{Rational(1)};
  for (size_t k = 0; k < p.framing.size(); ++k)
    for (size_t l = 0; l < p.framing.size(); ++l)
      if (k != l) ratios.push_back(p.framing[k] / p.framing[l]);
  for (size_t r = 0; r < ratios.size(); ++r)
    for (int i = -G; i <= G; ++i)
      for (int j = -G; j <= G; ++j) {
        if (r == 0 && i == 0 && j == 0) continue;
        if (ratios[r] * qp[i + G] * tp[j + G] == 1)
          throw GenericityError("parameter point is not generic at exponents (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
}

ParamPoint randomParamPoint(std::uint64_t seed, int r, int G) {
  if (G < 1) throw std::invalid_argument("randomParamPoint: G must be at least 1");
  if (r < 1) throw std::invalid_argument("randomParamPoint: rank must be positive");
  // mt19937_64 output is fixed by the standard; distributions are not, so draw by hand
  std::mt19937_64 rng(seed);
  long range = 11;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 32 == 0) range *= 2;
    auto draw = [&]() {
      for (;;) {
        long num = static_cast<long>(rng() % (2 * range + 1)) - range;
        long den = static_cast<long>(rng() % range) + 1;
        Rational x(num, den);
        x.canonicalize();
        if (x != 0 && x != 1 && x != -1) return x;
      }
    };
    Rational qh = draw(), th = draw();
    std::vector<Rational> a;
    for (int k = 0; k < r; ++k) a.push_back(draw());
    try {
      return ParamPoint(qh, th, a, G);
    } catch (const GenericityError&) {
    }
  }
}

nlohmann::ordered_json toJson(const ParamPoint& p) {
  nlohmann::ordered_json j;
  j["qHalf"] = ratStr(p.qHalf);
  j["tHalf"] = ratStr(p.tHalf);
  auto a = nlohmann::ordered_json::array();
  for (auto& x : p.framing) a.push_back(ratStr(x));
  j["framing"] = a;
  j["genericityBound"] = p.genericityBound;
  return j;
}

MultiSeries::MultiSeries(std::vector<VarWindow> vars) : vars_(std::move(vars)) {
  for (auto& v : vars_)
    if (v.lo > v.hi) throw std::invalid_argument("empty window for variable " + v.name);
}

MultiSeries MultiSeries::constant(const std::vector<VarWindow>& vars, const Rational& c) {
  return monomial(vars, Exp(vars.size(), 0), c);
}

MultiSeries MultiSeries::monomial(const std::vector<VarWindow>& vars, const Exp& e, const Rational& c) {
  MultiSeries s(vars);
  s.addTerm(e, c);
  return s;
}

int MultiSeries::varIndex(const std::string& name) const {
  for (int k = 0; k < nvars(); ++k)
    if (vars_[k].name == name) return k;
  throw std::invalid_argument("no variable named " + name);
}

bool MultiSeries::inWindow(const Exp& e) const {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent length mismatch");
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] < vars_[k].lo || e[k] > vars_[k].hi) return false;
  return true;
}

Rational MultiSeries::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiSeries::constantTerm() const { return coeff(Exp(vars_.size(), 0)); }

void MultiSeries::addTerm(const Exp& e, const Rational& c) {
  if (c == 0 || !inWindow(e)) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiSeries::minExponent(int var) const {
  int m = vars_.at(var).hi;
  for (auto& [e, c] : terms_) m = std::min(m, e[var]);
  return m;
}

int MultiSeries::maxExponent(int var) const {
  int m = vars_.at(var).lo;
  for (auto& [e, c] : terms_) m = std::max(m, e[var]);
  return m;
}

MultiSeries MultiSeries::rewindow(const std::vector<VarWindow>& vars) const {
  if (vars.size() != vars_.size()) throw std::invalid_argument("rewindow: variable count mismatch");
  for (size_t k = 0; k < vars.size(); ++k)
    if (vars[k].name != vars_[k].name) throw std::invalid_argument("rewindow: variable name mismatch");
  MultiSeries out(vars);
  for (auto& [e, c] : terms_) out.addTerm(e, c);
  return out;
}

MultiSeries MultiSeries::shifted(const Exp& e, const Rational& c) const {
  MultiSeries out(vars_);
  if (c == 0) return out;
  Exp f(e.size());
  for (auto& [g, v] : terms_) {
    for (size_t k = 0; k < f.size(); ++k) f[k] = g[k] + e[k];
    out.addTerm(f, v * c);
  }
  return out;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  if (!sameShape(o)) throw std::invalid_argument("series variable/window mismatch");
  for (auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  if (!sameShape(o)) throw std::invalid_argument("series variable/window mismatch");
  for (auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiSeries seriesAdd(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries out = a;
  out += b;
  return out;
}

MultiSeries seriesScale(const Rational& c, const MultiSeries& s) {
  MultiSeries out = s;
  out *= c;
  return out;
}

MultiSeries seriesMul(const MultiSeries& a, const MultiSeries& b) {
  if (!a.sameShape(b)) throw std::invalid_argument("series variable/window mismatch");
  MultiSeries out(a.vars());
  const size_t n = a.vars().size();
  MultiSeries::Exp e(n);
  Rational prod;
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) {
      for (size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
      if (!out.inWindow(e)) continue;
      prod = ca * cb;
      out.addTerm(e, prod);
    }
  return out;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) { return seriesAdd(a, b); }
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries out = a;
  out -= b;
  return out;
}
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return seriesMul(a, b); }

namespace {
// s with constant term removed; throws unless it is nilpotent in the window
MultiSeries nilpotentPart(const MultiSeries& s, const char* who) {
  MultiSeries u(s.vars());
  const MultiSeries::Exp zero(s.nvars(), 0);
  for (auto& [e, c] : s.terms()) {
    if (e == zero) continue;
    for (int x : e)
      if (x < 0) throw std::domain_error(std::string(who) + ": negative exponent in non-constant part");
    u.addTerm(e, c);
  }
  return u;
}

long iterationBound(const MultiSeries& s) {
  long b = 1;
  for (auto& v : s.vars()) b += std::max(0, v.hi);
  return b;
}
}  // namespace

MultiSeries seriesInvert(const MultiSeries& s) {
  Rational c0 = s.constantTerm();
  if (c0 == 0) throw std::domain_error("seriesInvert: zero constant term");
  MultiSeries u = nilpotentPart(s, "seriesInvert");
  u *= Rational(-1) / c0;
  // 1/s = (1/c0) Σ u^k
  MultiSeries res = MultiSeries::constant(s.vars(), 1);
  MultiSeries term = res;
  for (long k = 0; k < iterationBound(s) && !term.isZero(); ++k) {
    term = term * u;
    res += term;
  }
  res *= 1 / c0;
  return res;
}

MultiSeries seriesExp(const MultiSeries& s) {
  if (s.constantTerm() != 0) throw std::domain_error("seriesExp: nonzero constant term");
  MultiSeries u = nilpotentPart(s, "seriesExp");
  MultiSeries res = MultiSeries::constant(s.vars(), 1);
  MultiSeries term = res;
  for (long k = 1; k <= iterationBound(s) && !term.isZero(); ++k) {
    term = term * u;
    term *= Rational(1, k);
    res += term;
  }
  return res;
}

nlohmann::ordered_json toJson(const MultiSeries& s) {
  nlohmann::ordered_json j;
  auto names = nlohmann::ordered_json::array();
  auto caps = nlohmann::ordered_json::object();
  for (auto& v : s.vars()) {
    names.push_back(v.name);
    caps[v.name] = {v.lo, v.hi};
  }
  j["vars"] = names;
  j["caps"] = caps;
  auto terms = nlohmann::ordered_json::array();
  for (auto& [e, c] : s.terms())
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  j["terms"] = terms;
  return j;
}

MultiSeries seriesFromJson(const nlohmann::ordered_json& j) {
  std::vector<VarWindow> vars;
  for (auto& n : j.at("vars")) {
    auto name = n.get<std::string>();
    auto cap = j.at("caps").at(name);
    vars.push_back({name, cap.at(0).get<int>(), cap.at(1).get<int>()});
  }
  MultiSeries s(vars);
  for (auto& t : j.at("terms")) {
    Rational c(mpz_class(t.at("num").get<std::string>()), mpz_class(t.at("den").get<std::string>()));
    c.canonicalize();
    s.addTerm(t.at("exp").get<std::vector<int>>(), c);
  }
  return s;
}

std::string toCsv(const MultiSeries& s) {
  std::string out;
  for (auto& v : s.vars()) out += v.name + ",";
  out += "num,den\n";
  for (auto& [e, c] : s.terms()) {
    for (int x : e) out += std::to_string(x) + ",";
    out += c.get_num().get_str() + "," + c.get_den().get_str() + "\n";
  }
  return out;
}

}  // namespace qq

namespace qq {
MultiSeries substituteValue(const MultiSeries& s, const std::string& var, const Rational& v) {
  const int k = s.varIndex(var);
  auto vars = s.vars();
  vars[k].lo = vars[k].hi = 0;
  MultiSeries out(vars);
  for (auto& [e, c] : s.terms()) {
    MultiSeries::Exp f = e;
    f[k] = 0;
    out.addTerm(f, c * pw(v, e[k]));
  }
  return out;
}
}  // namespace qq
