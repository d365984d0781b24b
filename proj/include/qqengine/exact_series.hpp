#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qq {

using Rational = mpq_class;

// x^e for any integer e; x must be nonzero when e < 0
Rational pw(const Rational& x, long e);
std::string ratStr(const Rational& x);
Rational ratFromString(const std::string& s);

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// qHalf = q^{1/2}, tHalf = t^{1/2} are the primitive parameters
struct ParamPoint {
  Rational qHalf;
  Rational tHalf;
  std::vector<Rational> framing;
  int genericityBound = 0;

  ParamPoint() = default;
  ParamPoint(Rational qh, Rational th, std::vector<Rational> a, int G);

  Rational q() const { return qHalf * qHalf; }
  Rational t() const { return tHalf * tHalf; }
  Rational sqrtQT() const { return qHalf * tHalf; }
  // q^{i/2} t^{j/2}
  Rational qtHalfPow(long i, long j) const { return pw(qHalf, i) * pw(tHalf, j); }
  ParamPoint withBound(int G) const { return ParamPoint(qHalf, tHalf, framing, G); }
};

void checkGenericity(const ParamPoint& p);
ParamPoint randomParamPoint(std::uint64_t seed, int r, int G);
nlohmann::ordered_json toJson(const ParamPoint& p);

struct VarWindow {
  std::string name;
  int lo = 0;
  int hi = 0;
  bool operator==(const VarWindow&) const = default;
};

class MultiSeries {
 public:
  using Exp = std::vector<int>;

  MultiSeries() = default;
  explicit MultiSeries(std::vector<VarWindow> vars);
  static MultiSeries constant(const std::vector<VarWindow>& vars, const Rational& c);
  static MultiSeries monomial(const std::vector<VarWindow>& vars, const Exp& e, const Rational& c);

  const std::vector<VarWindow>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int varIndex(const std::string& name) const;
  const std::map<Exp, Rational>& terms() const { return terms_; }

  bool inWindow(const Exp& e) const;
  Rational coeff(const Exp& e) const;
  Rational constantTerm() const;
  bool isZero() const { return terms_.empty(); }
  // adds c·x^e, silently dropped outside the window
  void addTerm(const Exp& e, const Rational& c);
  bool sameShape(const MultiSeries& o) const { return vars_ == o.vars_; }
  int minExponent(int var) const;
  int maxExponent(int var) const;

  // same variables, new windows; terms outside are discarded
  MultiSeries rewindow(const std::vector<VarWindow>& vars) const;
  // multiply by c·x^e
  MultiSeries shifted(const Exp& e, const Rational& c) const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  bool operator==(const MultiSeries& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  std::vector<VarWindow> vars_;
  std::map<Exp, Rational> terms_;
};

MultiSeries seriesAdd(const MultiSeries& a, const MultiSeries& b);
MultiSeries seriesMul(const MultiSeries& a, const MultiSeries& b);
MultiSeries seriesScale(const Rational& c, const MultiSeries& s);
MultiSeries seriesInvert(const MultiSeries& s);
// exp(s); s must have zero constant term and no negative exponents
MultiSeries seriesExp(const MultiSeries& s);

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

nlohmann::ordered_json toJson(const MultiSeries& s);
MultiSeries seriesFromJson(const nlohmann::ordered_json& j);
std::string toCsv(const MultiSeries& s);

}  // namespace qq

namespace qq {
// sets a variable to a number; the variable stays with window [0,0]
MultiSeries substituteValue(const MultiSeries& s, const std::string& var, const Rational& v);
}  // namespace qq
