#include "brjuno/input.hpp"

#include "brjuno/errors.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace brjuno {

namespace mp = boost::multiprecision;

RealInput::RealInput(const QuadraticSurd& s) {
  if (s.is_rational())
    v_ = s.to_rational();
  else
    v_ = s;
}

RealInput::RealInput(const FloatValue& f) {
  if (f.bits < 64) throw DomainError("float inputs need at least 64 bits of precision");
  v_ = f;
}

RealInput RealInput::from_double(double x, int bits) {
  PrecisionScope ps(std::max(bits, 64));
  return RealInput(FloatValue{Real(x), std::max(bits, 64), Real(0)});
}

RealInput RealInput::from_decimal(const std::string& text, int bits) {
  PrecisionScope ps(bits);
  Real v(text);
  return RealInput(FloatValue{v, bits, ulp_of(v) / 2});
}

QuadraticSurd RealInput::exact() const {
  if (is_rational()) return QuadraticSurd(rational());
  if (is_surd()) return surd();
  throw DomainError("exact value requested for a floating-point input");
}

Real RealInput::to_real() const {
  if (is_rational()) return brjuno::to_real(rational());
  if (is_surd()) return surd().to_real();
  return flt().value;
}

int RealInput::bits() const { return is_float() ? flt().bits : current_bits(); }

std::string RealInput::str() const {
  if (is_rational()) {
    std::ostringstream os;
    os << rational();
    return os.str();
  }
  if (is_surd()) return surd().str();
  return format_real(flt().value) + "@" + std::to_string(flt().bits);
}

RealInput RealInput::negated() const {
  if (is_rational()) return RealInput(Rational(-rational()));
  if (is_surd()) return RealInput(-surd());
  FloatValue f = flt();
  f.value = -f.value;
  return RealInput(f);
}

RealInput RealInput::reciprocal() const {
  if (is_rational()) {
    if (rational() == 0) throw DomainError("reciprocal of zero");
    return RealInput(Rational(1) / rational());
  }
  if (is_surd()) return RealInput(surd().reciprocal());
  PrecisionScope ps(flt().bits);
  FloatValue f = flt();
  Real ax = mp::abs(f.value);
  if (ax <= f.error) throw DomainError("reciprocal of an interval containing zero");
  Real y = Real(1) / f.value;
  f.error = f.error / (ax * (ax - f.error)) + ulp_of(y);
  f.value = y;
  return RealInput(f);
}

RealInput RealInput::plus(const BigInt& n) const {
  if (is_rational()) return RealInput(Rational(rational() + n));
  if (is_surd()) return RealInput(surd() + n);
  PrecisionScope ps(flt().bits);
  FloatValue f = flt();
  f.value += Real(n);
  f.error += ulp_of(f.value);
  return RealInput(f);
}

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("not a rational: '" + text + "'");
  BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

namespace {

std::string normalize_minus(std::string s) {
  const std::string uminus = "\xE2\x88\x92";
  for (std::size_t pos; (pos = s.find(uminus)) != std::string::npos;) s.replace(pos, uminus.size(), "-");
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  return s;
}

BigInt signed_int(const std::string& s) { return BigInt(s.front() == '+' ? s.substr(1) : s); }

}  // namespace

RealInput parse_number(const std::string& raw, int default_bits) {
  std::string s = normalize_minus(raw);
  if (s.empty()) throw ParseError("empty number");
  static const std::regex rat(R"(^[+-]?\d+(/\d+)?$)");
  static const std::regex surd(R"(^\(?([+-]?\d+)?(?:([+-])?(\d+)?\*?)sqrt\((\d+)\)\)?(?:/([+-]?\d+))?$)");
  static const std::regex dec(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:@(\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, rat)) return RealInput(parse_rational(s));
  if (std::regex_match(s, m, surd)) {
    BigInt a = m[1].matched ? signed_int(m[1].str()) : BigInt(0);
    BigInt b = m[3].matched ? BigInt(m[3].str()) : BigInt(1);
    if (m[2].matched && m[2].str() == "-") b = -b;
    if (!m[2].matched && m[1].matched && !m[3].matched) {
      // "2sqrt(3)" style: the leading integer is the coefficient of the root
      b = a;
      a = 0;
    }
    BigInt d(m[4].str());
    BigInt c = m[5].matched ? signed_int(m[5].str()) : BigInt(1);
    if (c == 0) throw ParseError("zero denominator in '" + raw + "'");
    return RealInput(QuadraticSurd(a, b, d, c));
  }
  static const std::regex surd_rev(R"(^\(?([+-]?\d*)\*?sqrt\((\d+)\)([+-]\d+)\)?(?:/([+-]?\d+))?$)");
  if (std::regex_match(s, m, surd_rev)) {
    std::string bs = m[1].str();
    BigInt b = bs.empty() || bs == "+" ? BigInt(1) : bs == "-" ? BigInt(-1) : signed_int(bs);
    BigInt c = m[4].matched ? signed_int(m[4].str()) : BigInt(1);
    if (c == 0) throw ParseError("zero denominator in '" + raw + "'");
    return RealInput(QuadraticSurd(signed_int(m[3].str()), b, BigInt(m[2].str()), c));
  }
  if (std::regex_match(s, m, dec)) {
    int bits = m[2].matched ? std::stoi(m[2].str()) : default_bits;
    if (bits < 64) throw ParseError("precision suffix must be at least 64 bits");
    return RealInput::from_decimal(m[1].str(), bits);
  }
  throw ParseError("cannot parse number '" + raw + "' (expected p/q, (a+b*sqrt(d))/c or decimal[@bits])");
}

Rational fold_coefficients(const std::vector<BigInt>& a, const std::vector<int>& eps) {
  if (a.empty()) throw DomainError("fold_coefficients: no coefficients");
  Rational t(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    int e = i < eps.size() ? eps[i] : 1;
    t = Rational(a[i]) + Rational(e) / t;
  }
  return t;
}

Rational fold_coefficients(const std::vector<BigInt>& a) { return fold_coefficients(a, {}); }

QuadraticSurd golden_mean() { return QuadraticSurd(-1, 1, 5, 2); }
QuadraticSurd silver_mean() { return QuadraticSurd(-1, 1, 2, 1); }

QuadraticSurd metallic(int m) {
  if (m < 1) throw DomainError("metallic: m must be >= 1");
  return QuadraticSurd(-m, 1, BigInt(m) * m + 4, 2);
}

QuadraticSurd noble(int a) {
  if (a < 1) throw DomainError("noble: a must be >= 1");
  return (golden_mean() + BigInt(a)).reciprocal();
}

QuadraticSurd surd_from_periodic(const std::vector<BigInt>& prefix, const std::vector<BigInt>& period) {
  if (period.empty()) {
    std::vector<BigInt> a{0};
    a.insert(a.end(), prefix.begin(), prefix.end());
    return QuadraticSurd(fold_coefficients(a));
  }
  BigInt P = 1, Pm = 0, Q = 0, Qm = 1;  // running matrix product of (a 1; 1 0)
  for (const auto& ai : period) {
    if (ai < 1) throw DomainError("surd_from_periodic: coefficients must be >= 1");
    BigInt nP = ai * P + Pm, nQ = ai * Q + Qm;
    Pm = P;
    Qm = Q;
    P = nP;
    Q = nQ;
  }
  // T = (P T + Pm)/(Q T + Qm)  =>  Q T^2 + (Qm - P) T - Pm = 0, take the root > 1
  BigInt B = Qm - P;
  QuadraticSurd t(-B, 1, B * B + 4 * Q * Pm, 2 * Q);
  for (std::size_t i = prefix.size(); i-- > 0;) t = t.reciprocal() + prefix[i];
  return t.reciprocal();
}

}  // namespace brjuno
