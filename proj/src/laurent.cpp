#include "shakekit/laurent.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include "shakekit/errors.hpp"

namespace shakekit {

// ---------------------------------------------------------------------------
// UnitCirclePoint

UnitCirclePoint UnitCirclePoint::root(std::int64_t k, std::int64_t m) {
  if (m < 1) throw DomainError("root of unity needs m >= 1, got " + std::to_string(m));
  k %= m;
  if (k < 0) k += m;
  const std::int64_t g = std::gcd(k, m);
  if (g > 1) {
    k /= g;
    m /= g;
  }
  if (k == 0) m = 1;
  return UnitCirclePoint(Rational{k, m});
}

UnitCirclePoint UnitCirclePoint::angle(double theta) {
  if (!std::isfinite(theta)) throw DomainError("angle must be finite");
  return UnitCirclePoint(Angle{theta});
}

UnitCirclePoint UnitCirclePoint::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw InputError("expected root of unity as k/m, got '" + std::string(text) + "'");
  }
  try {
    std::size_t used_k = 0, used_m = 0;
    const std::string ks(text.substr(0, slash));
    const std::string ms(text.substr(slash + 1));
    const long long k = std::stoll(ks, &used_k);
    const long long m = std::stoll(ms, &used_m);
    if (used_k != ks.size() || used_m != ms.size()) throw std::invalid_argument("trailing");
    return root(k, m);
  } catch (const std::logic_error&) {
    throw InputError("expected root of unity as k/m, got '" + std::string(text) + "'");
  }
}

double UnitCirclePoint::theta() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) {
    return 2.0 * std::numbers::pi * static_cast<double>(r->k) / static_cast<double>(r->m);
  }
  return std::get<Angle>(rep_).theta;
}

namespace {

// cos and sin of 2*pi*k/m, exact where the value is rational.
std::pair<double, double> rational_cos_sin(std::int64_t k, std::int64_t m) {
  const std::int64_t twelfths = (12 % m == 0) ? k * (12 / m) : -1;
  switch (twelfths) {
    case 0: return {1.0, 0.0};
    case 2: return {0.5, std::sqrt(3.0) / 2};
    case 3: return {0.0, 1.0};
    case 4: return {-0.5, std::sqrt(3.0) / 2};
    case 6: return {-1.0, 0.0};
    case 8: return {-0.5, -std::sqrt(3.0) / 2};
    case 9: return {0.0, -1.0};
    case 10: return {0.5, -std::sqrt(3.0) / 2};
    default: break;
  }
  const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(th), std::sin(th)};
}

}  // namespace

double UnitCirclePoint::re() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return rational_cos_sin(r->k, r->m).first;
  return std::cos(std::get<Angle>(rep_).theta);
}

std::complex<double> UnitCirclePoint::value() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) {
    const auto [c, s] = rational_cos_sin(r->k, r->m);
    return {c, s};
  }
  const double th = std::get<Angle>(rep_).theta;
  return {std::cos(th), std::sin(th)};
}

bool UnitCirclePoint::is_one() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return r->k == 0;
  const double th = std::get<Angle>(rep_).theta;
  return std::remainder(th, 2.0 * std::numbers::pi) == 0.0;
}

std::int64_t UnitCirclePoint::order() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) return r->m;
  return 0;
}

std::string UnitCirclePoint::to_string() const {
  if (const auto* r = std::get_if<Rational>(&rep_)) {
    return std::to_string(r->k) + "/" + std::to_string(r->m);
  }
  std::ostringstream os;
  os.precision(17);
  os << "theta=" << std::get<Angle>(rep_).theta;
  return os.str();
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, Exponent e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff(Exponent e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exp() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exp() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (e > 0 && coeff(-e) != c) return false;
    if (e < 0 && !terms_.contains(-e)) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return {};

  // Long division on the dense ordinary polynomials t^-min * p.
  const Exponent num_lo = min_exp();
  const Exponent den_lo = divisor.min_exp();
  const auto den_deg = static_cast<std::size_t>(divisor.max_exp() - den_lo);
  std::vector<BigInt> num(static_cast<std::size_t>(max_exp() - num_lo) + 1);
  for (const auto& [e, c] : terms_) num[static_cast<std::size_t>(e - num_lo)] = c;
  std::vector<BigInt> den(den_deg + 1);
  for (const auto& [e, c] : divisor.terms_) den[static_cast<std::size_t>(e - den_lo)] = c;

  if (num.size() < den.size()) throw DomainError("inexact polynomial division");
  const BigInt& lead = den.back();
  std::vector<BigInt> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = num[i + den_deg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw DomainError("inexact polynomial division");
    }
    BigInt q = top / lead;
    for (std::size_t j = 0; j <= den_deg; ++j) num[i + j] -= q * den[j];
    quot[i] = std::move(q);
  }
  for (const auto& c : num) {
    if (c != 0) throw DomainError("inexact polynomial division");
  }
  LaurentPoly r;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    r.add_term(static_cast<Exponent>(i) + num_lo - den_lo, quot[i]);
  }
  return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += c.get_d() * std::pow(z, static_cast<double>(e));
  }
  return sum;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

double LaurentPoly::eval_symmetric_real(double x) const {
  double sum = coeff(0).get_d();
  const Exponent top = max_exp();
  double prev = 1.0;  // T_0
  double cur = x;     // T_1
  for (Exponent k = 1; k <= top; ++k) {
    if (const auto it = terms_.find(k); it != terms_.end()) sum += 2.0 * it->second.get_d() * cur;
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return sum;
}

double LaurentPoly::l1_norm() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += std::fabs(c.get_d());
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view src) : src_(src) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    int sign = 1;
    if (consume_minus()) sign = -1;
    else if (peek() == '+') ++pos_;
    result += term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (consume_minus()) sign = -1;
      else if (peek() == '+') { ++pos_; sign = 1; }
      else throw SyntaxError("expected '+' or '-'", pos_);
      result += term(sign);
    }
    return result;
  }

 private:
  LaurentPoly term(int sign) {
    skip_ws();
    BigInt coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = BigInt(digits());
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') throw SyntaxError("expected 't' after '*'", pos_);
      }
    }
    LaurentPoly::Exponent exp = 0;
    if (peek() == 't') {
      ++pos_;
      exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const bool paren = peek() == '(';
        if (paren) ++pos_;
        skip_ws();
        int esign = 1;
        if (consume_minus()) esign = -1;
        else if (peek() == '+') ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected exponent", pos_);
        exp = esign * std::stoll(digits());
        if (paren) {
          skip_ws();
          if (peek() != ')') throw SyntaxError("expected ')'", pos_);
          ++pos_;
        }
      }
    } else if (!have_coef) {
      throw SyntaxError("expected term", pos_);
    }
    return LaurentPoly::monomial(sign * coef, exp);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  bool consume_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN in UTF-8
    if (src_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return LaurentParser(text).run(); }

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
bool lp_is_symmetric(const LaurentPoly& p) { return p.is_symmetric(); }

std::complex<double> lp_eval_unit(const LaurentPoly& p, const UnitCirclePoint& z) {
  if (p.is_symmetric()) return {p.eval_symmetric_real(z.re()), 0.0};
  return p.eval(z.value());
}

}  // namespace shakekit
