#include "newtonlab/fp_poly.hpp"

#include <algorithm>
#include <cctype>

namespace newtonlab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_odd_prime(std::int64_t n) { return n != 2 && is_prime(n); }

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  if (new_r == 0) fail(ErrorCode::DomainError, "inverse of zero mod " + std::to_string(p));
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_p(t, p);
}

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c = mod_p(c, p_);
  trim();
}

FpPoly FpPoly::constant(std::int64_t p, std::int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::int64_t p, std::int64_t c, int n) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1, 0);
  v.back() = c;
  return FpPoly(p, std::move(v));
}

FpPoly FpPoly::linear_root(std::int64_t p, std::int64_t a) { return FpPoly(p, {-a, 1}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t FpPoly::eval(std::int64_t x) const {
  std::int64_t acc = 0;
  x = mod_p(x, p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return acc;
}

FpPoly FpPoly::scaled(std::int64_t c) const {
  FpPoly out(p_, c_);
  for (auto& v : out.c_) v = mod_p(v * mod_p(c, p_), p_);
  out.trim();
  return out;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) { return *this += -o; }

FpPoly FpPoly::operator-() const {
  FpPoly out(p_);
  out.c_ = c_;
  for (auto& v : out.c_) v = v == 0 ? 0 : p_ - v;
  return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out.c_[i + j] = (out.c_[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
  }
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::DomainError, "polynomial division by zero");
  FpPoly q(p_), r = *this;
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), 0);
  const std::int64_t lead_inv = inv_mod(d.leading(), p_);
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const std::int64_t c = r.leading() * lead_inv % p_;
    q.c_[static_cast<std::size_t>(shift)] = c;
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      auto& slot = r.c_[i + static_cast<std::size_t>(shift)];
      slot = mod_p(slot - c * d.c_[i], p_);
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

std::string FpPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly pow_mod(const FpPoly& base, std::uint64_t e, const FpPoly& modulus) {
  FpPoly result = FpPoly::constant(base.prime(), 1).divmod(modulus).second;
  FpPoly b = base.divmod(modulus).second;
  while (e > 0) {
    if (e & 1) result = (result * b).divmod(modulus).second;
    b = (b * b).divmod(modulus).second;
    e >>= 1;
  }
  return result;
}

FpPoly frobenius_power_mod(const FpPoly& base, int k, const FpPoly& modulus) {
  FpPoly out = base.divmod(modulus).second;
  for (int i = 0; i < k; ++i) out = pow_mod(out, static_cast<std::uint64_t>(base.prime()), modulus);
  return out;
}

bool is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::int64_t p = f.prime();
  const FpPoly x = FpPoly::monomial(p, 1, 1);
  // Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n.
  if (frobenius_power_mod(x, n, f) != x.divmod(f).second) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0 || !is_prime(q)) continue;
    const FpPoly h = frobenius_power_mod(x, n / q, f) - x;
    if (gcd(h, f).degree() != 0) return false;
  }
  return true;
}

namespace {

// Advances `digits` (little-endian base p) to the next value; false on wrap.
bool next_digits(std::vector<std::int64_t>& digits, std::int64_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

}  // namespace

std::vector<Factor> factor(const FpPoly& f) {
  if (f.is_zero()) fail(ErrorCode::DomainError, "cannot factor the zero polynomial");
  const std::int64_t p = f.prime();
  FpPoly rest = f.monic();
  std::vector<Factor> out;
  // Trial division by monic candidates in increasing degree: the first
  // divisor found at each degree is necessarily irreducible.
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    std::vector<std::int64_t> low(static_cast<std::size_t>(k), 0);
    do {
      std::vector<std::int64_t> coeffs = low;
      coeffs.push_back(1);
      FpPoly cand(p, std::move(coeffs));
      int mult = 0;
      while (true) {
        auto [q, r] = rest.divmod(cand);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) out.push_back({std::move(cand), mult});
      if (2 * k > rest.degree()) break;
    } while (next_digits(low, p));
  }
  if (rest.degree() >= 1) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return std::lexicographical_compare(a.poly.coeffs().rbegin(), a.poly.coeffs().rend(),
                                        b.poly.coeffs().rbegin(), b.poly.coeffs().rend());
  });
  return out;
}

RationalFunction::RationalFunction(FpPoly num, FpPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DomainError, "rational function with zero denominator");
  normalize();
}

RationalFunction::RationalFunction(FpPoly poly)
    : num_(poly), den_(FpPoly::constant(poly.prime(), 1)) {}

void RationalFunction::normalize() {
  const std::int64_t p = prime();
  if (num_.is_zero()) {
    den_ = FpPoly::constant(p, 1);
    return;
  }
  const FpPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const std::int64_t lead_inv = inv_mod(den_.leading(), p);
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) fail(ErrorCode::DomainError, "division by the zero function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::pow(int n) const {
  RationalFunction result(FpPoly::constant(prime(), 1));
  RationalFunction base = *this;
  if (n < 0) {
    base = RationalFunction(FpPoly::constant(prime(), 1)) / base;
    n = -n;
  }
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::int64_t p) : text_(text), p_(p) {}

  RationalFunction parse() {
    RationalFunction out = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) error("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return RationalFunction(p_) - unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      skip_ws();
      const std::int64_t e = integer();
      if (e > 4096) error("exponent too large");
      if (base.is_zero() && e == 0) return RationalFunction(FpPoly::constant(p_, 1));
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = (v * 10 + (text_[pos_] - '0'));
      if (v > (std::int64_t{1} << 40)) error("integer too large");
      ++pos_;
    }
    if (pos_ == start) error("expected an integer");
    return v;
  }

  RationalFunction atom() {
    skip_ws();
    if (accept('(')) {
      RationalFunction inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      return RationalFunction(FpPoly::monomial(p_, 1, 1));
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return RationalFunction(FpPoly::constant(p_, mod_p(integer(), p_)));
    }
    if (pos_ >= text_.size()) error("unexpected end of input");
    error("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::int64_t p_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::UsageError, "p=" + std::to_string(p) + " is not prime");
  return Parser(text, p).parse();
}

}  // namespace newtonlab
