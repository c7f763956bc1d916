#include "lienil/field.hpp"

#include <charconv>

namespace lienil {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldTag FieldTag::prime(std::uint64_t p) {
  if (!is_prime_u64(p))
    throw precondition_error("field characteristic must be prime, got " +
                             std::to_string(p));
  return FieldTag{p};
}

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // a,b < p <= 2^63 so no overflow for word primes
  return s >= p ? s - p : s;
}

std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return mulmod(a, b, p);
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw precondition_error("division by zero in F_p");
  // extended Euclid on signed 128-bit to stay exact
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::of_int(long long v, FieldTag tag) {
  Scalar s(tag);
  if (tag.is_rational()) {
    s.q_ = v;
  } else {
    long long m = v % static_cast<long long>(tag.p);
    if (m < 0) m += static_cast<long long>(tag.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of_rational(Rational q) {
  Scalar s(FieldTag::rationals());
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::of_residue(std::uint64_t r, FieldTag tag) {
  if (tag.is_rational())
    throw precondition_error("of_residue requires a prime field tag");
  Scalar s(tag);
  s.r_ = r % tag.p;
  return s;
}

Scalar Scalar::parse(std::string_view text, FieldTag tag) {
  auto bad = [&](const std::string& why) {
    return precondition_error("bad scalar '" + std::string(text) + "': " + why);
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) throw bad("missing denominator");
  }
  auto parse_int = [&](std::string_view part) -> BigInt {
    bool neg = false;
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
      neg = part[0] == '-';
      part.remove_prefix(1);
    }
    if (part.empty()) throw bad("missing digits");
    BigInt v = 0;
    for (char c : part) {
      if (c < '0' || c > '9') throw bad("non-digit character");
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  BigInt n = parse_int(num);
  BigInt d = den.empty() ? BigInt(1) : parse_int(den);
  if (d == 0) throw bad("zero denominator");
  if (tag.is_rational()) return of_rational(Rational(n, d));
  BigInt p = tag.p;
  BigInt nm = n % p;
  if (nm < 0) nm += p;
  BigInt dm = d % p;
  if (dm < 0) dm += p;
  std::uint64_t nr = nm.convert_to<std::uint64_t>();
  std::uint64_t dr = dm.convert_to<std::uint64_t>();
  if (dr == 0) throw bad("denominator is 0 mod p");
  return of_residue(fp_mul(nr, fp_inv(dr, tag.p), tag.p), tag);
}

bool Scalar::is_zero() const {
  return tag_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return tag_.is_rational() ? q_ == 1 : r_ == 1 % tag_.p;
}

Scalar Scalar::operator-() const {
  Scalar s(tag_);
  if (tag_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : tag_.p - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw precondition_error("inverse of zero");
  Scalar s(tag_);
  if (tag_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = fp_inv(r_, tag_.p);
  return s;
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (a.tag_ != b.tag_)
    throw precondition_error("mixed-field arithmetic: " + a.tag_.str() +
                             " vs " + b.tag_.str());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s(a.tag_);
  if (a.tag_.is_rational())
    s.q_ = a.q_ + b.q_;
  else
    s.r_ = fp_add(a.r_, b.r_, a.tag_.p);
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s(a.tag_);
  if (a.tag_.is_rational())
    s.q_ = a.q_ - b.q_;
  else
    s.r_ = fp_sub(a.r_, b.r_, a.tag_.p);
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  Scalar s(a.tag_);
  if (a.tag_.is_rational())
    s.q_ = a.q_ * b.q_;
  else
    s.r_ = fp_mul(a.r_, b.r_, a.tag_.p);
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.tag_ != b.tag_) return false;
  return a.tag_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.tag_.p != b.tag_.p) return a.tag_.p < b.tag_.p;
  return a.tag_.is_rational() ? a.q_ < b.q_ : a.r_ < b.r_;
}

std::string Scalar::str() const {
  if (!tag_.is_rational()) return std::to_string(r_);
  std::string s = numerator(q_).str();
  if (denominator(q_) != 1) s += "/" + denominator(q_).str();
  return s;
}

std::uint64_t Scalar::residue() const {
  if (tag_.is_rational())
    throw precondition_error("residue() on a rational scalar");
  return r_;
}

const Rational& Scalar::rational() const {
  if (!tag_.is_rational())
    throw precondition_error("rational() on an F_p scalar");
  return q_;
}

}  // namespace lienil
