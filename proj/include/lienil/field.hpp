#pragma once

// Exact field arithmetic: arbitrary-precision rationals (canonical lowest
// terms, positive denominator) and prime fields F_p for machine-word p.
// Everything is exact; no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lienil {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Contract violation by the caller (bad input, mismatched fields, ...).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A safety bound tripped or an internal consistency check failed; never a
// mathematical verdict.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime_u64(std::uint64_t n);

// Which field scalars live in: p == 0 means the rationals, otherwise F_p.
struct FieldTag {
  std::uint64_t p = 0;

  static FieldTag rationals() { return FieldTag{0}; }
  static FieldTag prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  std::uint64_t characteristic() const { return p; }
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);

// One exact field element together with its field tag. Rationals are kept in
// lowest terms with positive denominator (the representation is canonical, so
// equality is structural); F_p residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : tag_{FieldTag::rationals()} {}  // rational zero

  static Scalar zero(FieldTag tag) { return Scalar(tag); }
  static Scalar one(FieldTag tag) { return of_int(1, tag); }
  static Scalar of_int(long long v, FieldTag tag);
  static Scalar of_rational(Rational q);             // rationals only
  static Scalar of_residue(std::uint64_t r, FieldTag tag);  // F_p only

  // Accepts an optionally signed decimal integer or "a/b".
  static Scalar parse(std::string_view text, FieldTag tag);

  FieldTag field() const { return tag_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws precondition_error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order for canonical sorting (not a field order).
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string str() const;  // "a", "a/b", or the residue

  std::uint64_t residue() const;      // F_p only
  const Rational& rational() const;   // rationals only

 private:
  explicit Scalar(FieldTag tag) : tag_(tag) {}
  static void require_same_field(const Scalar& a, const Scalar& b);

  FieldTag tag_;
  std::uint64_t r_ = 0;  // value when tag_.p != 0
  Rational q_;           // value when tag_.p == 0
};

}  // namespace lienil
