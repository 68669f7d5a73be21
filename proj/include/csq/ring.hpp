#pragma once

// Exact arithmetic over the rings used by the continuant machinery:
// Z, F_p, Q, F[X] (F = F_p or Q), Z[i], Z[j], Z[sqrt 3] and 2x2 integer
// matrices. A Value carries its RingId; mixing rings throws RingMismatch.

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "csq/error.hpp"

namespace csq {

enum class RingKind {
  Integers,
  PrimeField,
  Rationals,
  Polynomial,
  Gaussian,    // a + b*i,        i^2 = -1
  Eisenstein,  // a + b*j,        j^2 = -1 - j
  ZSqrt3,      // a + b*sqrt(3)
  IntMatrix2,  // [[a, b], [c, d]]
};

class RingId {
 public:
  static RingId integers();
  static RingId prime_field(const mpz_class& p);  // throws PreconditionFailed unless p is prime
  static RingId rationals();
  static RingId polynomials(const RingId& base);  // base must be PrimeField or Rationals
  static RingId gaussian();
  static RingId eisenstein();
  static RingId zsqrt3();
  static RingId int_matrix2();

  RingKind kind() const noexcept { return desc_->kind; }
  const mpz_class& modulus() const;  // PrimeField only
  const RingId& base() const;        // Polynomial only

  bool is_field() const noexcept;
  bool is_euclidean() const noexcept { return kind() != RingKind::IntMatrix2; }
  bool is_commutative() const noexcept { return kind() != RingKind::IntMatrix2; }
  // True when the star is not the identity map.
  bool has_conjugation() const noexcept;
  // Field characteristic (0 for Q); polynomial rings report their base.
  mpz_class characteristic() const;

  std::string name() const;

  friend bool operator==(const RingId& a, const RingId& b);
  friend bool operator!=(const RingId& a, const RingId& b) { return !(a == b); }

 private:
  struct Desc {
    RingKind kind;
    mpz_class modulus;
    std::shared_ptr<const RingId> base;
  };
  explicit RingId(std::shared_ptr<const Desc> d) : desc_(std::move(d)) {}
  std::shared_ptr<const Desc> desc_;
};

using Pair = std::array<mpz_class, 2>;
using Mat2 = std::array<mpz_class, 4>;  // row-major
// Dense coefficients, low degree first; never ends in zero. Prime-field
// coefficients are stored as integral rationals in [0, p).
using PolyCoeffs = std::vector<mpq_class>;

class Value {
 public:
  using Payload = std::variant<mpz_class, mpq_class, PolyCoeffs, Pair, Mat2>;

  Value(RingId ring, Payload payload);

  static Value zero(const RingId& ring);
  static Value one(const RingId& ring);
  // Image of an integer under Z -> ring.
  static Value from_int(const RingId& ring, const mpz_class& n);
  // Image of a rational; valid in fields and polynomial rings over fields.
  static Value from_rational(const RingId& ring, const mpq_class& q);

  static Value integer(const mpz_class& n) { return {RingId::integers(), n}; }
  static Value gaussian(const mpz_class& a, const mpz_class& b) {
    return {RingId::gaussian(), Pair{a, b}};
  }
  static Value eisenstein(const mpz_class& a, const mpz_class& b) {
    return {RingId::eisenstein(), Pair{a, b}};
  }
  static Value zsqrt3(const mpz_class& a, const mpz_class& b) {
    return {RingId::zsqrt3(), Pair{a, b}};
  }
  static Value matrix(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                      const mpz_class& d) {
    return {RingId::int_matrix2(), Mat2{a, b, c, d}};
  }
  static Value polynomial(const RingId& base, PolyCoeffs coeffs) {
    return {RingId::polynomials(base), std::move(coeffs)};
  }
  // The indeterminate X of base[X].
  static Value variable(const RingId& base);

  const RingId& ring() const noexcept { return ring_; }
  const Payload& payload() const noexcept { return payload_; }

  // Typed views; throw UnsupportedRing on the wrong kind.
  const mpz_class& as_integer() const;  // Integers, PrimeField residue
  const mpq_class& as_rational() const;
  const PolyCoeffs& coeffs() const;
  const Pair& pair() const;
  const Mat2& mat() const;

  bool is_zero() const;
  bool is_one() const;

  // Polynomials: degree (-1 for zero). Other rings: 0.
  int degree() const;
  // Coefficient of X^k as an element of the base field.
  Value coefficient(std::size_t k) const;
  Value leading_coefficient() const;

  Value operator-() const;
  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  Value& operator+=(const Value& b) { return *this = *this + b; }
  Value& operator-=(const Value& b) { return *this = *this - b; }
  Value& operator*=(const Value& b) { return *this = *this * b; }

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  void normalize();

  RingId ring_;
  Payload payload_;
};

struct DivResult {
  Value quotient;
  Value remainder;
};

// Euclidean function: |a| on Z, 2^deg on F[X] (0 for 0), a^2+b^2 on Z[i],
// a^2-ab+b^2 on Z[j], |a^2-3b^2| on Z[sqrt 3], 0/1 on fields.
mpz_class euclidean_norm(const Value& a);

// a = q*b + r with norm(r) < norm(b). Choice rules:
//   Z:             0 <= r < |b|
//   fields:        r = 0
//   F[X]:          long division
//   Z[i]:          coordinates of a/b rounded to nearest, ties toward zero
//   Z[j], Z[√3]:   floor/ceil of each coordinate of a/b, least norm(r),
//                  ties to the lexicographically smallest quotient
DivResult euclidean_divide(const Value& a, const Value& b);

// Exact quotient a/b; throws NotADivisor if b does not divide a.
Value divide_exact(const Value& a, const Value& b);

// The ring's anti-automorphism: identity on Z, F_p, Q and F[X]; complex
// conjugation on Z[i] and Z[j]; sqrt3 -> -sqrt3; adjugate on matrices.
Value conjugate(const Value& a);

bool is_unit(const Value& a);
// Throws NotAUnit.
Value inverse(const Value& a);

// a * conjugate(a), as an element of a's ring.
Value star_norm(const Value& a);
// a * conjugate(a) as a rational integer, for Z, Z[i], Z[j], Z[√3].
mpz_class star_norm_integer(const Value& a);

// Monic associate of a nonzero polynomial (or the value itself elsewhere).
Value monic(const Value& a);

// Gcd via the Euclidean algorithm, normalized (monic over F[X], nonnegative
// over Z). Both-zero input returns zero.
Value gcd(const Value& a, const Value& b);

// Ensure two values share a ring (RingMismatch otherwise).
void require_same_ring(const Value& a, const Value& b);

// poly * X^k.
Value shift(const Value& poly, unsigned k);

}  // namespace csq
