#pragma once

// Shared helpers for the test binaries: shorthand constructors, seeded
// generators for every ring, and oracles that do not go through the code
// under test (plain integer arithmetic, Laplace expansion, continued-fraction
// evaluation, brute-force searches, polynomial evaluation).

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "csq/format.hpp"
#include "csq/ring.hpp"

namespace csq {

// Lets doctest print values in failed assertions.
inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << format_value(v); }

}  // namespace csq

namespace csq::test {

inline RingId ZZ() { return RingId::integers(); }
inline RingId QQ() { return RingId::rationals(); }
inline RingId QX() { return RingId::polynomials(RingId::rationals()); }
inline RingId FX(long p) { return RingId::polynomials(RingId::prime_field(p)); }

inline Value Z(long n) { return Value::integer(n); }
inline Value G(long a, long b) { return Value::gaussian(a, b); }
inline Value E(long a, long b) { return Value::eisenstein(a, b); }
inline Value S(long a, long b) { return Value::zsqrt3(a, b); }
inline Value M(long a, long b, long c, long d) { return Value::matrix(a, b, c, d); }
inline Value V(const RingId& r, const std::string& text) { return parse_value(r, text); }

// ---------------------------------------------------------------------------
// Generators

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  Value element(const RingId& r, long bound = 20) {
    switch (r.kind()) {
      case RingKind::Integers: return Z(range(-bound, bound));
      case RingKind::PrimeField: return Value::from_int(r, range(0, r.modulus().get_si() - 1));
      case RingKind::Rationals: return Value::from_rational(r, mpq_class(range(-bound, bound), range(1, 6)));
      case RingKind::Polynomial: return poly(r, static_cast<int>(range(0, 4)), bound);
      case RingKind::Gaussian:
      case RingKind::Eisenstein:
      case RingKind::ZSqrt3: return {r, Pair{range(-bound, bound), range(-bound, bound)}};
      case RingKind::IntMatrix2:
        return M(range(-bound, bound), range(-bound, bound), range(-bound, bound), range(-bound, bound));
    }
    return Value::zero(r);
  }

  Value nonzero(const RingId& r, long bound = 20) {
    for (;;) {
      Value v = element(r, bound);
      if (!v.is_zero()) return v;
    }
  }

  // Polynomial of exact degree `deg` (zero polynomial when deg < 0).
  Value poly(const RingId& r, int deg, long bound = 9) {
    if (deg < 0) return Value::zero(r);
    const RingId& f = r.base();
    PolyCoeffs c;
    for (int k = 0; k <= deg; ++k) c.push_back(base_coeff(f, bound));
    while (c.back() == 0 || (f.kind() == RingKind::PrimeField && c.back().get_num() % f.modulus() == 0)) {
      c.back() = base_coeff(f, bound);
    }
    return {r, std::move(c)};
  }

  std::vector<Value> seq(const RingId& r, std::size_t n, long bound = 9) {
    std::vector<Value> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(element(r, bound));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  mpq_class base_coeff(const RingId& f, long bound) {
    if (f.kind() == RingKind::PrimeField) return mpq_class(range(0, f.modulus().get_si() - 1));
    mpq_class q(range(-bound, bound), range(1, 3));
    q.canonicalize();
    return q;
  }

  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Oracles

// Laplace expansion along the first row.
inline mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(row);
    }
    mpz_class term = m[0][col] * laplace_det(minor);
    det += col % 2 == 0 ? term : mpz_class(-term);
  }
  return det;
}

// Numerator of q1 + 1/(q2 + 1/(... + 1/qn)) in lowest terms: the continuant
// for positive integer partial quotients.
inline mpz_class continued_fraction_numerator(const std::vector<long>& q) {
  if (q.empty()) return 1;
  mpq_class value(q.back());
  for (std::size_t k = q.size() - 1; k-- > 0;) value = mpq_class(q[k]) + 1 / value;
  value.canonicalize();
  return value.get_num();
}

// All (x, y) with x >= y >= 0 and x^2 + y^2 = n.
inline std::vector<std::pair<long, long>> brute_two_squares(long n) {
  std::vector<std::pair<long, long>> out;
  for (long y = 0; 2 * y * y <= n; ++y) {
    for (long x = y; x * x + y * y <= n; ++x) {
      if (x * x + y * y == n) out.emplace_back(x, y);
    }
  }
  return out;
}

inline bool brute_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Evaluates a polynomial over Q at a rational point by Horner's rule on the
// raw coefficients.
inline mpq_class eval_q(const Value& p, const mpq_class& x) {
  mpq_class acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// Same over F_p, at an integer point.
inline long eval_fp(const Value& p, long x, long prime) {
  long acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = ((acc * x + c[k].get_num().get_si()) % prime + prime) % prime;
  return acc;
}

// Gaussian/Eisenstein/Z[sqrt 3] products in plain integers: (a, b)(c, d).
struct RawPair {
  long a;
  long b;
};

inline RawPair raw_mul(RingKind k, RawPair x, RawPair y) {
  switch (k) {
    case RingKind::Gaussian: return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    case RingKind::Eisenstein:  // j^2 = -1 - j
      return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    case RingKind::ZSqrt3: return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    default: return {0, 0};
  }
}

inline long raw_norm(RingKind k, RawPair x) {
  switch (k) {
    case RingKind::Gaussian: return x.a * x.a + x.b * x.b;
    case RingKind::Eisenstein: return x.a * x.a - x.a * x.b + x.b * x.b;
    case RingKind::ZSqrt3: return x.a * x.a - 3 * x.b * x.b;
    default: return 0;
  }
}

}  // namespace csq::test
