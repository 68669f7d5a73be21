#pragma once

// Proper representations m = (x^2 + y^2) * unit over Z and F[X]:
// Smith's palindromic construction and Brillhart's early stop for primes,
// the continuant and extension-field-gcd routes for polynomials, and the
// reverse direction (a multiplier z with x^2 + y^2 | z^2 + 1).

#include <utility>
#include <vector>

#include "csq/continuant.hpp"
#include "csq/euclid.hpp"
#include "csq/ring.hpp"

namespace csq {

struct TwoSquaresRep {
  Value x;
  Value y;
  Value unit;
};

// z with z^2 = -1 (mod p), 2 <= z <= p/2. Throws NoSolution unless p is a
// prime congruent to 1 mod 4.
mpz_class sqrt_minus_one_mod_p(const mpz_class& p);

// p = x^2 + y^2 with y < x < sqrt(p), read off the first remainder below
// sqrt(p) in the Euclidean run on (p, z). p = 2 gives (1, 1).
TwoSquaresRep brillhart_two_squares(const mpz_class& p);
TwoSquaresRep brillhart_two_squares(const mpz_class& p, const mpz_class& z);

struct SmithResult {
  QuotientSeq quotients;  // even-length palindrome with [Q] = p
  TwoSquaresRep rep;
};

SmithResult smith_two_squares(const mpz_class& p);
SmithResult smith_two_squares(const mpz_class& p, const mpz_class& z);

struct MultiplierResult {
  Value z;  // z^2 + 1 = (x^2 + y^2) w
  Value w;
};

// Plain squares (identity star) in a commutative Euclidean ring.
MultiplierResult multiplier_from_representation(const Value& x, const Value& y);

// When 2 is invertible and k^2 = -1: x = ((x+1)/2)^2 + ((x-1)/(2k))^2.
std::pair<Value, Value> split_when_i_exists(const Value& x, const Value& k);

struct PolyTwoSquaresResult {
  TwoSquaresRep rep;              // canonical
  EuclidTrace trace;              // full run on (m, z)
  std::vector<Value> palindrome;  // the un-scaled palindromic sequence
};

// Continuant route: Euclid on (m, z), un-scale the quotients to a palindrome,
// read x and y off its first half. Cross-checked against the early-stop
// shortcut. Field must have characteristic != 2 with -1 a non-square.
PolyTwoSquaresResult poly_two_squares_detailed(const Value& m, const Value& z);
TwoSquaresRep poly_two_squares(const Value& m, const Value& z);

// gcd route: x + wy = monic gcd(m, z + wt) in G[X], G = F(w), w^2 = -1.
TwoSquaresRep poly_two_squares_gcd(const Value& m, const Value& z, const Value& t);

// Rewrites (x, y, u) with u = c^2 + d^2 as (cx + dy, dx - cy, 1).
TwoSquaresRep unit_absorb(const TwoSquaresRep& rep);

struct CyclotomicRep {
  mpz_class p;
  Value phi;  // Phi_{4p} over Q[X]
  Value x;
  Value y;
};

CyclotomicRep cyclotomic_rep(const mpz_class& p);

// (x^2 + y^2) * unit == m and gcd(x, y) is a unit.
bool verify_two_squares(const Value& m, const TwoSquaresRep& rep);

// Z: x >= y >= 0. F[X]: deg x > deg y kept, x monic (unit adjusted), y with
// a "positive" leading coefficient (> 0 over Q, <= (p-1)/2 over F_p).
TwoSquaresRep canonicalize(const TwoSquaresRep& rep);

// Same canonical representation up to the sign of y.
bool same_up_to_associates(const TwoSquaresRep& a, const TwoSquaresRep& b);

}  // namespace csq
