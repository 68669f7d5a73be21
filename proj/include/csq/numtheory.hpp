#pragma once

// Small integer helpers: trial-division primality and factorization,
// modular exponentiation. Inputs are desk-scale.

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace csq {

bool is_prime(const mpz_class& n);

// Prime factorization of n >= 1 in ascending order, with multiplicity.
std::vector<mpz_class> factor(const mpz_class& n);

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);

// Nonnegative residue of a mod m (m > 0).
mpz_class mod_floor(const mpz_class& a, const mpz_class& m);

// Residue in (-m/2, m/2].
mpz_class mod_balanced(const mpz_class& a, const mpz_class& m);

// Floor square root; returns true in `exact` when n is a perfect square.
mpz_class isqrt(const mpz_class& n, bool* exact = nullptr);

}  // namespace csq
