#pragma once

// Representations m = x x* + y y* over Z[i], Z[j] and Z[sqrt 3] via descent
// chains m(i) m(i+1) = N(z(i)) + 1, and the integer quaternary forms built on
// top of them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "csq/ring.hpp"

namespace csq {

struct StarRep {
  Value x;
  Value y;
};

// (x x* + y y*)(z z* + u u*) = a a* + b b*, a = xz - y u*, b = xu + y z*.
StarRep product_formula(const Value& x, const Value& y, const Value& z, const Value& u);

struct StarMultiplier {
  bool exact;  // m = z z* when true, otherwise m | z z* + 1
  Value z;
};

// Base cases: Z[i] 2 = N(1+i), Z[j] 3 = N(1-j), 1 = N(1). Z[sqrt 3] has no
// multiplier for 3 (NoMultiplier); 2 is handled by the form pipeline.
StarMultiplier find_star_multiplier(const mpz_class& m, const RingId& ring);

// Representative of z modulo m with small norm; keeps N(z) + 1 mod m.
Value reduce_mod(const Value& z, const mpz_class& m);

struct DescentChain {
  RingId ring;
  std::vector<mpz_class> ms;  // m0, m1, ..., ms with |ms| = 1
  std::vector<Value> zs;      // z0, ..., z(s-1)
  std::vector<Value> qs;      // q1, ..., qs
};

// Requires m > 1 and m | N(z) + 1 (NotADivisor otherwise).
DescentChain descent_chain(const mpz_class& m, const Value& z);

// x = [q1, q2*, q3, ...], y = the same without the last term.
StarRep chain_to_rep(const DescentChain& chain);

// z from the Euclid trace of (x, y) with m = x x* + y y* | z z* + 1.
Value coprime_multiplier(const Value& x, const Value& y);

enum class Form { FourSquares, EisensteinDouble, X2p3Y2, Sqrt3Double };

std::string form_name(Form f);  // "foursq", "eisenstein", "x2p3y2", "sqrt3"
std::optional<Form> parse_form(const std::string& name);
// The identity string template, e.g. "x^2 + y^2 + z^2 + u^2".
std::string form_formula(Form f);

using Quad = std::array<mpz_class, 4>;

struct FormQuadruple {
  Form form;
  Quad values;
};

mpz_class form_value(Form f, const Quad& v);
FormQuadruple canonical_quadruple(Form f, const Quad& v);

struct FormResult {
  FormQuadruple quad;
  std::optional<DescentChain> chain;  // set when a single descent was run
};

// n >= 1 (any integer for Sqrt3Double). With `z`, descends on n directly
// (n > 1 and n | N(z) + 1 required); without, factors n and composes the
// per-prime representations.
FormResult represent(Form f, const mpz_class& n, const std::optional<Value>& z = std::nullopt);

FormQuadruple four_squares(const mpz_class& n);
FormQuadruple eisenstein_form(const mpz_class& n);
FormQuadruple form_x2_3y2(const mpz_class& n);
FormQuadruple sqrt3_form(const mpz_class& n);

// x^2 - xy + y^2 = q^2 + 3 p^2; returns (p, q).
std::pair<mpz_class, mpz_class> eisenstein_to_x2_3y2(const mpz_class& x, const mpz_class& y);

}  // namespace csq
