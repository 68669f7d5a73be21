#include "csq/two_squares.hpp"

#include <optional>

#include "csq/numtheory.hpp"

namespace csq {

namespace {

const RingId& poly_base(const Value& v) {
  if (v.ring().kind() != RingKind::Polynomial) {
    throw Error(Errc::UnsupportedRing, "expected a polynomial, got an element of " + v.ring().name());
  }
  return v.ring().base();
}

// Characteristic != 2 and -1 a non-square in the base field.
void require_split_free_field(const Value& m) {
  const RingId& f = poly_base(m);
  if (f.kind() == RingKind::Rationals) return;
  const mpz_class& p = f.modulus();
  if (p == 2) throw Error(Errc::BadField, "characteristic 2: sums of squares are the even polynomials");
  if (mod_floor(p, 4) == 1) throw Error(Errc::BadField, "-1 is a square in F_" + p.get_str());
}

// "Positive" leading coefficient: > 0 over Q, residue <= (p-1)/2 over F_p.
bool has_negative_lead(const Value& v) {
  if (v.is_zero()) return false;
  const RingId& f = poly_base(v);
  const mpq_class& lc = v.coeffs().back();
  if (f.kind() == RingKind::Rationals) return lc < 0;
  return 2 * lc.get_num() > f.modulus();
}

Value sum_of_squares(const Value& x, const Value& y) { return x * x + y * y; }

void require_prime_for_two_squares(const mpz_class& p) {
  if (!is_prime(p)) throw Error(Errc::PreconditionFailed, p.get_str() + " is not prime");
  if (mod_floor(p, 4) == 3) {
    throw Error(Errc::NotRepresentable, "not representable: " + p.get_str() + " == 3 (mod 4)");
  }
}

mpz_class normalized_root(const mpz_class& p, const mpz_class& z) {
  mpz_class r = mod_floor(z, p);
  if (mod_floor(r * r + 1, p) != 0) {
    throw Error(Errc::PreconditionFailed, z.get_str() + "^2 + 1 is not divisible by " + p.get_str());
  }
  if (2 * r > p) r = p - r;
  return r;
}

}  // namespace

mpz_class sqrt_minus_one_mod_p(const mpz_class& p) {
  if (!is_prime(p) || mod_floor(p, 4) != 1) {
    throw Error(Errc::NoSolution, "z^2 + 1 = 0 (mod " + p.get_str() + ") needs a prime p == 1 (mod 4)");
  }
  const mpz_class half = (p - 1) / 2;
  const mpz_class quarter = (p - 1) / 4;
  for (mpz_class a = 2; a < p; ++a) {
    if (powmod(a, half, p) == p - 1) {
      mpz_class z = powmod(a, quarter, p);
      if (2 * z > p) z = p - z;
      return z;
    }
  }
  throw Error(Errc::InternalInvariant, "no quadratic non-residue found");
}

TwoSquaresRep brillhart_two_squares(const mpz_class& p) {
  if (p == 2) {
    const Value one = Value::integer(1);
    return {one, one, one};
  }
  require_prime_for_two_squares(p);
  return brillhart_two_squares(p, sqrt_minus_one_mod_p(p));
}

TwoSquaresRep brillhart_two_squares(const mpz_class& p, const mpz_class& z) {
  if (p == 2) return brillhart_two_squares(p);
  require_prime_for_two_squares(p);
  const mpz_class root = normalized_root(p, z);

  EuclidTrace t = euclid_until(Value::integer(p), Value::integer(root), stop_square_below(p));
  ensure(!t.complete, Errc::InternalInvariant, "no remainder below sqrt(p)");
  const std::size_t k = t.remainders.size() - 1;
  const Value& x = t.remainders[k];
  const Value y = euclidean_divide(t.remainders[k - 1], x).remainder;

  const mpz_class& xi = x.as_integer();
  const mpz_class& yi = y.as_integer();
  ensure(xi * xi + yi * yi == p, Errc::InternalInvariant, "Brillhart: p != x^2 + y^2");
  ensure(yi < xi && xi * xi < p, Errc::InternalInvariant, "Brillhart: y < x < sqrt(p) violated");
  return {x, y, Value::integer(1)};
}

SmithResult smith_two_squares(const mpz_class& p) {
  require_prime_for_two_squares(p);
  if (p == 2) throw Error(Errc::PreconditionFailed, "Smith's palindrome needs p == 1 (mod 4)");
  return smith_two_squares(p, sqrt_minus_one_mod_p(p));
}

SmithResult smith_two_squares(const mpz_class& p, const mpz_class& z) {
  require_prime_for_two_squares(p);
  if (p == 2) throw Error(Errc::PreconditionFailed, "Smith's palindrome needs p == 1 (mod 4)");
  const mpz_class root = normalized_root(p, z);
  const RingId zz = RingId::integers();

  EuclidTrace t = euclidean_algorithm(Value::integer(p), Value::integer(root));
  const auto& q = t.quotients;
  if (q.size() % 2 != 0 || !is_palindromic(q)) {
    throw Error(Errc::PalindromeViolation, "quotients of (p, z) are not an even-length palindrome");
  }
  std::span<const Value> items(q);
  const std::size_t s = q.size() / 2;
  Value x = continuant(zz, items.first(s));
  Value y = continuant(zz, items.first(s - 1));
  ensure(continuant(zz, items) == Value::integer(p), Errc::InternalInvariant, "Smith: [Q] != p");
  ensure(sum_of_squares(x, y) == Value::integer(p), Errc::InternalInvariant, "Smith: p != x^2 + y^2");
  return {QuotientSeq(zz, q, t.gcd), canonicalize({x, y, Value::integer(1)})};
}

MultiplierResult multiplier_from_representation(const Value& x0, const Value& y0) {
  require_same_ring(x0, y0);
  const RingId& r = x0.ring();
  if (!r.is_euclidean()) throw Error(Errc::UnsupportedRing, "multiplier needs a commutative Euclidean ring");
  if (x0.is_zero() && y0.is_zero()) throw Error(Errc::NotCoprime, "x and y are both zero");

  const bool swap = euclidean_norm(x0) < euclidean_norm(y0);
  const Value& x = swap ? y0 : x0;
  const Value& y = swap ? x0 : y0;
  const Value m = sum_of_squares(x, y);

  EuclidTrace t = euclidean_algorithm(x, y);
  const Value& h = t.gcd;
  if (!is_unit(h)) throw Error(Errc::NotCoprime, "x and y are not coprime");
  if (t.quotients.empty()) {
    // y = 0 and x is a unit: m is a unit and any z works.
    Value z = Value::zero(r);
    return {z, inverse(m)};
  }

  const auto& q = t.quotients;
  const std::size_t s = q.size();
  std::vector<Value> zseq, wseq;
  for (std::size_t k = s; k-- > 0;) zseq.push_back(q[k]);
  for (std::size_t k = 0; k + 1 < s; ++k) zseq.push_back(q[k]);
  for (std::size_t k = s - 1; k-- > 0;) wseq.push_back(q[k]);
  for (std::size_t k = 0; k + 1 < s; ++k) wseq.push_back(q[k]);

  Value z = continuant(r, zseq);
  Value w = continuant(r, wseq) * inverse(h * h);
  ensure(z * z + Value::one(r) == m * w, Errc::InternalInvariant, "z^2 + 1 != (x^2 + y^2) w");
  return {z, w};
}

std::pair<Value, Value> split_when_i_exists(const Value& x, const Value& k) {
  require_same_ring(x, k);
  const RingId& r = x.ring();
  if (!r.is_commutative()) throw Error(Errc::NoncommutativeRing, "needs a commutative ring");
  const Value one = Value::one(r);
  if (k * k != -one) throw Error(Errc::PreconditionFailed, "k^2 != -1");
  if (r.kind() == RingKind::Gaussian && mpz_odd_p(x.pair()[1].get_mpz_t())) {
    throw Error(Errc::UnitNotSumOfSquares,
                "a Gaussian integer with odd imaginary part is not a sum of two squares");
  }
  const Value two = Value::from_int(r, 2);
  if (two.is_zero()) throw Error(Errc::PreconditionFailed, "2 is not invertible in characteristic 2");

  auto halve = [&](const Value& num, const Value& den) {
    if (is_unit(den)) return num * inverse(den);
    if (!r.is_euclidean()) throw Error(Errc::PreconditionFailed, "2 is not invertible");
    DivResult d = euclidean_divide(num, den);
    if (!d.remainder.is_zero()) throw Error(Errc::PreconditionFailed, "2 is not invertible here");
    return d.quotient;
  };
  Value a = halve(x + one, two);
  Value b = halve(x - one, two * k);
  ensure(a * a + b * b == x, Errc::InternalInvariant, "a^2 + b^2 != x");
  return {a, b};
}

PolyTwoSquaresResult poly_two_squares_detailed(const Value& m, const Value& z) {
  require_same_ring(m, z);
  require_split_free_field(m);
  const RingId& r = m.ring();
  const Value one = Value::one(r);
  if (m.degree() < 1) throw Error(Errc::DegreeError, "m must be a non-constant polynomial");
  if (z.degree() >= m.degree()) throw Error(Errc::DegreeError, "need deg z < deg m");
  if (!euclidean_divide(z * z + one, m).remainder.is_zero()) {
    throw Error(Errc::NotADivisor, "m does not divide z^2 + 1");
  }
  if (m.degree() % 2 != 0) throw Error(Errc::DegreeError, "a divisor of z^2 + 1 must have even degree");

  EuclidTrace t = euclidean_algorithm(m, z);
  const Value u = t.gcd;
  ensure(is_unit(u), Errc::InternalInvariant, "gcd(m, z) is not a constant");
  const std::size_t n = t.quotients.size();
  if (n % 2 != 0) throw Error(Errc::PalindromeViolation, "odd number of quotients");

  // The quotients are a palindrome rescaled by alternating powers of a
  // constant; find the constant among u, 1/u.
  std::optional<std::vector<Value>> palindrome;
  const QuotientSeq raw(r, t.quotients, u);
  for (const Value& tau : {u, inverse(u)}) {
    QuotientSeq scaled = zigzag_rescale(raw, tau);
    if (is_palindromic(scaled.items)) {
      palindrome = std::move(scaled.items);
      break;
    }
  }
  if (!palindrome) throw Error(Errc::PalindromeViolation, "rescaled quotients are not palindromic");

  std::span<const Value> items(*palindrome);
  const std::size_t s = n / 2;
  Value x = continuant(r, items.first(s));
  Value y = continuant(r, items.first(s - 1));
  ensure(sum_of_squares(x, y) * u == m, Errc::InternalInvariant, "m != (x^2 + y^2) u");

  // Early stop at the first remainder of degree <= deg(m)/2; it is the
  // (s-1)-th remainder after z and equals x up to the unit.
  EuclidTrace early = euclid_until(m, z, stop_half_degree(m.degree()));
  ensure(!early.complete && early.remainders.size() - 1 == s, Errc::InternalInvariant,
         "early stop at an unexpected remainder");
  Value shortcut = s % 2 == 1 ? early.gcd : inverse(u) * early.gcd;
  ensure(shortcut == x || shortcut == -x, Errc::InternalInvariant, "early-stop x disagrees with continuant x");

  return {canonicalize({x, y, u}), std::move(t), std::move(*palindrome)};
}

TwoSquaresRep poly_two_squares(const Value& m, const Value& z) { return poly_two_squares_detailed(m, z).rep; }

// ---------------------------------------------------------------------------
// Polynomials over G = F(w), w^2 = -1. Coefficients are pairs (re, im) of
// base-field values.

namespace {

struct GCoef {
  Value re;
  Value im;
};

using GPoly = std::vector<GCoef>;

mpq_class base_rational(const Value& c) {
  return c.ring().kind() == RingKind::Rationals ? c.as_rational() : mpq_class(c.as_integer());
}

// A base-field element as a constant polynomial of r.
Value lift(const RingId& r, const Value& c) { return Value::from_rational(r, base_rational(c)); }

bool g_is_zero(const GCoef& c) { return c.re.is_zero() && c.im.is_zero(); }

void g_strip(GPoly& p) {
  while (!p.empty() && g_is_zero(p.back())) p.pop_back();
}

GCoef g_mul(const GCoef& a, const GCoef& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GCoef g_inverse(const GCoef& a) {
  // a^2 + b^2 != 0 because -1 is not a square in F.
  Value norm_inv = inverse(a.re * a.re + a.im * a.im);
  return {a.re * norm_inv, -(a.im * norm_inv)};
}

GPoly g_from(const Value& re, const Value& im) {
  std::size_t len = std::max(re.coeffs().size(), im.coeffs().size());
  GPoly out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back({re.coefficient(k), im.coefficient(k)});
  g_strip(out);
  return out;
}

GPoly g_remainder(GPoly a, const GPoly& b) {
  const GCoef lead_inv = g_inverse(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const GCoef c = g_mul(a.back(), lead_inv);
    for (std::size_t k = 0; k < b.size(); ++k) {
      GCoef prod = g_mul(c, b[k]);
      a[shift + k] = {a[shift + k].re - prod.re, a[shift + k].im - prod.im};
    }
    g_strip(a);
  }
  return a;
}

GPoly g_monic_gcd(GPoly a, GPoly b) {
  while (!b.empty()) {
    GPoly r = g_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  const GCoef lead_inv = g_inverse(a.back());
  for (auto& c : a) c = g_mul(c, lead_inv);
  return a;
}

}  // namespace

TwoSquaresRep poly_two_squares_gcd(const Value& m, const Value& z, const Value& t) {
  require_same_ring(m, z);
  require_same_ring(m, t);
  require_split_free_field(m);
  const RingId& r = m.ring();
  if (m.degree() < 1) throw Error(Errc::DegreeError, "m must be a non-constant polynomial");
  if (!is_unit(gcd(z, t))) throw Error(Errc::NotCoprime, "z and t are not coprime");
  if (!euclidean_divide(z * z + t * t, m).remainder.is_zero()) {
    throw Error(Errc::NotADivisor, "m does not divide z^2 + t^2");
  }

  GPoly g = g_monic_gcd(g_from(m, Value::zero(r)), g_from(z, t));
  PolyCoeffs re, im;
  for (const auto& c : g) {
    re.push_back(base_rational(c.re));
    im.push_back(base_rational(c.im));
  }
  Value x{r, std::move(re)};
  Value y{r, std::move(im)};

  if (x.degree() < y.degree()) std::swap(x, y);
  if (x.degree() == y.degree()) {
    // x = lambda y + rest with deg rest < deg y; then
    // x^2 + y^2 = (((1 + lambda^2) y + lambda rest)^2 + rest^2) / (1 + lambda^2).
    const Value lambda = lift(r, x.leading_coefficient() * inverse(y.leading_coefficient()));
    const Value rest = x - lambda * y;
    const Value scale = Value::one(r) + lambda * lambda;
    ensure(!scale.is_zero(), Errc::InternalInvariant, "1 + lambda^2 vanished");
    x = scale * y + lambda * rest;
    y = rest;
  }
  const Value u = divide_exact(m, sum_of_squares(x, y));
  ensure(u.degree() == 0, Errc::InternalInvariant, "m is not an associate of x^2 + y^2");
  ensure(is_unit(gcd(x, y)), Errc::InternalInvariant, "x and y are not coprime");
  return canonicalize({x, y, u});
}

TwoSquaresRep unit_absorb(const TwoSquaresRep& rep) {
  const Value& u = rep.unit;
  if (u.is_one()) return rep;
  const RingId& r = u.ring();
  std::optional<std::pair<Value, Value>> cd;

  switch (r.kind()) {
    case RingKind::Integers:
      break;  // u = -1 is not a sum of two squares
    case RingKind::Gaussian: {
      if (mpz_odd_p(u.pair()[1].get_mpz_t())) {
        throw Error(Errc::UnitNotSumOfSquares,
                    "unit " + std::string(u.pair()[1] > 0 ? "i" : "-i") +
                        " has odd imaginary part; sums of squares in Z[i] have even imaginary part");
      }
      if (u == -Value::one(r)) cd = std::pair{Value::gaussian(0, 1), Value::zero(r)};
      break;
    }
    case RingKind::Polynomial: {
      const RingId& f = r.base();
      if (f.kind() == RingKind::Rationals) {
        const mpq_class q = u.coeffs()[0];
        if (q <= 0) break;
        const mpz_class target = q.get_num() * q.get_den();
        const mpz_class& den = q.get_den();
        constexpr unsigned long kSearchLimit = 10'000'000;
        for (mpz_class d = 0; 2 * d * d <= target && d < kSearchLimit; ++d) {
          bool square = false;
          mpz_class c = isqrt(target - d * d, &square);
          if (square) {
            cd = std::pair{Value::from_rational(r, mpq_class(c, den)), Value::from_rational(r, mpq_class(d, den))};
            break;
          }
        }
      } else {
        const mpz_class& p = f.modulus();
        const mpz_class target = u.coeffs()[0].get_num();
        for (mpz_class d = 0; d < p && !cd; ++d) {
          for (mpz_class c = 0; c < p; ++c) {
            if (mod_floor(c * c + d * d - target, p) == 0) {
              cd = std::pair{Value::from_int(r, c), Value::from_int(r, d)};
              break;
            }
          }
        }
      }
      break;
    }
    default:
      throw Error(Errc::UnsupportedRing, "unit absorption is not defined on " + r.name());
  }
  if (!cd) throw Error(Errc::UnitNotSumOfSquares, "unit is not a sum of two squares");

  const auto& [c, d] = *cd;
  Value x = c * rep.x + d * rep.y;
  Value y = d * rep.x - c * rep.y;
  ensure(sum_of_squares(x, y) == sum_of_squares(rep.x, rep.y) * u, Errc::InternalInvariant,
         "unit absorption changed the value");
  if (r.kind() == RingKind::Polynomial) {
    if (has_negative_lead(x)) x = -x;
    if (has_negative_lead(y)) y = -y;
  }
  return {x, y, Value::one(r)};
}

CyclotomicRep cyclotomic_rep(const mpz_class& p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::PreconditionFailed, "cyclotomic_rep needs an odd prime");
  if (!p.fits_ulong_p() || p > 100000) throw Error(Errc::PreconditionFailed, "prime too large");
  const unsigned long n = p.get_ui();
  const RingId qx = RingId::polynomials(RingId::rationals());
  PolyCoeffs phi(2 * n - 1, mpq_class(0)), x(n, mpq_class(0)), y(n - 1, mpq_class(0));
  for (unsigned long k = 0; k < n; ++k) phi[2 * k] = (k % 2 == 0) ? 1 : -1;
  for (unsigned long k = 0; k <= (n - 1) / 2; ++k) x[2 * k] = (k % 2 == 0) ? 1 : -1;
  for (unsigned long k = 0; k <= (n - 3) / 2; ++k) y[2 * k + 1] = (k % 2 == 0) ? 1 : -1;

  Value vphi{qx, std::move(phi)};
  Value vx{qx, std::move(x)};
  Value vy{qx, std::move(y)};
  ensure(vphi == sum_of_squares(vx, vy), Errc::InternalInvariant, "Phi_4p != x^2 + y^2");
  if (has_negative_lead(vx)) vx = -vx;
  if (has_negative_lead(vy)) vy = -vy;
  return {p, vphi, vx, vy};
}

bool verify_two_squares(const Value& m, const TwoSquaresRep& rep) {
  require_same_ring(m, rep.x);
  require_same_ring(m, rep.y);
  require_same_ring(m, rep.unit);
  if (sum_of_squares(rep.x, rep.y) * rep.unit != m) return false;
  if (rep.x.is_zero() && rep.y.is_zero()) return false;
  return is_unit(gcd(rep.x, rep.y));
}

TwoSquaresRep canonicalize(const TwoSquaresRep& rep) {
  TwoSquaresRep out = rep;
  switch (rep.x.ring().kind()) {
    case RingKind::Integers: {
      mpz_class a = abs(rep.x.as_integer());
      mpz_class b = abs(rep.y.as_integer());
      if (a < b) std::swap(a, b);
      out.x = Value::integer(a);
      out.y = Value::integer(b);
      break;
    }
    case RingKind::Polynomial: {
      if (out.x.degree() < out.y.degree()) std::swap(out.x, out.y);
      if (!out.x.is_zero()) {
        const RingId& r = out.x.ring();
        const Value lc = Value::from_rational(r, out.x.coeffs().back());
        const Value lc_inv = inverse(lc);
        out.x = out.x * lc_inv;
        out.y = out.y * lc_inv;
        out.unit = out.unit * lc * lc;
      }
      if (has_negative_lead(out.y)) out.y = -out.y;
      break;
    }
    default:
      break;
  }
  return out;
}

bool same_up_to_associates(const TwoSquaresRep& a, const TwoSquaresRep& b) {
  const TwoSquaresRep ca = canonicalize(a);
  const TwoSquaresRep cb = canonicalize(b);
  return ca.x == cb.x && ca.unit == cb.unit && (ca.y == cb.y || ca.y == -cb.y);
}

}  // namespace csq
