#include "csq/ring.hpp"

#include <algorithm>
#include <utility>

#include "csq/numtheory.hpp"

namespace csq {

// ---------------------------------------------------------------------------
// RingId

RingId RingId::integers() {
  static const RingId r{std::make_shared<const Desc>(Desc{RingKind::Integers, 0, nullptr})};
  return r;
}

RingId RingId::rationals() {
  static const RingId r{std::make_shared<const Desc>(Desc{RingKind::Rationals, 0, nullptr})};
  return r;
}

RingId RingId::gaussian() {
  static const RingId r{std::make_shared<const Desc>(Desc{RingKind::Gaussian, 0, nullptr})};
  return r;
}

RingId RingId::eisenstein() {
  static const RingId r{std::make_shared<const Desc>(Desc{RingKind::Eisenstein, 0, nullptr})};
  return r;
}

RingId RingId::zsqrt3() {
  static const RingId r{std::make_shared<const Desc>(Desc{RingKind::ZSqrt3, 0, nullptr})};
  return r;
}

RingId RingId::int_matrix2() {
  static const RingId r{std::make_shared<const Desc>(Desc{RingKind::IntMatrix2, 0, nullptr})};
  return r;
}

RingId RingId::prime_field(const mpz_class& p) {
  if (!is_prime(p)) {
    throw Error(Errc::PreconditionFailed, "F_p requires a prime modulus, got " + p.get_str());
  }
  return RingId{std::make_shared<const Desc>(Desc{RingKind::PrimeField, p, nullptr})};
}

RingId RingId::polynomials(const RingId& base) {
  if (!base.is_field()) {
    throw Error(Errc::UnsupportedRing, "polynomial base must be F_p or Q, got " + base.name());
  }
  return RingId{std::make_shared<const Desc>(
      Desc{RingKind::Polynomial, 0, std::make_shared<const RingId>(base)})};
}

const mpz_class& RingId::modulus() const {
  if (kind() != RingKind::PrimeField) throw Error(Errc::UnsupportedRing, name() + " has no modulus");
  return desc_->modulus;
}

const RingId& RingId::base() const {
  if (kind() != RingKind::Polynomial) throw Error(Errc::UnsupportedRing, name() + " has no base field");
  return *desc_->base;
}

bool RingId::is_field() const noexcept {
  return kind() == RingKind::PrimeField || kind() == RingKind::Rationals;
}

bool RingId::has_conjugation() const noexcept {
  switch (kind()) {
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
    case RingKind::IntMatrix2:
      return true;
    default:
      return false;
  }
}

mpz_class RingId::characteristic() const {
  switch (kind()) {
    case RingKind::PrimeField:
      return desc_->modulus;
    case RingKind::Polynomial:
      return base().characteristic();
    default:
      return 0;
  }
}

std::string RingId::name() const {
  switch (kind()) {
    case RingKind::Integers:
      return "Z";
    case RingKind::PrimeField:
      return "F:" + desc_->modulus.get_str();
    case RingKind::Rationals:
      return "Q";
    case RingKind::Polynomial:
      return base().name() + "[X]";
    case RingKind::Gaussian:
      return "Z[i]";
    case RingKind::Eisenstein:
      return "Z[w]";
    case RingKind::ZSqrt3:
      return "Z[s]";
    case RingKind::IntMatrix2:
      return "M2";
  }
  return "?";
}

bool operator==(const RingId& a, const RingId& b) {
  if (a.desc_ == b.desc_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RingKind::PrimeField:
      return a.desc_->modulus == b.desc_->modulus;
    case RingKind::Polynomial:
      return a.base() == b.base();
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Field scalars inside polynomial payloads

namespace {

bool is_prime_field(const RingId& f) { return f.kind() == RingKind::PrimeField; }

mpq_class field_reduce(const RingId& f, const mpq_class& x) {
  if (!is_prime_field(f)) {
    mpq_class y = x;
    y.canonicalize();
    return y;
  }
  const mpz_class& p = f.modulus();
  mpz_class num = mod_floor(x.get_num(), p);
  mpz_class den = mod_floor(x.get_den(), p);
  if (den == 0) throw Error(Errc::DivisionByZero, "denominator vanishes mod " + p.get_str());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return mpq_class(mod_floor(num * inv, p));
}

mpq_class field_inverse(const RingId& f, const mpq_class& x) {
  if (x == 0) throw Error(Errc::NotAUnit, "zero has no inverse");
  if (!is_prime_field(f)) return 1 / x;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), x.get_num().get_mpz_t(), f.modulus().get_mpz_t());
  return mpq_class(inv);
}

void strip(PolyCoeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyCoeffs poly_add(const RingId& f, const PolyCoeffs& a, const PolyCoeffs& b, bool subtract) {
  PolyCoeffs out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    mpq_class x = k < a.size() ? a[k] : mpq_class(0);
    mpq_class y = k < b.size() ? b[k] : mpq_class(0);
    out[k] = field_reduce(f, subtract ? mpq_class(x - y) : mpq_class(x + y));
  }
  strip(out);
  return out;
}

PolyCoeffs poly_mul(const RingId& f, const PolyCoeffs& a, const PolyCoeffs& b) {
  if (a.empty() || b.empty()) return {};
  PolyCoeffs out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  for (auto& c : out) c = field_reduce(f, c);
  strip(out);
  return out;
}

void require_kind(const Value& v, bool ok, const char* what) {
  if (!ok) throw Error(Errc::UnsupportedRing, std::string(what) + " is not defined on " + v.ring().name());
}

template <class T>
const T& payload_as(const Value::Payload& p, const RingId& ring) {
  const T* v = std::get_if<T>(&p);
  if (!v) throw Error(Errc::UnsupportedRing, "payload does not match ring " + ring.name());
  return *v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Value

Value::Value(RingId ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {
  normalize();
}

void Value::normalize() {
  switch (ring_.kind()) {
    case RingKind::Integers:
      payload_as<mpz_class>(payload_, ring_);
      break;
    case RingKind::PrimeField: {
      payload_as<mpz_class>(payload_, ring_);
      auto& n = std::get<mpz_class>(payload_);
      n = mod_floor(n, ring_.modulus());
      break;
    }
    case RingKind::Rationals:
      if (auto* z = std::get_if<mpz_class>(&payload_)) payload_ = mpq_class(*z);
      payload_as<mpq_class>(payload_, ring_);
      std::get<mpq_class>(payload_).canonicalize();
      break;
    case RingKind::Polynomial: {
      payload_as<PolyCoeffs>(payload_, ring_);
      auto& c = std::get<PolyCoeffs>(payload_);
      for (auto& x : c) x = field_reduce(ring_.base(), x);
      strip(c);
      break;
    }
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      payload_as<Pair>(payload_, ring_);
      break;
    case RingKind::IntMatrix2:
      payload_as<Mat2>(payload_, ring_);
      break;
  }
}

Value Value::zero(const RingId& ring) { return from_int(ring, 0); }

Value Value::one(const RingId& ring) { return from_int(ring, 1); }

Value Value::from_int(const RingId& ring, const mpz_class& n) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return {ring, n};
    case RingKind::Rationals:
      return {ring, mpq_class(n)};
    case RingKind::Polynomial:
      return {ring, PolyCoeffs{mpq_class(n)}};
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      return {ring, Pair{n, 0}};
    case RingKind::IntMatrix2:
      return {ring, Mat2{n, 0, 0, n}};
  }
  throw Error(Errc::UnsupportedRing, "unknown ring");
}

Value Value::from_rational(const RingId& ring, const mpq_class& q) {
  switch (ring.kind()) {
    case RingKind::Rationals:
      return {ring, q};
    case RingKind::PrimeField:
      return {ring, mpz_class(field_reduce(ring, q).get_num())};
    case RingKind::Polynomial:
      return {ring, PolyCoeffs{q}};
    default:
      if (q.get_den() != 1) {
        throw Error(Errc::UnsupportedRing, "non-integral rational in " + ring.name());
      }
      return from_int(ring, q.get_num());
  }
}

Value Value::variable(const RingId& base) {
  return {RingId::polynomials(base), PolyCoeffs{0, 1}};
}

const mpz_class& Value::as_integer() const {
  require_kind(*this, ring_.kind() == RingKind::Integers || ring_.kind() == RingKind::PrimeField,
               "integer view");
  return std::get<mpz_class>(payload_);
}

const mpq_class& Value::as_rational() const {
  require_kind(*this, ring_.kind() == RingKind::Rationals, "rational view");
  return std::get<mpq_class>(payload_);
}

const PolyCoeffs& Value::coeffs() const {
  require_kind(*this, ring_.kind() == RingKind::Polynomial, "coefficient view");
  return std::get<PolyCoeffs>(payload_);
}

const Pair& Value::pair() const {
  require_kind(*this, std::holds_alternative<Pair>(payload_), "pair view");
  return std::get<Pair>(payload_);
}

const Mat2& Value::mat() const {
  require_kind(*this, ring_.kind() == RingKind::IntMatrix2, "matrix view");
  return std::get<Mat2>(payload_);
}

bool Value::is_zero() const { return *this == zero(ring_); }

bool Value::is_one() const { return *this == one(ring_); }

int Value::degree() const {
  if (ring_.kind() != RingKind::Polynomial) return 0;
  return static_cast<int>(coeffs().size()) - 1;
}

Value Value::coefficient(std::size_t k) const {
  const RingId& f = ring_.base();
  const auto& c = coeffs();
  mpq_class x = k < c.size() ? c[k] : mpq_class(0);
  return from_rational(f, x);
}

Value Value::leading_coefficient() const {
  if (ring_.kind() != RingKind::Polynomial) return *this;
  if (coeffs().empty()) return zero(ring_.base());
  return coefficient(coeffs().size() - 1);
}

void require_same_ring(const Value& a, const Value& b) {
  if (a.ring() != b.ring()) {
    throw Error(Errc::RingMismatch, "ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  }
}

Value Value::operator-() const { return zero(ring_) - *this; }

Value operator+(const Value& a, const Value& b) {
  require_same_ring(a, b);
  const RingId& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return {r, mpz_class(a.as_integer() + b.as_integer())};
    case RingKind::Rationals:
      return {r, mpq_class(a.as_rational() + b.as_rational())};
    case RingKind::Polynomial:
      return {r, poly_add(r.base(), a.coeffs(), b.coeffs(), false)};
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3: {
      const auto &x = a.pair(), &y = b.pair();
      return {r, Pair{x[0] + y[0], x[1] + y[1]}};
    }
    case RingKind::IntMatrix2: {
      const auto &x = a.mat(), &y = b.mat();
      return {r, Mat2{x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}};
    }
  }
  throw Error(Errc::UnsupportedRing, "unknown ring");
}

Value operator-(const Value& a, const Value& b) {
  require_same_ring(a, b);
  const RingId& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return {r, mpz_class(a.as_integer() - b.as_integer())};
    case RingKind::Rationals:
      return {r, mpq_class(a.as_rational() - b.as_rational())};
    case RingKind::Polynomial:
      return {r, poly_add(r.base(), a.coeffs(), b.coeffs(), true)};
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3: {
      const auto &x = a.pair(), &y = b.pair();
      return {r, Pair{x[0] - y[0], x[1] - y[1]}};
    }
    case RingKind::IntMatrix2: {
      const auto &x = a.mat(), &y = b.mat();
      return {r, Mat2{x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]}};
    }
  }
  throw Error(Errc::UnsupportedRing, "unknown ring");
}

Value operator*(const Value& a, const Value& b) {
  require_same_ring(a, b);
  const RingId& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return {r, mpz_class(a.as_integer() * b.as_integer())};
    case RingKind::Rationals:
      return {r, mpq_class(a.as_rational() * b.as_rational())};
    case RingKind::Polynomial:
      return {r, poly_mul(r.base(), a.coeffs(), b.coeffs())};
    case RingKind::Gaussian: {
      const auto &x = a.pair(), &y = b.pair();
      return {r, Pair{x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]}};
    }
    case RingKind::Eisenstein: {
      // j^2 = -1 - j
      const auto &x = a.pair(), &y = b.pair();
      mpz_class bd = x[1] * y[1];
      return {r, Pair{x[0] * y[0] - bd, x[0] * y[1] + x[1] * y[0] - bd}};
    }
    case RingKind::ZSqrt3: {
      const auto &x = a.pair(), &y = b.pair();
      return {r, Pair{x[0] * y[0] + 3 * x[1] * y[1], x[0] * y[1] + x[1] * y[0]}};
    }
    case RingKind::IntMatrix2: {
      const auto &x = a.mat(), &y = b.mat();
      return {r, Mat2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                      x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]}};
    }
  }
  throw Error(Errc::UnsupportedRing, "unknown ring");
}

bool operator==(const Value& a, const Value& b) {
  return a.ring() == b.ring() && a.payload() == b.payload();
}

// ---------------------------------------------------------------------------
// Euclidean structure

mpz_class star_norm_integer(const Value& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return a.as_integer() * a.as_integer();
    case RingKind::Gaussian: {
      const auto& x = a.pair();
      return x[0] * x[0] + x[1] * x[1];
    }
    case RingKind::Eisenstein: {
      const auto& x = a.pair();
      return x[0] * x[0] - x[0] * x[1] + x[1] * x[1];
    }
    case RingKind::ZSqrt3: {
      const auto& x = a.pair();
      return x[0] * x[0] - 3 * x[1] * x[1];
    }
    default:
      throw Error(Errc::UnsupportedRing, "integer star norm is not defined on " + a.ring().name());
  }
}

mpz_class euclidean_norm(const Value& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return abs(a.as_integer());
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return a.is_zero() ? 0 : 1;
    case RingKind::Polynomial: {
      if (a.is_zero()) return 0;
      mpz_class r;
      mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(a.degree()));
      return r;
    }
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      return abs(star_norm_integer(a));
    case RingKind::IntMatrix2:
      break;
  }
  throw Error(Errc::UnsupportedRing, "no Euclidean function on " + a.ring().name());
}

Value conjugate(const Value& a) {
  const RingId& r = a.ring();
  switch (r.kind()) {
    case RingKind::Gaussian:
    case RingKind::ZSqrt3: {
      const auto& x = a.pair();
      return {r, Pair{x[0], -x[1]}};
    }
    case RingKind::Eisenstein: {
      // conj(j) = j^2 = -1 - j
      const auto& x = a.pair();
      return {r, Pair{x[0] - x[1], -x[1]}};
    }
    case RingKind::IntMatrix2: {
      const auto& m = a.mat();
      return {r, Mat2{m[3], -m[1], -m[2], m[0]}};
    }
    default:
      return a;
  }
}

Value star_norm(const Value& a) { return a * conjugate(a); }

bool is_unit(const Value& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
      return abs(a.as_integer()) == 1;
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return !a.is_zero();
    case RingKind::Polynomial:
      return a.degree() == 0;
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      return abs(star_norm_integer(a)) == 1;
    case RingKind::IntMatrix2: {
      const auto& m = a.mat();
      return abs(m[0] * m[3] - m[1] * m[2]) == 1;
    }
  }
  return false;
}

Value inverse(const Value& a) {
  if (!is_unit(a)) throw Error(Errc::NotAUnit, "not a unit in " + a.ring().name());
  const RingId& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      return a;
    case RingKind::PrimeField:
      return {r, mpz_class(field_inverse(r, mpq_class(a.as_integer())).get_num())};
    case RingKind::Rationals:
      return {r, mpq_class(1 / a.as_rational())};
    case RingKind::Polynomial:
      return {r, PolyCoeffs{field_inverse(r.base(), a.coeffs()[0])}};
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      // a * conj(a) = N(a) = +-1
      return conjugate(a) * Value::from_int(r, star_norm_integer(a));
    case RingKind::IntMatrix2: {
      const auto& m = a.mat();
      mpz_class det = m[0] * m[3] - m[1] * m[2];
      return conjugate(a) * Value::from_int(r, det);
    }
  }
  throw Error(Errc::UnsupportedRing, "unknown ring");
}

namespace {

// Nearest integer to n/d (d > 0), ties toward zero.
mpz_class round_half_toward_zero(const mpz_class& n, const mpz_class& d) {
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  int c = cmp(2 * rem, d);
  if (c > 0) return q + 1;
  if (c == 0 && q < 0) return q + 1;
  return q;
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

DivResult divide_lattice(const Value& a, const Value& b) {
  const RingId& r = a.ring();
  // a/b = a * conj(b) / N(b), exact rational coordinates num[k]/den.
  Pair num = (a * conjugate(b)).pair();
  mpz_class den = star_norm_integer(b);
  if (den < 0) {
    den = -den;
    num[0] = -num[0];
    num[1] = -num[1];
  }

  if (r.kind() == RingKind::Gaussian) {
    Value q{r, Pair{round_half_toward_zero(num[0], den), round_half_toward_zero(num[1], den)}};
    return {q, a - q * b};
  }

  std::array<mpz_class, 2> lo{floor_div(num[0], den), floor_div(num[1], den)};
  std::array<mpz_class, 2> hi{ceil_div(num[0], den), ceil_div(num[1], den)};
  bool found = false;
  mpz_class best_norm;
  Pair best_q;
  for (const mpz_class& q0 : {lo[0], hi[0]}) {
    for (const mpz_class& q1 : {lo[1], hi[1]}) {
      Value q{r, Pair{q0, q1}};
      mpz_class n = euclidean_norm(a - q * b);
      bool better = !found || n < best_norm ||
                    (n == best_norm && (q0 < best_q[0] || (q0 == best_q[0] && q1 < best_q[1])));
      if (better) {
        found = true;
        best_norm = n;
        best_q = {q0, q1};
      }
    }
  }
  Value q{r, best_q};
  return {q, a - q * b};
}

DivResult divide_poly(const Value& a, const Value& b) {
  const RingId& r = a.ring();
  const RingId& f = r.base();
  PolyCoeffs rem = a.coeffs();
  const PolyCoeffs& d = b.coeffs();
  if (rem.size() < d.size()) return {Value::zero(r), a};
  PolyCoeffs quot(rem.size() - d.size() + 1, mpq_class(0));
  mpq_class lead_inv = field_inverse(f, d.back());
  while (rem.size() >= d.size() && !rem.empty()) {
    std::size_t shift = rem.size() - d.size();
    mpq_class c = field_reduce(f, rem.back() * lead_inv);
    quot[shift] = c;
    for (std::size_t k = 0; k < d.size(); ++k) {
      rem[shift + k] = field_reduce(f, rem[shift + k] - c * d[k]);
    }
    strip(rem);
  }
  return {Value{r, std::move(quot)}, Value{r, std::move(rem)}};
}

}  // namespace

DivResult euclidean_divide(const Value& a, const Value& b) {
  require_same_ring(a, b);
  const RingId& r = a.ring();
  if (!r.is_euclidean()) throw Error(Errc::UnsupportedRing, "no Euclidean division on " + r.name());
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in " + r.name());

  DivResult out{a, a};
  switch (r.kind()) {
    case RingKind::Integers: {
      mpz_class rem = mod_floor(a.as_integer(), abs(b.as_integer()));
      out = {Value{r, mpz_class((a.as_integer() - rem) / b.as_integer())}, Value{r, rem}};
      break;
    }
    case RingKind::PrimeField:
    case RingKind::Rationals:
      out = {a * inverse(b), Value::zero(r)};
      break;
    case RingKind::Polynomial:
      out = divide_poly(a, b);
      break;
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      out = divide_lattice(a, b);
      break;
    case RingKind::IntMatrix2:
      break;
  }
  ensure(out.quotient * b + out.remainder == a, Errc::InternalInvariant, "division identity");
  ensure(euclidean_norm(out.remainder) < euclidean_norm(b), Errc::InternalInvariant,
         "remainder norm not reduced");
  return out;
}

Value divide_exact(const Value& a, const Value& b) {
  DivResult d = euclidean_divide(a, b);
  if (!d.remainder.is_zero()) throw Error(Errc::NotADivisor, "inexact division in " + a.ring().name());
  return d.quotient;
}

Value monic(const Value& a) {
  switch (a.ring().kind()) {
    case RingKind::Polynomial:
      if (a.is_zero()) return a;
      return a * Value{a.ring(), PolyCoeffs{field_inverse(a.ring().base(), a.coeffs().back())}};
    case RingKind::Integers:
      return Value{a.ring(), mpz_class(abs(a.as_integer()))};
    case RingKind::PrimeField:
    case RingKind::Rationals:
      return a.is_zero() ? a : Value::one(a.ring());
    default:
      return a;
  }
}

Value gcd(const Value& a, const Value& b) {
  require_same_ring(a, b);
  Value x = a, y = b;
  while (!y.is_zero()) {
    Value r = euclidean_divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Value shift(const Value& poly, unsigned k) {
  PolyCoeffs c = poly.coeffs();
  if (c.empty()) return poly;
  c.insert(c.begin(), k, mpq_class(0));
  return {poly.ring(), std::move(c)};
}

}  // namespace csq
