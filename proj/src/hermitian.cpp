#include "csq/hermitian.hpp"

#include <algorithm>
#include <tuple>

#include "csq/continuant.hpp"
#include "csq/euclid.hpp"
#include "csq/numtheory.hpp"

namespace csq {

namespace {

void require_star_ring(const RingId& r) {
  switch (r.kind()) {
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      return;
    default:
      throw Error(Errc::UnsupportedRing, "descent needs Z[i], Z[w] or Z[s], got " + r.name());
  }
}

Value make_pair(const RingId& r, const mpz_class& a, const mpz_class& b) { return {r, Pair{a, b}}; }

mpz_class norm(const Value& v) { return star_norm_integer(v); }

std::size_t bit_length(const mpz_class& m) { return mpz_sizeinbase(m.get_mpz_t(), 2); }

// The fixed representation -1 = N(1) + N(1 + sqrt 3).
StarRep minus_one_sqrt3() {
  const RingId r = RingId::zsqrt3();
  return {Value::one(r), make_pair(r, 1, 1)};
}

}  // namespace

StarRep product_formula(const Value& x, const Value& y, const Value& z, const Value& u) {
  require_same_ring(x, y);
  require_same_ring(x, z);
  require_same_ring(x, u);
  if (!x.ring().is_commutative()) throw Error(Errc::NoncommutativeRing, "product formula needs commutativity");
  Value a = x * z - y * conjugate(u);
  Value b = x * u + y * conjugate(z);
  ensure((star_norm(x) + star_norm(y)) * (star_norm(z) + star_norm(u)) == star_norm(a) + star_norm(b),
         Errc::InternalInvariant, "product formula identity");
  return {a, b};
}

StarMultiplier find_star_multiplier(const mpz_class& m, const RingId& ring) {
  require_star_ring(ring);
  if (m < 1) throw Error(Errc::PreconditionFailed, "multiplier search needs m >= 1");
  if (m == 1) return {true, Value::one(ring)};

  switch (ring.kind()) {
    case RingKind::Gaussian:
    case RingKind::Eisenstein: {
      if (ring.kind() == RingKind::Gaussian && m == 2) return {true, make_pair(ring, 1, 1)};
      if (ring.kind() == RingKind::Eisenstein && m == 3) return {true, make_pair(ring, 1, -1)};
      // Least cofactor k with k m - 1 a norm; for each k the first b, then
      // the least a >= 0.
      const bool gauss = ring.kind() == RingKind::Gaussian;
      for (mpz_class k = 1; k < m; ++k) {
        const mpz_class t = k * m - 1;
        for (mpz_class b = 0; gauss ? b * b <= t : 3 * b * b <= 4 * t; ++b) {
          bool exact = false;
          if (gauss) {
            mpz_class a = isqrt(t - b * b, &exact);
            if (exact) return {false, reduce_mod(make_pair(ring, a, b), m)};
            continue;
          }
          // a^2 - ab + b^2 = t  <=>  (2a - b)^2 = 4t - 3b^2
          mpz_class s = isqrt(4 * t - 3 * b * b, &exact);
          if (!exact) continue;
          std::optional<mpz_class> best;
          for (const mpz_class& twice_a : {mpz_class(b - s), mpz_class(b + s)}) {
            if (twice_a < 0 || mpz_odd_p(twice_a.get_mpz_t())) continue;
            mpz_class a = twice_a / 2;
            if (!best || a < *best) best = a;
          }
          if (best) return {false, reduce_mod(make_pair(ring, *best, b), m)};
        }
      }
      break;
    }
    case RingKind::ZSqrt3: {
      // Residue search: b first, then a.
      for (mpz_class b = 0; b < m; ++b) {
        for (mpz_class a = 0; a < m; ++a) {
          if (mod_floor(a * a - 3 * b * b + 1, m) == 0) {
            return {false, reduce_mod(make_pair(ring, a, b), m)};
          }
        }
      }
      break;
    }
    default:
      break;
  }
  throw Error(Errc::NoMultiplier, "no z with " + m.get_str() + " | N(z) + 1 in " + ring.name());
}

Value reduce_mod(const Value& z, const mpz_class& m) {
  const RingId& r = z.ring();
  require_star_ring(r);
  if (m < 1) throw Error(Errc::PreconditionFailed, "reduction modulus must be positive");
  const mpz_class a0 = mod_balanced(z.pair()[0], m);
  const mpz_class b0 = mod_balanced(z.pair()[1], m);

  switch (r.kind()) {
    case RingKind::Gaussian:
      return make_pair(r, a0, b0);
    case RingKind::Eisenstein: {
      Value best = make_pair(r, a0, b0);
      mpz_class best_norm = norm(best);
      for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
          Value c = make_pair(r, a0 + da * m, b0 + db * m);
          mpz_class n = norm(c);
          if (n < best_norm) {
            best = std::move(c);
            best_norm = n;
          }
        }
      }
      return best;
    }
    case RingKind::ZSqrt3: {
      // Window of lattice offsets; rank: N + 1 > 0 first, then |N|, then (a, b).
      const mpz_class bound = 3 * m * m;  // compared against 4 |N|
      std::optional<std::tuple<bool, mpz_class, mpz_class, mpz_class>> best;
      std::optional<std::tuple<bool, mpz_class, mpz_class, mpz_class>> fallback;
      for (int da = -2; da <= 2; ++da) {
        for (int db = -2; db <= 2; ++db) {
          mpz_class a = a0 + da * m;
          mpz_class b = b0 + db * m;
          mpz_class n = a * a - 3 * b * b;
          auto key = std::make_tuple(!(n + 1 > 0), mpz_class(abs(n)), a, b);
          if (!fallback || key < *fallback) fallback = key;
          if (4 * abs(n) > bound) continue;
          if (!best || key < *best) best = key;
        }
      }
      const auto& pick = best ? *best : *fallback;
      return make_pair(r, std::get<2>(pick), std::get<3>(pick));
    }
    default:
      break;
  }
  throw Error(Errc::UnsupportedRing, "unreachable");
}

DescentChain descent_chain(const mpz_class& m, const Value& z0) {
  const RingId& r = z0.ring();
  require_star_ring(r);
  if (m <= 1) throw Error(Errc::PreconditionFailed, "descent needs m > 1");
  Value z = reduce_mod(z0, m);
  if (mod_floor(norm(z) + 1, m) != 0) {
    throw Error(Errc::NotADivisor, m.get_str() + " does not divide N(z) + 1");
  }

  DescentChain chain{r, {m}, {}, {}};
  const std::size_t limit = 10 * bit_length(m) + 10;
  for (std::size_t step = 0;; ++step) {
    if (step > limit) throw Error(Errc::NonTermination, "descent exceeded its step limit");
    const mpz_class mi = chain.ms.back();
    const mpz_class next = (norm(z) + 1) / mi;
    ensure(next * mi == norm(z) + 1, Errc::InternalInvariant, "m(i) does not divide N(z(i)) + 1");
    if (next == 0 || abs(next) >= abs(mi)) throw Error(Errc::ChainStall, "descent failed to decrease m");
    chain.zs.push_back(z);
    chain.ms.push_back(next);
    if (abs(next) == 1) {
      chain.qs.push_back(z * Value::from_int(r, next));
      break;
    }

    const Value divisor = Value::from_int(r, next);
    DivResult d = euclidean_divide(z, divisor);
    const mpz_class sq = next * next;
    if (abs(norm(d.remainder) + 1) >= sq) {
      // Trap: the default remainder would not shrink m. Try neighbouring
      // quotients; least |N(r)|, then the smallest quotient.
      std::optional<std::tuple<mpz_class, mpz_class, mpz_class>> best;
      for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
          Value q = d.quotient + make_pair(r, da, db);
          Value rem = z - q * divisor;
          mpz_class n = norm(rem);
          if (abs(n + 1) >= sq) continue;
          auto key = std::make_tuple(mpz_class(abs(n)), q.pair()[0], q.pair()[1]);
          if (!best || key < *best) best = key;
        }
      }
      if (!best) throw Error(Errc::ChainStall, "no quotient escapes the trap at m = " + next.get_str());
      Value q = make_pair(r, std::get<1>(*best), std::get<2>(*best));
      d = {q, z - q * divisor};
    }
    chain.qs.push_back(std::move(d.quotient));
    z = std::move(d.remainder);
  }
  return chain;
}

namespace {

StarRep continuant_rep(const RingId& r, const std::vector<Value>& qs, const mpz_class& m0) {
  const std::size_t s = qs.size();
  std::vector<Value> half;
  half.reserve(s);
  for (std::size_t k = 0; k < s; ++k) half.push_back(k % 2 == 0 ? qs[k] : conjugate(qs[k]));
  std::vector<Value> full = half;
  for (auto& v : conjugate_reversed(half)) full.push_back(std::move(v));

  std::span<const Value> h(half);
  Value x = continuant(r, h);
  Value y = continuant(r, h.first(s - 1));
  if (continuant(r, full) != Value::from_int(r, m0) || norm(x) + norm(y) != m0) {
    throw Error(Errc::ReconstructionMismatch, "chain does not reconstruct " + m0.get_str());
  }
  return {x, y};
}

}  // namespace

StarRep chain_to_rep(const DescentChain& chain) {
  require_star_ring(chain.ring);
  if (chain.qs.empty() || chain.ms.size() != chain.qs.size() + 1) {
    throw Error(Errc::PreconditionFailed, "malformed descent chain");
  }
  const mpz_class& m0 = chain.ms.front();
  if (chain.ms.back() == 1) return continuant_rep(chain.ring, chain.qs, m0);

  // Terminal -1 (only in Z[sqrt 3]): the negated chain -m(i), -q(i) ends at 1
  // and represents -m0; compose with the representation of -1.
  ensure(chain.ring.kind() == RingKind::ZSqrt3, Errc::ReconstructionMismatch, "terminal m = -1");
  std::vector<Value> neg;
  for (const auto& q : chain.qs) neg.push_back(-q);
  StarRep rep = continuant_rep(chain.ring, neg, -m0);
  const StarRep minus_one = minus_one_sqrt3();
  return product_formula(rep.x, rep.y, minus_one.x, minus_one.y);
}

Value coprime_multiplier(const Value& x0, const Value& y0) {
  require_same_ring(x0, y0);
  const RingId& r = x0.ring();
  if (!r.is_euclidean()) throw Error(Errc::UnsupportedRing, "coprime multiplier needs a Euclidean ring");
  if (x0.is_zero() && y0.is_zero()) throw Error(Errc::NotCoprime, "x and y are both zero");
  const bool swap = euclidean_norm(x0) < euclidean_norm(y0);
  Value x = swap ? y0 : x0;
  Value y = swap ? x0 : y0;
  const Value m = star_norm(x) + star_norm(y);

  EuclidTrace t = euclidean_algorithm(x, y);
  if (!is_unit(t.gcd)) throw Error(Errc::NotCoprime, "x and y are not coprime");
  if (!t.gcd.is_one()) {
    // Divide out the unit so that x = [q1..qs] and y = [q2..qs].
    const Value h_inv = inverse(t.gcd);
    x = x * h_inv;
    y = y * h_inv;
    t = euclidean_algorithm(x, y);
    ensure(t.gcd.is_one(), Errc::InternalInvariant, "unit gcd did not normalize");
  }
  if (t.quotients.empty()) return Value::zero(r);

  const auto& q = t.quotients;
  std::vector<Value> seq;
  for (std::size_t k = q.size(); k-- > 0;) seq.push_back(conjugate(q[k]));
  for (std::size_t k = 0; k + 1 < q.size(); ++k) seq.push_back(q[k]);
  Value z = continuant(r, seq);
  try {
    divide_exact(z * conjugate(z) + Value::one(r), m);
  } catch (const Error&) {
    throw Error(Errc::InternalInvariant, "x x* + y y* does not divide z z* + 1");
  }
  return z;
}

// ---------------------------------------------------------------------------

std::string form_name(Form f) {
  switch (f) {
    case Form::FourSquares: return "foursq";
    case Form::EisensteinDouble: return "eisenstein";
    case Form::X2p3Y2: return "x2p3y2";
    case Form::Sqrt3Double: return "sqrt3";
  }
  return "?";
}

std::optional<Form> parse_form(const std::string& name) {
  for (Form f : {Form::FourSquares, Form::EisensteinDouble, Form::X2p3Y2, Form::Sqrt3Double}) {
    if (form_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string form_formula(Form f) {
  switch (f) {
    case Form::FourSquares: return "x^2 + y^2 + z^2 + u^2";
    case Form::EisensteinDouble: return "x^2 - x*y + y^2 + z^2 - z*u + u^2";
    case Form::X2p3Y2: return "x^2 + 3*y^2 + z^2 + 3*u^2";
    case Form::Sqrt3Double: return "x^2 - 3*y^2 + z^2 - 3*u^2";
  }
  return "?";
}

namespace {

mpz_class pair_value(Form f, const mpz_class& a, const mpz_class& b) {
  switch (f) {
    case Form::FourSquares: return a * a + b * b;
    case Form::EisensteinDouble: return a * a - a * b + b * b;
    case Form::X2p3Y2: return a * a + 3 * b * b;
    case Form::Sqrt3Double: return a * a - 3 * b * b;
  }
  return 0;
}

}  // namespace

mpz_class form_value(Form f, const Quad& v) { return pair_value(f, v[0], v[1]) + pair_value(f, v[2], v[3]); }

FormQuadruple canonical_quadruple(Form f, const Quad& v) {
  Quad out = v;
  if (f == Form::FourSquares) {
    for (auto& c : out) c = abs(c);
    std::sort(out.begin(), out.end(), std::greater<>());
    return {f, out};
  }
  using P = std::pair<mpz_class, mpz_class>;
  auto normalize = [f](P p) -> P {
    if (f != Form::EisensteinDouble) return {abs(p.first), abs(p.second)};
    // Norm-preserving symmetries of a^2 - ab + b^2 used here: negation, swap.
    const P cands[] = {p, {-p.first, -p.second}, {p.second, p.first}, {-p.second, -p.first}};
    return *std::max_element(std::begin(cands), std::end(cands));
  };
  P a = normalize({out[0], out[1]});
  P b = normalize({out[2], out[3]});
  auto key = [f](const P& p) { return std::make_tuple(pair_value(f, p.first, p.second), p.first, p.second); };
  if (key(a) < key(b)) std::swap(a, b);
  return {f, {a.first, a.second, b.first, b.second}};
}

std::pair<mpz_class, mpz_class> eisenstein_to_x2_3y2(const mpz_class& x, const mpz_class& y) {
  std::pair<mpz_class, mpz_class> pq;
  if (mpz_even_p(x.get_mpz_t())) {
    const mpz_class t = x / 2;
    pq = {t, y - t};
  } else if (mpz_even_p(y.get_mpz_t())) {
    const mpz_class t = y / 2;
    pq = {t, x - t};
  } else {
    pq = {(y - x) / 2, (x + y) / 2};
  }
  ensure(x * x - x * y + y * y == pq.second * pq.second + 3 * pq.first * pq.first, Errc::InternalInvariant,
         "x^2 - xy + y^2 != q^2 + 3p^2");
  return pq;
}

namespace {

RingId ring_for(Form f) {
  switch (f) {
    case Form::FourSquares: return RingId::gaussian();
    case Form::EisensteinDouble:
    case Form::X2p3Y2: return RingId::eisenstein();
    case Form::Sqrt3Double: return RingId::zsqrt3();
  }
  return RingId::gaussian();
}

StarRep prime_rep(const RingId& r, const mpz_class& p, std::optional<DescentChain>* chain_out) {
  if (r.kind() == RingKind::ZSqrt3) {
    if (p == 2) return {Value::one(r), Value::one(r)};
    if (p == 3) return {make_pair(r, 3, 1), make_pair(r, 0, 1)};
  }
  StarMultiplier sm = find_star_multiplier(p, r);
  if (sm.exact) return {sm.z, Value::zero(r)};
  DescentChain chain = descent_chain(p, sm.z);
  StarRep rep = chain_to_rep(chain);
  if (chain_out) *chain_out = std::move(chain);
  return rep;
}

Quad components(const StarRep& rep) {
  return {rep.x.pair()[0], rep.x.pair()[1], rep.y.pair()[0], rep.y.pair()[1]};
}

}  // namespace

FormResult represent(Form f, const mpz_class& n, const std::optional<Value>& z) {
  const RingId r = ring_for(f);
  if (f != Form::Sqrt3Double && n < 1) throw Error(Errc::PreconditionFailed, form_name(f) + " needs n >= 1");

  std::optional<DescentChain> chain;
  StarRep rep{Value::one(r), Value::zero(r)};
  if (z) {
    if (z->ring() != r) throw Error(Errc::RingMismatch, "multiplier must lie in " + r.name());
    if (n <= 1) throw Error(Errc::PreconditionFailed, "an explicit multiplier needs n > 1");
    chain = descent_chain(n, *z);
    rep = chain_to_rep(*chain);
  } else if (n == 0) {
    rep = {Value::zero(r), Value::zero(r)};
  } else {
    const auto primes = factor(abs(n));
    for (const auto& p : primes) {
      std::optional<DescentChain> c;
      StarRep pr = prime_rep(r, p, &c);
      if (primes.size() == 1) chain = std::move(c);
      rep = product_formula(rep.x, rep.y, pr.x, pr.y);
    }
    if (n < 0) {
      const StarRep minus_one = minus_one_sqrt3();
      rep = product_formula(rep.x, rep.y, minus_one.x, minus_one.y);
    }
  }
  ensure(norm(rep.x) + norm(rep.y) == n, Errc::InternalInvariant, "representation does not sum to n");

  Quad v = components(rep);
  if (f == Form::X2p3Y2) {
    auto [p1, q1] = eisenstein_to_x2_3y2(v[0], v[1]);
    auto [p2, q2] = eisenstein_to_x2_3y2(v[2], v[3]);
    v = {q1, p1, q2, p2};
  }
  FormQuadruple quad = canonical_quadruple(f, v);
  ensure(form_value(f, quad.values) == n, Errc::InternalInvariant, "form value differs from n");
  return {std::move(quad), std::move(chain)};
}

FormQuadruple four_squares(const mpz_class& n) { return represent(Form::FourSquares, n).quad; }
FormQuadruple eisenstein_form(const mpz_class& n) { return represent(Form::EisensteinDouble, n).quad; }
FormQuadruple form_x2_3y2(const mpz_class& n) { return represent(Form::X2p3Y2, n).quad; }
FormQuadruple sqrt3_form(const mpz_class& n) { return represent(Form::Sqrt3Double, n).quad; }

}  // namespace csq
