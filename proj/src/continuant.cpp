#include "csq/continuant.hpp"

#include <cstdint>

namespace csq {

namespace {

void check_items(const RingId& ring, std::span<const Value> items) {
  for (const auto& v : items) {
    if (v.ring() != ring) {
      throw Error(Errc::RingMismatch, "sequence item in " + v.ring().name() + ", expected " + ring.name());
    }
  }
}

}  // namespace

QuotientSeq::QuotientSeq(RingId r, std::vector<Value> its)
    : ring(std::move(r)), items(std::move(its)), unit(Value::one(ring)) {
  check_items(ring, items);
}

QuotientSeq::QuotientSeq(RingId r, std::vector<Value> its, Value u)
    : ring(std::move(r)), items(std::move(its)), unit(std::move(u)) {
  check_items(ring, items);
  require_same_ring(unit, Value::one(ring));
}

Value continuant(const RingId& ring, std::span<const Value> items) {
  Value before = Value::one(ring);  // [q1..q(k-2)]
  if (items.empty()) return before;
  Value current = items[0];         // [q1..q(k-1)]
  for (std::size_t k = 1; k < items.size(); ++k) {
    Value next = current * items[k] + before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

Value continuant(const QuotientSeq& q) { return continuant(q.ring, q.items); }

Value continuant_euler(const QuotientSeq& q) {
  const std::size_t n = q.size();
  if (n > kEulerMaxLength) {
    throw Error(Errc::LengthLimitExceeded,
                "Euler's rule is limited to " + std::to_string(kEulerMaxLength) + " items");
  }
  Value sum = Value::zero(q.ring);
  if (n < 2) return continuant(q);
  // Bit i set: the pair (q_i, q_(i+1)) is deleted. Pairs must be disjoint.
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (mask & (mask >> 1)) continue;
    Value term = Value::one(q.ring);
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n && (mask >> i) & 1u) {
        ++i;
        continue;
      }
      term = term * q.items[i];
    }
    sum += term;
  }
  return sum;
}

Value determinant(const RingId& ring, const std::vector<std::vector<Value>>& m) {
  if (!ring.is_commutative()) throw Error(Errc::NoncommutativeRing, "determinant needs a commutative ring");
  const std::size_t n = m.size();
  if (n > 20) throw Error(Errc::LengthLimitExceeded, "determinant limited to 20x20");
  if (n == 0) return Value::one(ring);
  for (const auto& row : m) {
    if (row.size() != n) throw Error(Errc::PreconditionFailed, "determinant of a non-square matrix");
  }
  // partial[mask]: signed sum over injective maps of the first popcount(mask)
  // rows onto the columns in mask.
  const std::size_t states = std::size_t{1} << n;
  std::vector<Value> partial(states, Value::zero(ring));
  std::vector<bool> live(states, false);
  partial[0] = Value::one(ring);
  live[0] = true;
  for (std::size_t mask = 0; mask < states; ++mask) {
    if (!live[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    int free_before = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if ((mask >> col) & 1u) continue;
      const Value& entry = m[row][col];
      if (!entry.is_zero()) {
        Value term = partial[mask] * entry;
        std::size_t next = mask | (std::size_t{1} << col);
        partial[next] = (free_before % 2 == 0) ? partial[next] + term : partial[next] - term;
        live[next] = true;
      }
      ++free_before;
    }
  }
  return partial[states - 1];
}

Value continuant_matrix(const QuotientSeq& q) {
  if (!q.ring.is_commutative()) {
    throw Error(Errc::NoncommutativeRing, "tridiagonal determinant needs a commutative ring");
  }
  const std::size_t n = q.size();
  std::vector<std::vector<Value>> a(n, std::vector<Value>(n, Value::zero(q.ring)));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = q.items[i];
    if (i + 1 < n) {
      a[i][i + 1] = Value::one(q.ring);
      a[i + 1][i] = -Value::one(q.ring);
    }
  }
  return determinant(q.ring, a);
}

QuotientSeq zigzag_rescale(const QuotientSeq& q, const Value& tau) {
  require_same_ring(tau, Value::one(q.ring));
  if (!is_unit(tau)) throw Error(Errc::NotAUnit, "zigzag rescaling needs a unit");
  for (const auto& item : q.items) {
    if (tau * item != item * tau) {
      throw Error(Errc::PreconditionFailed, "rescaling unit must commute with every item");
    }
  }
  const Value tau_inv = inverse(tau);
  std::vector<Value> out;
  out.reserve(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    out.push_back((k % 2 == 0 ? tau_inv : tau) * q.items[k]);
  }
  QuotientSeq result(q.ring, std::move(out), q.unit);
  const Value expected = q.size() % 2 == 0 ? continuant(q) : tau_inv * continuant(q);
  ensure(continuant(result) == expected, Errc::InternalInvariant, "zigzag rescaling changed the continuant");
  return result;
}

std::pair<Value, Value> bezout_from_quotients(const QuotientSeq& q) {
  const std::size_t n = q.size();
  if (n == 0) throw Error(Errc::PreconditionFailed, "Bezout coefficients need at least one quotient");
  std::vector<Value> tail;  // -q(n-1), ..., -q1
  tail.reserve(n);
  for (std::size_t k = n - 1; k-- > 0;) tail.push_back(-q.items[k]);
  Value b = continuant(q.ring, tail);
  tail.push_back(Value::zero(q.ring));
  Value a = continuant(q.ring, tail);

  const Value full = continuant(q);
  const Value rest = continuant(q.ring, std::span<const Value>(q.items).subspan(1));
  ensure(a * full + b * rest == Value::one(q.ring), Errc::InternalInvariant, "Bezout identity");
  return {a, b};
}

bool is_quasi_palindromic(std::span<const Value> items) {
  const std::size_t n = items.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (items[i] != conjugate(items[n - 1 - i])) return false;
  }
  return true;
}

bool is_palindromic(std::span<const Value> items) {
  const std::size_t n = items.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (items[i] != items[n - 1 - i]) return false;
  }
  return true;
}

std::vector<Value> conjugate_reversed(std::span<const Value> items) {
  std::vector<Value> out;
  out.reserve(items.size());
  for (std::size_t k = items.size(); k-- > 0;) out.push_back(conjugate(items[k]));
  return out;
}

bool check_noncomm_lewis_carroll(const QuotientSeq& q) {
  const std::size_t n = q.size();
  if (n < 2) throw Error(Errc::PreconditionFailed, "Lewis Carroll identity needs length >= 2");
  if (!is_quasi_palindromic(q.items)) throw Error(Errc::NotQuasiPalindromic, "sequence is not quasi-palindromic");

  std::span<const Value> all(q.items);
  const Value whole = continuant(q.ring, all);
  const Value inner = continuant(q.ring, all.subspan(1, n - 2));
  const Value head = continuant(q.ring, all.first(n - 1));
  const Value tail = continuant(q.ring, all.subspan(1));
  const Value sign = Value::from_int(q.ring, n % 2 == 0 ? 1 : -1);

  const Value lhs = whole * inner;
  return lhs == tail * head + sign && lhs == head * tail + sign;
}

}  // namespace csq
