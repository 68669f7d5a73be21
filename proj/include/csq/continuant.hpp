#pragma once

// Continuants [q1, ..., qn] over arbitrary rings and the identities they
// satisfy. Products are always taken in index order, so everything here is
// valid for noncommutative rings (IntMatrix2) unless stated otherwise.

#include <span>
#include <utility>
#include <vector>

#include "csq/ring.hpp"

namespace csq {

struct QuotientSeq {
  QuotientSeq(RingId ring, std::vector<Value> items);
  QuotientSeq(RingId ring, std::vector<Value> items, Value unit);

  RingId ring;
  std::vector<Value> items;
  Value unit;  // trailing gcd h of a Euclidean run; 1 by default

  std::size_t size() const noexcept { return items.size(); }
};

// [] = 1, [q1] = q1, [q1..qn] = [q1..q(n-1)] qn + [q1..q(n-2)].
Value continuant(const RingId& ring, std::span<const Value> items);
Value continuant(const QuotientSeq& q);

// Euler's rule: sum over all ways of deleting disjoint adjacent pairs of the
// ordered product of what remains. Exponential; n <= 20.
Value continuant_euler(const QuotientSeq& q);
inline constexpr std::size_t kEulerMaxLength = 20;

// Determinant of the tridiagonal matrix with diagonal q, superdiagonal 1 and
// subdiagonal -1. Commutative rings only.
Value continuant_matrix(const QuotientSeq& q);

// Division-free determinant (expansion over column subsets, O(n 2^n)) of a
// square matrix over a commutative ring. n <= 20.
Value determinant(const RingId& ring, const std::vector<std::vector<Value>>& m);

// (tau^-1 q1, tau q2, tau^-1 q3, ...). tau must be a unit commuting with
// every item. The continuant is preserved for even n and multiplied by
// tau^-1 for odd n; both are checked.
QuotientSeq zigzag_rescale(const QuotientSeq& q, const Value& tau);

// (a, b) with a [q1..qn] + b [q2..qn] = 1, namely
// a = [-q(n-1), ..., -q1, 0] and b = [-q(n-1), ..., -q1]. Requires n >= 1.
std::pair<Value, Value> bezout_from_quotients(const QuotientSeq& q);

// q_i == conjugate(q_(n+1-i)) for all i.
bool is_quasi_palindromic(std::span<const Value> items);
bool is_palindromic(std::span<const Value> items);

// (conj q_n, ..., conj q_1).
std::vector<Value> conjugate_reversed(std::span<const Value> items);

// For a quasi-palindromic sequence of length n >= 2, checks both orderings
//   [q1..qn][q2..q(n-1)] = [q2..qn][q1..q(n-1)] + (-1)^n
//                        = [q1..q(n-1)][q2..qn] + (-1)^n.
// Throws NotQuasiPalindromic for other input.
bool check_noncomm_lewis_carroll(const QuotientSeq& q);

}  // namespace csq
