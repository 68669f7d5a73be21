#pragma once

// The Euclidean algorithm as a reusable engine: full runs, early-stopping
// runs (Brillhart's criterion), and reconstruction of the inputs from the
// quotient sequence by continuants.

#include <functional>
#include <utility>
#include <vector>

#include "csq/continuant.hpp"
#include "csq/ring.hpp"

namespace csq {

struct EuclidTrace {
  RingId ring;
  std::vector<Value> quotients;
  // r0 = t1, r1 = t2, ..., with r(k-1) = q(k) r(k) + r(k+1). A complete trace
  // ends with a zero remainder; a stopped trace ends with the remainder that
  // triggered the stop.
  std::vector<Value> remainders;
  Value gcd;  // last nonzero remainder (for a stopped trace: the stop remainder)
  bool complete = true;

  QuotientSeq quotient_seq() const { return {ring, quotients, gcd}; }
};

EuclidTrace euclidean_algorithm(const Value& t1, const Value& t2);

using StopPredicate = std::function<bool(const Value& remainder)>;

// Same loop, halting as soon as the newest remainder (starting with t2)
// satisfies `stop`.
EuclidTrace euclid_until(const Value& t1, const Value& t2, const StopPredicate& stop);

// r^2 < m over Z.
StopPredicate stop_square_below(const mpz_class& m);
// 2 deg(r) <= deg(m) over F[X].
StopPredicate stop_half_degree(int degree_m);

// ([q1..qn] h, [q2..qn] h) for a complete trace; (h, 0) when n = 0.
std::pair<Value, Value> reconstruct(const EuclidTrace& trace);

}  // namespace csq
