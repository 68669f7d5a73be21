#include "csq/euclid.hpp"

namespace csq {

EuclidTrace euclid_until(const Value& t1, const Value& t2, const StopPredicate& stop) {
  require_same_ring(t1, t2);
  if (!t1.ring().is_euclidean()) throw Error(Errc::UnsupportedRing, "no Euclidean division on " + t1.ring().name());
  if (t1.is_zero() && t2.is_zero()) throw Error(Errc::BothZero, "Euclidean algorithm on (0, 0)");

  EuclidTrace trace{t1.ring(), {}, {t1, t2}, t1, true};
  if (t2.is_zero()) return trace;
  if (stop && stop(t2)) {
    trace.gcd = t2;
    trace.complete = false;
    return trace;
  }
  for (;;) {
    const Value& a = trace.remainders[trace.remainders.size() - 2];
    const Value& b = trace.remainders.back();
    DivResult d = euclidean_divide(a, b);
    trace.quotients.push_back(std::move(d.quotient));
    trace.remainders.push_back(std::move(d.remainder));
    const Value& newest = trace.remainders.back();
    if (newest.is_zero()) {
      trace.gcd = trace.remainders[trace.remainders.size() - 2];
      return trace;
    }
    if (stop && stop(newest)) {
      trace.gcd = newest;
      trace.complete = false;
      return trace;
    }
  }
}

EuclidTrace euclidean_algorithm(const Value& t1, const Value& t2) { return euclid_until(t1, t2, nullptr); }

StopPredicate stop_square_below(const mpz_class& m) {
  return [m](const Value& r) { return r.as_integer() * r.as_integer() < m; };
}

StopPredicate stop_half_degree(int degree_m) {
  return [degree_m](const Value& r) { return 2 * r.degree() <= degree_m; };
}

std::pair<Value, Value> reconstruct(const EuclidTrace& trace) {
  if (!trace.complete) throw Error(Errc::PreconditionFailed, "cannot reconstruct from a stopped trace");
  if (trace.quotients.empty()) return {trace.gcd, Value::zero(trace.ring)};
  std::span<const Value> q(trace.quotients);
  return {continuant(trace.ring, q) * trace.gcd, continuant(trace.ring, q.subspan(1)) * trace.gcd};
}

}  // namespace csq
