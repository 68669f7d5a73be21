#include "csq/sweep.hpp"

#include "csq/numtheory.hpp"
#include "csq/two_squares.hpp"

namespace csq {

namespace {

SweepRow check_prime(long p) {
  SweepRow row{p, false, {}};
  try {
    const mpz_class mp(p);
    TwoSquaresRep b = canonicalize(brillhart_two_squares(mp));
    SmithResult s = smith_two_squares(mp);
    const mpz_class& x = b.x.as_integer();
    const mpz_class& y = b.y.as_integer();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    const bool agree = s.rep.x == b.x && s.rep.y == b.y;
    const bool palindrome = s.quotients.size() % 2 == 0 && is_palindromic(s.quotients.items);
    row.ok = agree && palindrome && x * x + y * y == mp && g == 1 && y < x && x * x < mp;
    row.detail = x.get_str() + "," + y.get_str();
  } catch (const Error& e) {
    row.detail = e.what();
  }
  return row;
}

SweepRow check_form(Form form, long n) {
  SweepRow row{n, false, {}};
  try {
    FormQuadruple q = represent(form, n).quad;
    row.ok = form_value(form, q.values) == n;
    for (std::size_t k = 0; k < 4; ++k) row.detail += (k ? "," : "") + q.values[k].get_str();
  } catch (const Error& e) {
    row.detail = e.what();
  }
  return row;
}

std::vector<long> primes_one_mod_four(long limit) {
  std::vector<long> out;
  for (long p = 5; p < limit; p += 4) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<SweepRow> sweep_two_squares_serial(long limit) {
  std::vector<SweepRow> rows;
  for (long p : primes_one_mod_four(limit)) rows.push_back(check_prime(p));
  return rows;
}

std::vector<SweepRow> sweep_two_squares_parallel(long limit) {
  const std::vector<long> primes = primes_one_mod_four(limit);
  std::vector<SweepRow> rows(primes.size());
  const long count = static_cast<long>(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) rows[k] = check_prime(primes[k]);
  return rows;
}

std::vector<SweepRow> sweep_forms_serial(Form form, long lo, long hi) {
  std::vector<SweepRow> rows;
  for (long n = lo; n <= hi; ++n) rows.push_back(check_form(form, n));
  return rows;
}

std::vector<SweepRow> sweep_forms_parallel(Form form, long lo, long hi) {
  const long count = hi >= lo ? hi - lo + 1 : 0;
  std::vector<SweepRow> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) rows[k] = check_form(form, lo + k);
  return rows;
}

}  // namespace csq
