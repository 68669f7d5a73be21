#include "csq/numtheory.hpp"

#include "csq/error.hpp"

namespace csq {

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (mpz_class d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

std::vector<mpz_class> factor(const mpz_class& n) {
  if (n < 1) throw Error(Errc::PreconditionFailed, "factor: n must be positive");
  std::vector<mpz_class> out;
  mpz_class rest = n;
  while (mpz_even_p(rest.get_mpz_t()) && rest > 1) {
    out.emplace_back(2);
    rest /= 2;
  }
  for (mpz_class d = 3; d * d <= rest; d += 2) {
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      rest /= d;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

mpz_class mod_balanced(const mpz_class& a, const mpz_class& m) {
  mpz_class r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

mpz_class isqrt(const mpz_class& n, bool* exact) {
  if (n < 0) {
    if (exact) *exact = false;
    return 0;
  }
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (exact) *exact = (r * r == n);
  return r;
}

}  // namespace csq
