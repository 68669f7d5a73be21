#pragma once

// Batch checks over ranges of inputs. Each row is independent; the parallel
// variants split rows across OpenMP threads and must agree with the serial
// ones row for row.

#include <string>
#include <vector>

#include "csq/hermitian.hpp"

namespace csq {

struct SweepRow {
  long n = 0;
  bool ok = false;
  std::string detail;  // representation on success, error message otherwise

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// Primes p == 1 (mod 4) below `limit`: Brillhart and Smith agree, p = x^2 + y^2,
// gcd(x, y) = 1, y < x < sqrt(p), palindromic quotients.
std::vector<SweepRow> sweep_two_squares_serial(long limit);
std::vector<SweepRow> sweep_two_squares_parallel(long limit);

// represent(form, n) for lo <= n <= hi, checking the form value.
std::vector<SweepRow> sweep_forms_serial(Form form, long lo, long hi);
std::vector<SweepRow> sweep_forms_parallel(Form form, long lo, long hi);

}  // namespace csq
