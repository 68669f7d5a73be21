#include <doctest.h>

#include "csq/continuant.hpp"
#include "support.hpp"

using namespace csq;
using namespace csq::test;

namespace {

std::vector<Value> ints(std::initializer_list<long> xs) {
  std::vector<Value> out;
  for (long x : xs) out.push_back(Z(x));
  return out;
}

Value cont(const RingId& r, const std::vector<Value>& items, std::size_t from = 0,
           std::size_t to = static_cast<std::size_t>(-1)) {
  to = std::min(to, items.size());
  if (from >= to) return Value::one(r);
  return continuant(r, std::span<const Value>(items).subspan(from, to - from));
}

// Random quasi-palindromic sequence of length n over Z[i] or M2.
std::vector<Value> quasi_palindrome(Gen& gen, const RingId& r, std::size_t n) {
  std::vector<Value> half = gen.seq(r, n / 2);
  std::vector<Value> out = half;
  if (n % 2 == 1) {
    // Self-conjugate middle: a real integer or a scalar matrix.
    long s = gen.range(-6, 6);
    out.push_back(r.kind() == RingKind::IntMatrix2 ? M(s, 0, 0, s) : Value::from_int(r, s));
  }
  for (auto& v : conjugate_reversed(half)) out.push_back(v);
  return out;
}

std::vector<std::vector<mpz_class>> drop(const std::vector<std::vector<mpz_class>>& m, std::vector<std::size_t> rows,
                                         std::vector<std::size_t> cols) {
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
    std::vector<mpz_class> row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (std::find(cols.begin(), cols.end(), j) == cols.end()) row.push_back(m[i][j]);
    }
    out.push_back(row);
  }
  return out;
}

mpz_class library_det(const std::vector<std::vector<mpz_class>>& m) {
  std::vector<std::vector<Value>> vm;
  for (const auto& row : m) {
    std::vector<Value> vr;
    for (const auto& x : row) vr.push_back(Value::integer(x));
    vm.push_back(vr);
  }
  return determinant(ZZ(), vm).as_integer();
}

}  // namespace

TEST_SUITE("continuants") {
  TEST_CASE("recurrence examples") {
    CHECK(continuant(ZZ(), {}) == Z(1));
    CHECK(continuant(ZZ(), ints({7})) == Z(7));
    CHECK(continuant(ZZ(), ints({2, 2})) == Z(5));
    CHECK(continuant(ZZ(), ints({1, 2, 3})) == Z(10));
    CHECK(continuant(ZZ(), ints({2, 1, 1, 2})) == Z(13));
    // Written order matters for matrices: [A, B] = AB + 1.
    Value a = M(1, 2, 0, 1), b = M(1, 0, 3, 1);
    CHECK(continuant(RingId::int_matrix2(), std::vector<Value>{a, b}) == a * b + M(1, 0, 0, 1));
  }

  TEST_CASE("Euler's rule examples") {
    Value q1 = Z(4), q2 = Z(9);
    CHECK(continuant_euler(QuotientSeq(ZZ(), {q1, q2})) == q1 * q2 + Z(1));
    CHECK(continuant_euler(QuotientSeq(ZZ(), ints({1, 2, 3}))) == Z(10));
    CHECK(continuant_euler(QuotientSeq(ZZ(), ints({2, 1, 1, 2}))) == Z(13));
    CHECK(continuant_euler(QuotientSeq(ZZ(), {})) == Z(1));
    std::vector<Value> long_seq(21, Z(1));
    try {
      continuant_euler(QuotientSeq(ZZ(), long_seq));
      FAIL("expected LengthLimitExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LengthLimitExceeded);
    }
    // Fibonacci: twenty ones give F(21).
    CHECK(continuant_euler(QuotientSeq(ZZ(), std::vector<Value>(20, Z(1)))) == Z(10946));
  }

  TEST_CASE("tridiagonal determinant examples") {
    CHECK(continuant_matrix(QuotientSeq(ZZ(), ints({5}))) == Z(5));
    CHECK(continuant_matrix(QuotientSeq(ZZ(), ints({2, 1, 1, 2}))) == Z(13));
    Value x = V(FX(7), "X");
    CHECK(continuant_matrix(QuotientSeq(FX(7), {x, x})) == V(FX(7), "X^2+1"));
    try {
      continuant_matrix(QuotientSeq(RingId::int_matrix2(), {M(1, 0, 0, 1)}));
      FAIL("expected NoncommutativeRing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NoncommutativeRing);
    }
  }

  TEST_CASE("continuant, Euler's rule and the determinant agree") {
    Gen gen(21);
    const RingId rings[] = {ZZ(), RingId::gaussian(), RingId::eisenstein(), RingId::zsqrt3(), QX(), FX(7)};
    for (int k = 0; k < 500; ++k) {
      const RingId& r = rings[k % 6];
      QuotientSeq q(r, gen.seq(r, static_cast<std::size_t>(gen.range(0, 10)), 6));
      Value c = continuant(q);
      CHECK(continuant_euler(q) == c);
      CHECK(continuant_matrix(q) == c);
    }
    // Euler's rule keeps index order, so it also matches on matrices.
    for (int k = 0; k < 100; ++k) {
      QuotientSeq q(RingId::int_matrix2(), gen.seq(RingId::int_matrix2(), static_cast<std::size_t>(gen.range(0, 8)), 4));
      CHECK(continuant_euler(q) == continuant(q));
    }
  }

  TEST_CASE("continued-fraction oracle for positive integer sequences") {
    Gen gen(22);
    for (int k = 0; k < 500; ++k) {
      std::vector<long> raw;
      std::vector<Value> q;
      for (long i = gen.range(1, 12); i > 0; --i) {
        raw.push_back(gen.range(1, 30));
        q.push_back(Z(raw.back()));
      }
      CHECK(continuant(ZZ(), q).as_integer() == continued_fraction_numerator(raw));
    }
  }

  TEST_CASE("zigzag rescaling") {
    QuotientSeq same = zigzag_rescale(QuotientSeq(ZZ(), ints({3, 1, 4})), Z(1));
    CHECK(same.items == ints({3, 1, 4}));

    Value x = V(QX(), "X");
    QuotientSeq r = zigzag_rescale(QuotientSeq(QX(), {x, x}), V(QX(), "2"));
    CHECK(r.items == std::vector<Value>{V(QX(), "1/2*X"), V(QX(), "2*X")});
    CHECK(continuant(r) == V(QX(), "X^2+1"));

    QuotientSeq neg = zigzag_rescale(QuotientSeq(ZZ(), ints({1, 2, 3})), Z(-1));
    CHECK(neg.items == ints({-1, -2, -3}));
    CHECK(continuant(neg) == Z(-10));

    CHECK_THROWS_AS(zigzag_rescale(QuotientSeq(ZZ(), ints({1})), Z(2)), Error);

    Gen gen(23);
    for (int k = 0; k < 500; ++k) {
      QuotientSeq q(QX(), gen.seq(QX(), static_cast<std::size_t>(gen.range(0, 9)), 5));
      Value tau = V(QX(), std::to_string(gen.range(1, 9)) + "/" + std::to_string(gen.range(1, 9)));
      if (gen.coin()) tau = -tau;
      QuotientSeq s = zigzag_rescale(q, tau);
      Value expect = q.size() % 2 == 0 ? continuant(q) : inverse(tau) * continuant(q);
      CHECK(continuant(s) == expect);
    }
  }

  TEST_CASE("cutting, commutative and matrix") {
    Gen gen(24);
    for (int k = 0; k < 500; ++k) {
      const RingId r = k % 2 == 0 ? ZZ() : RingId::int_matrix2();
      std::vector<Value> q = gen.seq(r, static_cast<std::size_t>(gen.range(2, 10)), 5);
      const std::size_t n = q.size();
      Value whole = cont(r, q);
      for (std::size_t i = 1; i < n; ++i) {
        // 1-based split at i: [q1..q(i-1)][q(i+2)..qn] + [q1..qi][q(i+1)..qn]
        Value rhs = cont(r, q, 0, i - 1) * cont(r, q, i + 1) + cont(r, q, 0, i) * cont(r, q, i);
        CHECK(whole == rhs);
      }
    }
  }

  TEST_CASE("negated prefixes") {
    Gen gen(25);
    for (int k = 0; k < 500; ++k) {
      std::vector<Value> q = gen.seq(ZZ(), static_cast<std::size_t>(gen.range(2, 9)), 9);
      const std::size_t n = q.size();
      for (std::size_t h = 0; h <= n; ++h) {
        std::vector<Value> s;
        for (std::size_t j = h; j-- > 0;) s.push_back(-q[j]);
        s.push_back(Z(0));
        for (const auto& v : q) s.push_back(v);
        Value got = cont(ZZ(), s);
        if (h + 2 <= n) CHECK(got == cont(ZZ(), q, h + 1));
        else if (h + 1 == n) CHECK(got == Z(1));
        else CHECK(got == Z(0));
      }
    }
  }

  TEST_CASE("Bezout coefficients") {
    auto [a1, b1] = bezout_from_quotients(QuotientSeq(ZZ(), ints({9})));
    CHECK(a1 == Z(0));
    CHECK(b1 == Z(1));

    auto [a, b] = bezout_from_quotients(QuotientSeq(ZZ(), ints({2, 1, 1, 2})));
    CHECK(a * Z(13) + b * Z(5) == Z(1));
    // Extended-gcd oracle: the solution set is (a0 + 5t, b0 - 13t).
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mpz_class(13).get_mpz_t(), mpz_class(5).get_mpz_t());
    CHECK((a.as_integer() - s) % 5 == 0);

    auto [a3, b3] = bezout_from_quotients(QuotientSeq(ZZ(), ints({1, 2, 3})));
    CHECK(a3 * Z(10) + b3 * Z(7) == Z(1));

    Gen gen(26);
    for (int k = 0; k < 500; ++k) {
      const RingId r = k % 3 == 0 ? QX() : (k % 3 == 1 ? RingId::gaussian() : ZZ());
      QuotientSeq q(r, gen.seq(r, static_cast<std::size_t>(gen.range(1, 9)), 7));
      auto [x, y] = bezout_from_quotients(q);
      CHECK(x * continuant(q) + y * cont(r, q.items, 1) == Value::one(r));
    }
  }

  TEST_CASE("reversal holds commutatively and fails for matrices") {
    Gen gen(27);
    for (int k = 0; k < 500; ++k) {
      const RingId r = k % 2 == 0 ? RingId::eisenstein() : FX(11);
      std::vector<Value> q = gen.seq(r, static_cast<std::size_t>(gen.range(0, 9)), 7);
      std::vector<Value> rev(q.rbegin(), q.rend());
      CHECK(cont(r, q) == cont(r, rev));
    }
    const RingId m2 = RingId::int_matrix2();
    std::vector<Value> q{M(1, 1, 0, 1), M(1, 0, 1, 1)};
    std::vector<Value> rev(q.rbegin(), q.rend());
    CHECK(cont(m2, q) != cont(m2, rev));
  }

  TEST_CASE("commutative Lewis Carroll") {
    Gen gen(28);
    for (int k = 0; k < 500; ++k) {
      const RingId r = k % 2 == 0 ? ZZ() : QX();
      std::vector<Value> q = gen.seq(r, static_cast<std::size_t>(gen.range(2, 10)), 7);
      const std::size_t n = q.size();
      Value sign = Value::from_int(r, n % 2 == 0 ? 1 : -1);
      CHECK(cont(r, q) * cont(r, q, 1, n - 1) == cont(r, q, 0, n - 1) * cont(r, q, 1) + sign);
    }
  }

  TEST_CASE("palindromes give sums of two squares") {
    Gen gen(29);
    for (int k = 0; k < 500; ++k) {
      const std::size_t s = static_cast<std::size_t>(gen.range(1, 6));
      std::vector<Value> half = gen.seq(ZZ(), s, 9);
      std::vector<Value> full = half;
      full.insert(full.end(), half.rbegin(), half.rend());
      CHECK(is_palindromic(full));
      const std::size_t n = full.size();
      Value x = cont(ZZ(), half), y = cont(ZZ(), half, 0, s - 1);
      Value x2 = cont(ZZ(), half, 1), y2 = s >= 2 ? cont(ZZ(), half, 1, s - 1) : Z(0);
      Value z = cont(ZZ(), full, 0, n - 1);
      Value whole = cont(ZZ(), full), inner = cont(ZZ(), full, 1, n - 1);
      CHECK(whole == x * x + y * y);
      CHECK(inner == x2 * x2 + y2 * y2);
      CHECK(z * z + Z(1) == whole * inner);
    }
  }

  TEST_CASE("conjugation reverses continuants") {
    Gen gen(30);
    const RingId rings[] = {RingId::gaussian(), RingId::eisenstein(), RingId::zsqrt3(), RingId::int_matrix2()};
    for (int k = 0; k < 500; ++k) {
      const RingId& r = rings[k % 4];
      std::vector<Value> q = gen.seq(r, static_cast<std::size_t>(gen.range(0, 8)), 6);
      CHECK(cont(r, conjugate_reversed(q)) == conjugate(cont(r, q)));
    }
  }

  TEST_CASE("Lewis Carroll on integer matrices") {
    Gen gen(31);
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.range(2, 5));
      std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
      for (auto& row : m) {
        for (auto& x : row) x = gen.range(-9, 9);
      }
      const mpz_class det = laplace_det(m);
      CHECK(library_det(m) == det);
      const std::size_t last = n - 1;
      mpz_class inner = laplace_det(drop(m, {0, last}, {0, last}));
      mpz_class lhs = det * inner;
      mpz_class rhs = laplace_det(drop(m, {0}, {0})) * laplace_det(drop(m, {last}, {last})) -
                      laplace_det(drop(m, {0}, {last})) * laplace_det(drop(m, {last}, {0}));
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("quasi-palindrome continuants: examples") {
    const RingId zi = RingId::gaussian();
    QuotientSeq example(zi, {G(8, 1), G(-1, -1), G(0, 1), G(0, -1), G(-1, 1), G(8, -1)});
    CHECK(is_quasi_palindromic(example.items));
    CHECK(continuant(example) == G(431, 0));
    CHECK(check_noncomm_lewis_carroll(example));

    Value q = G(3, -7);
    CHECK(check_noncomm_lewis_carroll(QuotientSeq(zi, {q, conjugate(q)})));

    Value a = M(2, -1, 5, 3);
    CHECK(check_noncomm_lewis_carroll(QuotientSeq(RingId::int_matrix2(), {a, conjugate(a)})));

    try {
      check_noncomm_lewis_carroll(QuotientSeq(zi, {G(1, 1), G(1, 1)}));
      FAIL("expected NotQuasiPalindromic");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotQuasiPalindromic);
    }
  }

  TEST_CASE("quasi-palindrome continuants: random sequences") {
    Gen gen(32);
    for (int k = 0; k < 500; ++k) {
      const RingId r = k % 2 == 0 ? RingId::int_matrix2() : RingId::gaussian();
      std::vector<Value> q = quasi_palindrome(gen, r, static_cast<std::size_t>(gen.range(2, 8)));
      REQUIRE(is_quasi_palindromic(q));
      CHECK(check_noncomm_lewis_carroll(QuotientSeq(r, q)));
    }
  }

  TEST_CASE("quotient sequences reject foreign items") {
    CHECK_THROWS_AS(QuotientSeq(ZZ(), {G(1, 0)}), Error);
  }
}
