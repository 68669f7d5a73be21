#include <doctest.h>

#include "csq/format.hpp"
#include "csq/ring.hpp"
#include "support.hpp"

using namespace csq;
using namespace csq::test;

TEST_SUITE("ring") {
  TEST_CASE("euclidean norm examples") {
    CHECK(euclidean_norm(Z(-7)) == 7);
    CHECK(euclidean_norm(V(QX(), "X^2+1")) == 4);
    CHECK(euclidean_norm(S(7, 2)) == 37);
    CHECK(euclidean_norm(Value::zero(QX())) == 0);
    CHECK(euclidean_norm(E(3, -2)) == 19);
    CHECK_THROWS_AS(euclidean_norm(M(1, 0, 0, 1)), Error);
  }

  TEST_CASE("euclidean division examples") {
    DivResult d = euclidean_divide(Z(13), Z(5));
    CHECK(d.quotient == Z(2));
    CHECK(d.remainder == Z(3));

    d = euclidean_divide(Z(-13), Z(5));
    CHECK(d.quotient == Z(-3));
    CHECK(d.remainder == Z(2));

    d = euclidean_divide(E(7, -3), E(2, 0));
    CHECK(d.quotient == E(3, -2));
    CHECK(d.remainder == E(1, 1));

    d = euclidean_divide(S(7, 2), S(2, 0));
    CHECK(d.quotient == S(3, 1));
    CHECK(d.remainder == S(1, 0));

    // 54 + 10i over 7 rounds to 8 + i.
    d = euclidean_divide(G(54, 10), G(7, 0));
    CHECK(d.quotient == G(8, 1));
    CHECK(d.remainder == G(-2, 3));

    // Ties toward zero: (3 + 3i)/2 -> 1 + i.
    d = euclidean_divide(G(3, 3), G(2, 0));
    CHECK(d.quotient == G(1, 1));

    d = euclidean_divide(V(QX(), "2*X^3+X"), V(QX(), "2*X^2-X+1"));
    CHECK(d.quotient == V(QX(), "X+1/2"));
    CHECK(d.remainder == V(QX(), "1/2*X-1/2"));

    CHECK_THROWS_AS(euclidean_divide(Z(1), Z(0)), Error);
    try {
      euclidean_divide(G(1, 1), G(0, 0));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DivisionByZero);
    }
  }

  TEST_CASE("division identity and norm decrease on random inputs") {
    Gen gen(11);
    const RingId rings[] = {ZZ(), RingId::gaussian(), RingId::eisenstein(), RingId::zsqrt3(), QX(), FX(7), FX(11),
                            QQ(), RingId::prime_field(13)};
    for (const auto& r : rings) {
      CAPTURE(r.name());
      for (int k = 0; k < 300; ++k) {
        Value a = gen.element(r, 60);
        Value b = gen.nonzero(r, 15);
        DivResult d = euclidean_divide(a, b);
        CHECK(d.quotient * b + d.remainder == a);
        CHECK(euclidean_norm(d.remainder) < euclidean_norm(b));
        if (r.kind() == RingKind::Integers) {
          CHECK(d.remainder.as_integer() >= 0);
        }
      }
    }
  }

  TEST_CASE("conjugation examples") {
    CHECK(conjugate(G(54, 10)) == G(54, -10));
    CHECK(conjugate(M(1, 2, 3, 4)) == M(4, -2, -3, 1));
    CHECK(conjugate(S(4, 3)) == S(4, -3));
    // conj(j) = j^2 = -1 - j
    CHECK(conjugate(E(0, 1)) == E(0, 1) * E(0, 1));
    CHECK(conjugate(V(QX(), "X^2+3")) == V(QX(), "X^2+3"));
  }

  TEST_CASE("conjugation is an additive anti-automorphism") {
    Gen gen(12);
    const RingId rings[] = {ZZ(), RingId::gaussian(), RingId::eisenstein(), RingId::zsqrt3(), RingId::int_matrix2(),
                            QX()};
    for (const auto& r : rings) {
      CAPTURE(r.name());
      for (int k = 0; k < 200; ++k) {
        Value a = gen.element(r);
        Value b = gen.element(r);
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
        CHECK(conjugate(a * b) == conjugate(b) * conjugate(a));
        // a a* = a* a, and it is central.
        CHECK(a * conjugate(a) == conjugate(a) * a);
        Value n = star_norm(a);
        CHECK(n * b == b * n);
      }
    }
  }

  TEST_CASE("self-conjugate matrices are scalar and central") {
    Gen gen(13);
    for (int k = 0; k < 200; ++k) {
      long s = gen.range(-9, 9);
      Value fixed = M(s, 0, 0, s);
      CHECK(conjugate(fixed) == fixed);
      Value a = gen.element(RingId::int_matrix2());
      CHECK(fixed * a == a * fixed);
      // a + a* is self-conjugate.
      Value t = a + conjugate(a);
      CHECK(conjugate(t) == t);
      CHECK(t * a == a * t);
    }
  }

  TEST_CASE("star norms are rational integers with the expected sign") {
    Gen gen(14);
    for (int k = 0; k < 300; ++k) {
      for (RingKind kind : {RingKind::Gaussian, RingKind::Eisenstein, RingKind::ZSqrt3}) {
        RawPair raw{gen.range(-50, 50), gen.range(-50, 50)};
        RingId r = kind == RingKind::Gaussian     ? RingId::gaussian()
                   : kind == RingKind::Eisenstein ? RingId::eisenstein()
                                                  : RingId::zsqrt3();
        Value v{r, Pair{raw.a, raw.b}};
        CHECK(star_norm(v) == Value::from_int(r, raw_norm(kind, raw)));
        CHECK(star_norm_integer(v) == raw_norm(kind, raw));
        if (kind != RingKind::ZSqrt3) CHECK(star_norm_integer(v) >= 0);
      }
    }
    CHECK(star_norm_integer(E(3, -2)) == 19);
    CHECK(star_norm_integer(S(1, 1)) == -2);
  }

  TEST_CASE("multiplication matches plain integer formulas") {
    Gen gen(15);
    for (int k = 0; k < 300; ++k) {
      RawPair x{gen.range(-99, 99), gen.range(-99, 99)};
      RawPair y{gen.range(-99, 99), gen.range(-99, 99)};
      for (RingKind kind : {RingKind::Gaussian, RingKind::Eisenstein, RingKind::ZSqrt3}) {
        RingId r = kind == RingKind::Gaussian     ? RingId::gaussian()
                   : kind == RingKind::Eisenstein ? RingId::eisenstein()
                                                  : RingId::zsqrt3();
        RawPair p = raw_mul(kind, x, y);
        CHECK(Value(r, Pair{x.a, x.b}) * Value(r, Pair{y.a, y.b}) == Value(r, Pair{p.a, p.b}));
      }
    }
  }

  TEST_CASE("units") {
    CHECK(is_unit(Value::from_int(RingId::prime_field(7), 3)));
    CHECK(!is_unit(Value::zero(RingId::prime_field(7))));
    CHECK(is_unit(Z(-1)));
    CHECK(!is_unit(Z(2)));
    CHECK(is_unit(G(0, -1)));
    CHECK(is_unit(E(1, 1)));  // -j^2
    CHECK(is_unit(S(2, 1)));  // norm 1
    CHECK(is_unit(S(1, 1)) == false);
    CHECK(is_unit(V(QX(), "-3/2")));
    CHECK(!is_unit(V(QX(), "X")));
    CHECK(is_unit(M(2, 1, 1, 1)));
    for (const Value& u : {G(0, 1), E(0, 1), S(2, 1), S(2, -1), V(QX(), "7"), M(2, 1, 1, 1), Z(-1)}) {
      CHECK(u * inverse(u) == Value::one(u.ring()));
      CHECK(inverse(u) * u == Value::one(u.ring()));
    }
    CHECK_THROWS_AS(inverse(Z(2)), Error);
  }

  TEST_CASE("ring mismatch and construction checks") {
    CHECK_THROWS_AS(Z(1) + G(1, 0), Error);
    try {
      (void)(E(1, 0) * S(1, 0));
      FAIL("expected RingMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::RingMismatch);
    }
    try {
      RingId::prime_field(9);
      FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PreconditionFailed);
    }
    try {
      RingId::polynomials(ZZ());
      FAIL("expected UnsupportedRing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnsupportedRing);
    }
    CHECK(FX(7) == FX(7));
    CHECK(FX(7) != FX(11));
    CHECK(FX(7) != QX());
  }

  TEST_CASE("normal forms") {
    const RingId f7 = RingId::prime_field(7);
    CHECK(Value::from_int(f7, -1) == Value::from_int(f7, 6));
    Value half = Value::from_rational(QQ(), mpq_class(2, 4));
    CHECK(half.as_rational().get_num() == 1);
    CHECK(half.as_rational().get_den() == 2);
    Value p = V(QX(), "X^2+1") - V(QX(), "X^2");
    CHECK(p.degree() == 0);
    CHECK((V(QX(), "X") - V(QX(), "X")).coeffs().empty());
    CHECK(V(FX(7), "7*X^3+X").degree() == 1);
    CHECK(monic(V(QX(), "2*X+1")) == V(QX(), "X+1/2"));
    CHECK(gcd(Z(-12), Z(18)) == Z(6));
    CHECK(gcd(V(QX(), "X^2-1"), V(QX(), "2*X+2")) == V(QX(), "X+1"));
  }

  TEST_CASE("parse and format") {
    CHECK(V(RingId::gaussian(), "54+10i") == G(54, 10));
    CHECK(V(RingId::gaussian(), " 54 + 10 i ") == G(54, 10));
    CHECK(V(RingId::gaussian(), "-i") == G(0, -1));
    CHECK(V(RingId::eisenstein(), "3-2w") == E(3, -2));
    CHECK(V(RingId::zsqrt3(), "s") == S(0, 1));
    CHECK(V(RingId::int_matrix2(), "[[1,-2],[3,4]]") == M(1, -2, 3, 4));
    CHECK(V(RingId::prime_field(7), "10") == Value::from_int(RingId::prime_field(7), 3));
    CHECK(format_value(V(QX(), "2*X^4-2*X^3+3*X^2-2*X+1")) == "2*X^4-2*X^3+3*X^2-2*X+1");
    CHECK(format_value(V(QX(), "1/2*X")) == "1/2*X");
    CHECK(format_value(G(-1, 1)) == "-1+i");
    CHECK(format_value(G(0, 0)) == "0");
    CHECK(format_value(E(0, -5)) == "-5w");
    CHECK(format_value(M(1, 0, 0, -1)) == "[[1,0],[0,-1]]");
    CHECK(format_value(Value::zero(QX())) == "0");

    for (const char* id : {"Z", "Q", "F:7", "Q[X]", "F:11[X]", "Z[i]", "Z[w]", "Z[s]", "M2"}) {
      CHECK(parse_ring(id).name() == id);
    }
    CHECK_THROWS_AS(parse_ring("F:8"), Error);
    CHECK_THROWS_AS(parse_ring("R"), ParseError);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      V(RingId::gaussian(), "3+4j");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
      CHECK(e.code() == Errc::ParseError);
    }
    try {
      V(QQ(), "1/0");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(V(ZZ(), ""), ParseError);
    CHECK_THROWS_AS(V(ZZ(), "12 3x"), ParseError);
  }

  TEST_CASE("parse after format is the identity") {
    Gen gen(16);
    const RingId rings[] = {ZZ(), QQ(), RingId::prime_field(11), QX(), FX(7), RingId::gaussian(),
                            RingId::eisenstein(), RingId::zsqrt3(), RingId::int_matrix2()};
    for (const auto& r : rings) {
      for (int k = 0; k < 200; ++k) {
        Value v = gen.element(r, 40);
        CHECK(parse_value(r, format_value(v)) == v);
      }
    }
  }
}
