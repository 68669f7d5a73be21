#include "csq/format.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace csq {

namespace {

// Input with whitespace removed; keeps the original offset of every char.
class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        pos_.push_back(i);
      }
    }
    end_pos_ = text.size();
  }

  bool done() const { return at_ == chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[at_]; }
  char next() { return chars_[at_++]; }
  std::size_t position() const { return done() ? end_pos_ : pos_[at_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++at_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(position(), what); }

  mpz_class digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(next());
    return mpz_class(s);
  }

  // -?digits
  mpz_class signed_integer() {
    bool neg = accept('-');
    if (!neg) accept('+');
    mpz_class n = digits();
    return neg ? mpz_class(-n) : n;
  }

  // digits[/digits]
  mpq_class unsigned_rational() {
    mpz_class num = digits();
    mpz_class den = 1;
    if (accept('/')) {
      std::size_t at = position();
      den = digits();
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::vector<char> chars_;
  std::vector<std::size_t> pos_;
  std::size_t end_pos_ = 0;
  std::size_t at_ = 0;
};

void expect_end(const Cursor& c) {
  if (!c.done()) c.fail(std::string("unexpected '") + c.peek() + "'");
}

Value parse_polynomial(const RingId& ring, Cursor& c) {
  PolyCoeffs acc;
  bool first = true;
  while (first || !c.done()) {
    bool neg = false;
    if (c.accept('-')) {
      neg = true;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;

    mpq_class coef = 1;
    unsigned long exponent = 0;
    bool has_coef = std::isdigit(static_cast<unsigned char>(c.peek()));
    if (has_coef) coef = c.unsigned_rational();
    bool has_var = false;
    if (has_coef && c.accept('*')) {
      if (c.peek() != 'X') c.fail("expected 'X' after '*'");
    }
    if (c.accept('X')) {
      has_var = true;
      exponent = 1;
      if (c.accept('^')) {
        mpz_class e = c.digits();
        if (!e.fits_ulong_p() || e > 100000) c.fail("exponent too large");
        exponent = e.get_ui();
      }
    }
    if (!has_coef && !has_var) c.fail("expected a term");
    if (neg) coef = -coef;
    if (acc.size() <= exponent) acc.resize(exponent + 1, mpq_class(0));
    acc[exponent] += coef;
  }
  return Value{ring, std::move(acc)};
}

Value parse_pair(const RingId& ring, Cursor& c, char letter) {
  mpz_class re = 0, im = 0;
  bool first = true;
  while (first || !c.done()) {
    bool neg = false;
    if (c.accept('-')) {
      neg = true;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;

    mpz_class coef = 1;
    bool has_coef = std::isdigit(static_cast<unsigned char>(c.peek()));
    if (has_coef) coef = c.digits();
    bool has_letter = false;
    if (has_coef && c.accept('*')) {
      if (c.peek() != letter) c.fail(std::string("expected '") + letter + "' after '*'");
    }
    if (c.accept(letter)) has_letter = true;
    if (!has_coef && !has_letter) c.fail("expected a term");
    if (neg) coef = -coef;
    (has_letter ? im : re) += coef;
  }
  return Value{ring, Pair{re, im}};
}

Value parse_matrix(const RingId& ring, Cursor& c) {
  Mat2 m;
  c.expect('[');
  for (int row = 0; row < 2; ++row) {
    if (row == 1) c.expect(',');
    c.expect('[');
    m[2 * row] = c.signed_integer();
    c.expect(',');
    m[2 * row + 1] = c.signed_integer();
    c.expect(']');
  }
  c.expect(']');
  return Value{ring, m};
}

char pair_letter(RingKind kind) {
  switch (kind) {
    case RingKind::Gaussian:
      return 'i';
    case RingKind::Eisenstein:
      return 'w';
    default:
      return 's';
  }
}

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_polynomial(const Value& a) {
  const PolyCoeffs& c = a.coeffs();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    mpq_class mag = abs(c[k]);
    bool neg = c[k] < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (k == 0) {
      out += format_rational(mag);
      continue;
    }
    if (mag != 1) out += format_rational(mag) + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string format_pair(const Pair& p, char letter) {
  const mpz_class& re = p[0];
  const mpz_class& im = p[1];
  if (im == 0) return re.get_str();
  std::string imag;
  mpz_class mag = abs(im);
  if (mag != 1) imag = mag.get_str();
  imag += letter;
  if (re == 0) return (im < 0 ? "-" : "") + imag;
  return re.get_str() + (im < 0 ? "-" : "+") + imag;
}

}  // namespace

RingId parse_ring(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  bool poly = false;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "[X]") == 0) {
    poly = true;
    s.resize(s.size() - 3);
  }
  auto wrap = [&](const RingId& r) { return poly ? RingId::polynomials(r) : r; };
  if (s == "Q") return wrap(RingId::rationals());
  if (s.rfind("F:", 0) == 0 && s.size() > 2) {
    for (std::size_t i = 2; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError(i, "bad field modulus");
    }
    return wrap(RingId::prime_field(mpz_class(s.substr(2))));
  }
  if (!poly) {
    if (s == "Z") return RingId::integers();
    if (s == "Z[i]") return RingId::gaussian();
    if (s == "Z[w]") return RingId::eisenstein();
    if (s == "Z[s]") return RingId::zsqrt3();
    if (s == "M2") return RingId::int_matrix2();
  }
  throw ParseError(0, "unknown ring '" + std::string(text) + "'");
}

Value parse_value(const RingId& ring, std::string_view text) {
  Cursor c(text);
  if (c.done()) c.fail("empty input");
  Value out = Value::zero(ring);
  switch (ring.kind()) {
    case RingKind::Integers:
      out = Value{ring, c.signed_integer()};
      break;
    case RingKind::Rationals:
    case RingKind::PrimeField: {
      bool neg = c.accept('-');
      if (!neg) c.accept('+');
      mpq_class q = c.unsigned_rational();
      out = Value::from_rational(ring, neg ? mpq_class(-q) : q);
      break;
    }
    case RingKind::Polynomial:
      out = parse_polynomial(ring, c);
      break;
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      out = parse_pair(ring, c, pair_letter(ring.kind()));
      break;
    case RingKind::IntMatrix2:
      out = parse_matrix(ring, c);
      break;
  }
  expect_end(c);
  return out;
}

std::string format_value(const Value& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return a.as_integer().get_str();
    case RingKind::Rationals:
      return format_rational(a.as_rational());
    case RingKind::Polynomial:
      return format_polynomial(a);
    case RingKind::Gaussian:
    case RingKind::Eisenstein:
    case RingKind::ZSqrt3:
      return format_pair(a.pair(), pair_letter(a.ring().kind()));
    case RingKind::IntMatrix2: {
      const Mat2& m = a.mat();
      return "[[" + m[0].get_str() + "," + m[1].get_str() + "],[" + m[2].get_str() + "," +
             m[3].get_str() + "]]";
    }
  }
  return "?";
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnsupportedRing: return "UnsupportedRing";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::LengthLimitExceeded: return "LengthLimitExceeded";
    case Errc::NoncommutativeRing: return "NoncommutativeRing";
    case Errc::NotQuasiPalindromic: return "NotQuasiPalindromic";
    case Errc::BothZero: return "BothZero";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::PalindromeViolation: return "PalindromeViolation";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::BadField: return "BadField";
    case Errc::DegreeError: return "DegreeError";
    case Errc::UnitNotSumOfSquares: return "UnitNotSumOfSquares";
    case Errc::NoMultiplier: return "NoMultiplier";
    case Errc::ChainStall: return "ChainStall";
    case Errc::NonTermination: return "NonTermination";
    case Errc::ReconstructionMismatch: return "ReconstructionMismatch";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace csq
