#include "csq/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csq/continuant.hpp"
#include "csq/euclid.hpp"
#include "csq/format.hpp"
#include "csq/hermitian.hpp"
#include "csq/two_squares.hpp"

namespace csq {

namespace {

using Json = nlohmann::ordered_json;

// What a subcommand produced: text lines and the JSON object.
struct Output {
  std::vector<std::string> lines;
  Json json = Json::object();
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::vector<std::string> strings(const std::vector<Value>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(format_value(v));
  return out;
}

mpz_class parse_integer(const std::string& text) { return parse_value(RingId::integers(), text).as_integer(); }

std::string paren(const mpz_class& v) { return v < 0 ? "(" + v.get_str() + ")" : v.get_str(); }

std::string paren(const Value& v) {
  if (v.ring().kind() == RingKind::Integers) return paren(v.as_integer());
  return "(" + format_value(v) + ")";
}

// Substitutes the quadruple into the form, e.g. "17^2 + 9^2 + 6^2 + 5^2".
std::string render_form(Form f, const Quad& v) {
  const std::string x = paren(v[0]), y = paren(v[1]), z = paren(v[2]), u = paren(v[3]);
  switch (f) {
    case Form::FourSquares:
      return x + "^2 + " + y + "^2 + " + z + "^2 + " + u + "^2";
    case Form::EisensteinDouble:
      return x + "^2 - " + x + "*" + y + " + " + y + "^2 + " + z + "^2 - " + z + "*" + u + " + " + u + "^2";
    case Form::X2p3Y2:
      return x + "^2 + 3*" + y + "^2 + " + z + "^2 + 3*" + u + "^2";
    case Form::Sqrt3Double:
      return x + "^2 - 3*" + y + "^2 + " + z + "^2 - 3*" + u + "^2";
  }
  return {};
}

std::string render_two_squares(const TwoSquaresRep& rep) {
  std::string sum = paren(rep.x) + "^2 + " + paren(rep.y) + "^2";
  if (rep.unit.is_one()) return sum;
  return format_value(rep.unit) + " * (" + sum + ")";
}

Json chain_json(const DescentChain& c) {
  std::vector<std::string> ms;
  for (const auto& m : c.ms) ms.push_back(m.get_str());
  return Json{{"ms", ms}, {"zs", strings(c.zs)}, {"qs", strings(c.qs)}};
}

Output run_form(Form f, const std::string& n_text, const std::optional<std::string>& z_text) {
  const mpz_class n = parse_integer(n_text);
  std::optional<Value> z;
  if (z_text) {
    const RingId r = f == Form::FourSquares    ? RingId::gaussian()
                     : f == Form::Sqrt3Double ? RingId::zsqrt3()
                                              : RingId::eisenstein();
    z = parse_value(r, *z_text);
  }
  FormResult res = represent(f, n, z);
  Output o;
  o.lines.push_back(n.get_str() + " = " + render_form(f, res.quad.values));
  std::vector<std::string> comps;
  for (const auto& v : res.quad.values) comps.push_back(v.get_str());
  o.json["input"] = n.get_str();
  o.json["form"] = form_name(f);
  o.json["components"] = comps;
  if (res.chain) {
    std::vector<std::string> ms;
    for (const auto& m : res.chain->ms) ms.push_back(m.get_str());
    o.lines.push_back("chain: m = " + join(ms, ", ") + "; q = " + join(strings(res.chain->qs), ", "));
    o.json["chain"] = chain_json(*res.chain);
  }
  return o;
}

Output run_twosq(const std::string& p_text, const std::string& method, const std::optional<std::string>& z_text) {
  const mpz_class p = parse_integer(p_text);
  std::optional<mpz_class> z;
  if (z_text) z = parse_integer(*z_text);
  Output o;
  TwoSquaresRep rep{Value::integer(0), Value::integer(0), Value::integer(1)};
  std::vector<Value> quotients;
  if (method == "smith") {
    SmithResult s = z ? smith_two_squares(p, *z) : smith_two_squares(p);
    rep = s.rep;
    quotients = s.quotients.items;
  } else {
    rep = canonicalize(z ? brillhart_two_squares(p, *z) : brillhart_two_squares(p));
  }
  o.lines.push_back(p.get_str() + " = " + render_two_squares(rep));
  o.json["input"] = p.get_str();
  o.json["form"] = "twosq";
  o.json["components"] = strings({rep.x, rep.y});
  o.json["unit"] = format_value(rep.unit);
  if (!quotients.empty()) {
    o.lines.push_back("quotients: " + join(strings(quotients), ", "));
    o.json["quotients"] = strings(quotients);
  }
  return o;
}

RingId poly_ring(const std::string& field) { return parse_ring(field + "[X]"); }

Output run_polytwosq(const std::string& field, const std::string& m_text, const std::optional<std::string>& z_text,
                     bool absorb) {
  const RingId r = poly_ring(field);
  const Value m = parse_value(r, m_text);
  if (!z_text) {
    throw Error(Errc::PreconditionFailed, "polytwosq needs a multiplier z with m | z^2 + 1");
  }
  const Value z = parse_value(r, *z_text);
  PolyTwoSquaresResult res = poly_two_squares_detailed(m, z);
  TwoSquaresRep rep = absorb ? unit_absorb(res.rep) : res.rep;
  Output o;
  o.lines.push_back("m = " + render_two_squares(rep));
  o.lines.push_back("quotients: " + join(strings(res.trace.quotients), ", "));
  o.json["input"] = format_value(m);
  o.json["form"] = "polytwosq";
  o.json["field"] = field;
  o.json["components"] = strings({rep.x, rep.y});
  o.json["unit"] = format_value(rep.unit);
  o.json["quotients"] = strings(res.trace.quotients);
  return o;
}

Output run_cyclotomic(const std::string& p_text) {
  const mpz_class p = parse_integer(p_text);
  CyclotomicRep c = cyclotomic_rep(p);
  const std::string index = mpz_class(4 * p).get_str();
  Output o;
  o.lines.push_back("Phi_" + index + " = " + format_value(c.phi) + " = " + paren(c.x) + "^2 + " + paren(c.y) + "^2");
  o.json["input"] = p.get_str();
  o.json["form"] = "cyclotomic";
  o.json["field"] = "Q";
  o.json["phi"] = format_value(c.phi);
  o.json["components"] = strings({c.x, c.y});
  o.json["unit"] = "1";
  return o;
}

std::vector<Value> parse_all(const RingId& r, const std::vector<std::string>& texts) {
  std::vector<Value> out;
  for (const auto& t : texts) out.push_back(parse_value(r, t));
  return out;
}

Output run_continuant(const std::string& ring, const std::vector<std::string>& items) {
  const RingId r = parse_ring(ring);
  const std::vector<Value> qs = parse_all(r, items);
  const Value c = continuant(r, qs);
  Output o;
  o.lines.push_back("[" + join(strings(qs), ", ") + "] = " + format_value(c));
  o.json["input"] = strings(qs);
  o.json["form"] = "continuant";
  o.json["ring"] = r.name();
  o.json["components"] = strings({c});
  return o;
}

Output run_euclid(const std::string& ring, const std::string& a_text, const std::string& b_text) {
  const RingId r = parse_ring(ring);
  const Value a = parse_value(r, a_text);
  const Value b = parse_value(r, b_text);
  EuclidTrace t = euclidean_algorithm(a, b);
  Output o;
  for (std::size_t k = 0; k < t.quotients.size(); ++k) {
    o.lines.push_back(format_value(t.remainders[k]) + " = (" + format_value(t.quotients[k]) + ") * (" +
                      format_value(t.remainders[k + 1]) + ") + (" + format_value(t.remainders[k + 2]) + ")");
  }
  o.lines.push_back("gcd = " + format_value(t.gcd));
  o.json["input"] = strings({a, b});
  o.json["form"] = "euclid";
  o.json["ring"] = r.name();
  o.json["components"] = strings({t.gcd});
  o.json["quotients"] = strings(t.quotients);
  o.json["remainders"] = strings(t.remainders);
  return o;
}

Output run_multiplier(const std::string& ring, const std::string& x_text, const std::string& y_text) {
  const RingId r = parse_ring(ring);
  const Value x = parse_value(r, x_text);
  const Value y = parse_value(r, y_text);
  const Value z = coprime_multiplier(x, y);
  const Value m = star_norm(x) + star_norm(y);
  const Value zz = star_norm(z) + Value::one(r);
  Output o;
  o.lines.push_back("z = " + format_value(z));
  o.lines.push_back(format_value(m) + " divides " + format_value(zz));
  o.json["input"] = strings({x, y});
  o.json["form"] = "multiplier";
  o.json["ring"] = r.name();
  o.json["components"] = strings({z});
  return o;
}

// verify <form> <n> <components...>; form is one of the four quaternary
// forms, "twosq" (n x y), or "polytwosq" (--field F, m x y [unit]).
Output run_verify(const std::string& form, const std::string& field, const std::vector<std::string>& args) {
  Output o;
  bool ok = false;
  std::string identity;
  if (auto f = parse_form(form)) {
    if (args.size() != 5) throw Error(Errc::PreconditionFailed, "verify " + form + " needs n x y z u");
    const mpz_class n = parse_integer(args[0]);
    Quad v;
    for (std::size_t k = 0; k < 4; ++k) v[k] = parse_integer(args[k + 1]);
    const mpz_class value = form_value(*f, v);
    ok = value == n;
    identity = value.get_str() + " = " + render_form(*f, v);
    o.json["input"] = n.get_str();
  } else if (form == "twosq" || form == "polytwosq" || form == "cyclotomic") {
    if (args.size() != 3 && args.size() != 4) throw Error(Errc::PreconditionFailed, "verify " + form + " needs n x y [unit]");
    const RingId r = form == "twosq" ? RingId::integers() : poly_ring(field);
    const Value n = parse_value(r, args[0]);
    const Value unit = args.size() == 4 ? parse_value(r, args[3]) : Value::one(r);
    TwoSquaresRep rep{parse_value(r, args[1]), parse_value(r, args[2]), unit};
    ok = verify_two_squares(n, rep);
    identity = format_value((rep.x * rep.x + rep.y * rep.y) * rep.unit) + " = " + render_two_squares(rep);
    o.json["input"] = format_value(n);
  } else {
    throw Error(Errc::PreconditionFailed, "unknown form '" + form + "'");
  }
  if (!ok) throw Error(Errc::PreconditionFailed, "verification failed: " + identity);
  o.lines.push_back("ok: " + identity);
  o.json["form"] = form;
  o.json["verified"] = true;
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuant-based representations by sums of squares and Hermitian forms", "csq"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a JSON object instead of text");

  std::function<Output()> action;
  std::string n_text, method = "brillhart", field, ring, form, a_text, b_text;
  std::optional<std::string> z_text;
  std::vector<std::string> items;
  bool absorb = false;

  auto* twosq = app.add_subcommand("twosq", "p = x^2 + y^2 for a prime p");
  twosq->add_option("p", n_text)->required();
  twosq->add_option("--method", method, "brillhart or smith")->check(CLI::IsMember({"brillhart", "smith"}));
  twosq->add_option("--z", z_text, "square root of -1 mod p to start from");
  twosq->callback([&] { action = [&] { return run_twosq(n_text, method, z_text); }; });

  for (Form f : {Form::FourSquares, Form::EisensteinDouble, Form::X2p3Y2, Form::Sqrt3Double}) {
    auto* sub = app.add_subcommand(form_name(f), "n = " + form_formula(f));
    sub->add_option("n", n_text)->required();
    sub->add_option("--z", z_text, "descend on n directly from this multiplier");
    sub->callback([&, f] { action = [&, f] { return run_form(f, n_text, z_text); }; });
  }

  auto* poly = app.add_subcommand("polytwosq", "m = u (x^2 + y^2) over F[X] from a multiplier z");
  poly->add_option("--field", field, "Q or F:p")->required();
  poly->add_option("m", a_text)->required();
  poly->add_option("z", z_text);
  poly->add_flag("--absorb", absorb, "rewrite the unit into the squares when possible");
  poly->callback([&] { action = [&] { return run_polytwosq(field, a_text, z_text, absorb); }; });

  auto* cyc = app.add_subcommand("cyclotomic", "Phi_4p = x^2 + y^2 for an odd prime p");
  cyc->add_option("p", n_text)->required();
  cyc->callback([&] { action = [&] { return run_cyclotomic(n_text); }; });

  auto* cont = app.add_subcommand("continuant", "[e1, ..., en]");
  cont->add_option("--ring", ring)->required();
  cont->add_option("items", items);
  cont->callback([&] { action = [&] { return run_continuant(ring, items); }; });

  auto* euc = app.add_subcommand("euclid", "Euclidean algorithm on (a, b)");
  euc->add_option("--ring", ring)->required();
  euc->add_option("a", a_text)->required();
  euc->add_option("b", b_text)->required();
  euc->callback([&] { action = [&] { return run_euclid(ring, a_text, b_text); }; });

  auto* mult = app.add_subcommand("multiplier", "z with x x* + y y* | z z* + 1");
  mult->add_option("--ring", ring)->required();
  mult->add_option("x", a_text)->required();
  mult->add_option("y", b_text)->required();
  mult->callback([&] { action = [&] { return run_multiplier(ring, a_text, b_text); }; });

  auto* ver = app.add_subcommand("verify", "check a representation");
  ver->add_option("form", form)->required();
  ver->add_option("--field", field, "field for polytwosq")->default_val("Q");
  ver->add_option("args", items)->required();
  ver->callback([&] { action = [&] { return run_verify(form, field, items); }; });

  // CLI11 splits "[a,b]" into a list for vector options; a trailing space
  // keeps matrices intact and the element grammar ignores it.
  std::vector<std::string> args;
  for (int k = argc - 1; k > 0; --k) {
    std::string a = argv[k];
    if (a.size() > 1 && a.front() == '[' && a.back() == ']') a += ' ';
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Output o = action();
    if (json) {
      out << o.json.dump(2) << '\n';
    } else {
      for (const auto& line : o.lines) out << line << '\n';
    }
    return 0;
  } catch (const Error& e) {
    if (json) {
      out << Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::ParseError ? 2 : 1;
  }
}

}  // namespace csq
