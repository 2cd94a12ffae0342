#include "kmorbit/error.hpp"
#include "kmorbit/laurent.hpp"

#include <cctype>
#include <climits>

namespace kmorbit {

namespace {

std::string term_literal(const GaussianRational& c, int e) {
  if (e == 0)
    return c.to_string();
  const std::string tp = e == 1 ? "t" : "t^" + std::to_string(e);
  if (c.is_one())
    return tp;
  if (c == GaussianRational(-1))
    return "-" + tp;
  return c.to_string() + "*" + tp;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - ";
    out.append(term, 1);
  } else {
    out += " + ";
    out += term;
  }
}

// Recursive-descent reader for the literal grammar:
//   laurent := sign? item (("+"|"-") item)*
//   item    := term | "O(" tpow ")"          (the O-term must come last)
//   term    := coef ("*"? tpow)? | tpow
//   coef    := rat | "(" rat (("+"|"-") rat? "i")? ")"
//   rat     := int ("/" posint)?
//   tpow    := "t" ("^" int)?
class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  LaurentSeries laurent() {
    std::map<int, GaussianRational> terms;
    std::optional<int> precision;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip();
    }
    if (at_end())
      fail("expected a term");
    for (;;) {
      if (precision)
        fail("the O-term must be the last term");
      if (peek() == 'O') {
        if (negative)
          fail("an O-term cannot be negated");
        precision = big_o();
      } else {
        auto [c, e] = term();
        if (negative)
          c = -c;
        terms[e] += c;
      }
      skip();
      if (at_end())
        break;
      const char op = get();
      if (op != '+' && op != '-')
        fail(std::string("unexpected character '") + op + "'", pos_ - 1);
      negative = op == '-';
      skip();
    }
    for (auto it = terms.begin(); it != terms.end();) {
      if (it->second.is_zero())
        it = terms.erase(it);
      else
        ++it;
    }
    if (precision)
      for (const auto& [e, c] : terms)
        if (e >= *precision)
          fail("term t^" + std::to_string(e) + " lies at or beyond the O-term");
    return LaurentSeries::from_terms(terms, precision);
  }

  GaussianRational scalar_only() {
    auto s = laurent();
    if (!s.is_exact())
      fail("expected an exact scalar", 0);
    const auto terms = s.terms();
    if (terms.empty())
      return {};
    if (terms.size() != 1 || terms.begin()->first != 0)
      fail("expected a constant without t", 0);
    return terms.begin()->second;
  }

private:
  std::pair<GaussianRational, int> term() {
    if (peek() == 't')
      return {GaussianRational(1), tpow()};
    GaussianRational c = coef();
    skip();
    if (peek() == '*') {
      get();
      skip();
      if (peek() != 't')
        fail("expected 't' after '*'");
      return {c, tpow()};
    }
    if (peek() == 't')
      return {c, tpow()};
    return {c, 0};
  }

  GaussianRational coef() {
    if (peek() != '(')
      return GaussianRational(rat(), 0);
    get();
    skip();
    mpq_class re = rat();
    mpq_class im = 0;
    skip();
    if (peek() == '+' || peek() == '-') {
      const bool neg = get() == '-';
      skip();
      if (peek() == 'i') {
        im = 1;
      } else {
        im = rat();
        skip();
      }
      if (peek() != 'i')
        fail("expected 'i'");
      get();
      if (neg)
        im = -im;
      skip();
    }
    if (peek() != ')')
      fail("expected ')'");
    get();
    return {re, im};
  }

  mpq_class rat() {
    mpz_class num = integer();
    skip();
    if (peek() != '/')
      return mpq_class(num);
    get();
    skip();
    const std::size_t at = pos_;
    mpz_class den = integer(false);
    if (den == 0)
      fail("zero denominator", at);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  mpz_class integer(bool allow_sign = true) {
    const std::size_t start = pos_;
    std::string digits;
    if (allow_sign && peek() == '-') {
      digits.push_back(get());
      skip();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a digit");
    while (std::isdigit(static_cast<unsigned char>(peek())))
      digits.push_back(get());
    mpz_class z;
    if (z.set_str(digits, 10) != 0)
      fail("bad integer", start);
    return z;
  }

  int small_integer() {
    const std::size_t at = pos_;
    const mpz_class z = integer();
    if (z > INT_MAX / 4 || z < -(INT_MAX / 4))
      fail("exponent out of range", at);
    return static_cast<int>(z.get_si());
  }

  int tpow() {
    if (get() != 't')
      fail("expected 't'", pos_ - 1);
    skip();
    if (peek() != '^')
      return 1;
    get();
    skip();
    return small_integer();
  }

  int big_o() {
    get(); // 'O'
    skip();
    if (get() != '(')
      fail("expected '(' after O", pos_ - 1);
    skip();
    const int n = tpow();
    skip();
    if (get() != ')')
      fail("expected ')'", pos_ - 1);
    return n;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw SyntaxError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string format_laurent(const LaurentSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms())
    append_term(out, term_literal(c, e));
  if (s.precision()) {
    const int n = *s.precision();
    const std::string big_o = n == 1 ? std::string("O(t)") : "O(t^" + std::to_string(n) + ")";
    out = out.empty() ? big_o : out + " + " + big_o;
  }
  return out.empty() ? "0" : out;
}

LaurentSeries parse_laurent(std::string_view text) { return Reader(text).laurent(); }

GaussianRational parse_scalar(std::string_view text) { return Reader(text).scalar_only(); }

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << format_laurent(s); }

} // namespace kmorbit
