#include "nlosc/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace nlosc {

namespace {

enum class Tok {
  Plus,
  Minus,
  Star,
  Caret,
  Slash,
  Equals,
  LParen,
  RParen,
  Number,
  X,
  XPrime,
  XDoublePrime,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::Equals: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Number: return "number";
    case Tok::X: return "'x'";
    case Tok::XPrime: return "'x''";
    case Tok::XDoublePrime: return "'x'''";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string text, int c) {
    out.push_back({k, std::move(text), line, c});
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    const int at = col;
    if (ch == 'x') {
      if (src.substr(i + 1, 2) == "''") {
        push(Tok::XDoublePrime, "x''", at);
        i += 3;
        col += 3;
      } else if (i + 1 < src.size() && src[i + 1] == '\'') {
        push(Tok::XPrime, "x'", at);
        i += 2;
        col += 2;
      } else {
        push(Tok::X, "x", at);
        ++i;
        ++col;
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t start = i;
      bool saw_digit = false;
      bool saw_dot = false;
      while (i < src.size()) {
        const char c2 = src[i];
        if (std::isdigit(static_cast<unsigned char>(c2))) {
          saw_digit = true;
        } else if (c2 == '.') {
          if (saw_dot) throw ParseError(line, at, "malformed number");
          saw_dot = true;
        } else {
          break;
        }
        ++i;
      }
      if (!saw_digit) throw ParseError(line, at, "malformed number");
      const std::size_t len = i - start;
      push(Tok::Number, std::string(src.substr(start, len)), at);
      col += static_cast<int>(len);
      continue;
    }
    switch (ch) {
      case '+': push(Tok::Plus, "+", at); break;
      case '-': push(Tok::Minus, "-", at); break;
      case '*': push(Tok::Star, "*", at); break;
      case '^': push(Tok::Caret, "^", at); break;
      case '/': push(Tok::Slash, "/", at); break;
      case '=': push(Tok::Equals, "=", at); break;
      case '(': push(Tok::LParen, "(", at); break;
      case ')': push(Tok::RParen, ")", at); break;
      default:
        throw ParseError(line, col,
                         std::string("unexpected character '") + ch + "'");
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct TermData {
  Rational coeff = Rational(1);
  int k = 0;  // velocity power
  int m = 0;  // position power
  bool has_xdd = false;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  PolynomialODE run(std::optional<Rational> w_override) {
    PolynomialODE ode;
    Rational xdd_coeff;
    bool have_xdd = false;

    int sign = 1;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
      sign = get().kind == Tok::Minus ? -1 : 1;
    for (;;) {
      const Token& lead = peek();
      TermData td = parse_term();
      td.coeff = td.coeff * Rational(sign);
      if (td.has_xdd) {
        if (have_xdd)
          fail(lead, "only one x'' term is allowed");
        if (td.coeff.is_zero())
          fail(lead, "the x'' coefficient must be nonzero");
        have_xdd = true;
        xdd_coeff = td.coeff;
      } else if (td.k == 0) {
        ode.alphas[td.m] += td.coeff;
      } else {
        ode.lambdas[{td.k, td.m}] += td.coeff;
      }

      const Token& t = get();
      if (t.kind == Tok::Plus) {
        sign = 1;
      } else if (t.kind == Tok::Minus) {
        sign = -1;
      } else if (t.kind == Tok::Equals) {
        break;
      } else {
        fail(t, std::string("expected '+', '-', or '=', got ") +
                    describe(t.kind));
      }
    }

    const Token& rhs = get();
    if (rhs.kind != Tok::Number || !number_value(rhs).is_zero())
      fail(rhs, "right-hand side must be 0");
    const Token& end = get();
    if (end.kind != Tok::End)
      fail(end, std::string("unexpected trailing ") + describe(end.kind));
    if (!have_xdd)
      fail(toks_.front(), "equation needs exactly one x'' term");

    if (xdd_coeff != Rational(1)) {
      for (auto& [l, a] : ode.alphas) a /= xdd_coeff;
      for (auto& [km, lam] : ode.lambdas) lam /= xdd_coeff;
    }
    std::erase_if(ode.alphas, [](const auto& e) { return e.second.is_zero(); });
    std::erase_if(ode.lambdas,
                  [](const auto& e) { return e.second.is_zero(); });

    if (w_override) {
      if (!(*w_override > Rational(0)))
        throw std::invalid_argument("frequency override must be positive");
      ode.w = *w_override;
    } else {
      ode.w = Rational(1);
      auto it = ode.alphas.find(1);
      if (it != ode.alphas.end() && it->second > Rational(0)) {
        if (auto root = it->second.sqrt()) ode.w = *root;
      }
    }
    return ode;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.col, msg);
  }

  Rational number_value(const Token& t) const {
    try {
      return parse_rational(t.text);
    } catch (const std::exception& e) {
      fail(t, e.what());
    }
  }

  Rational parse_coeff() {
    const Token& first = get();
    if (first.text.find('.') != std::string::npos) {
      if (peek().kind == Tok::Slash)
        fail(peek(), "a fraction must have integer parts");
      return number_value(first);
    }
    if (peek().kind == Tok::Slash) {
      get();
      const Token& den = get();
      if (den.kind != Tok::Number ||
          den.text.find('.') != std::string::npos)
        fail(den, "expected an integer denominator");
      const Rational d = number_value(den);
      if (d.is_zero()) fail(den, "zero denominator");
      return number_value(first) / d;
    }
    return number_value(first);
  }

  int parse_exponent() {
    get();  // '^'
    const Token& t = get();
    if (t.kind != Tok::Number || t.text.find('.') != std::string::npos)
      fail(t, "exponent must be a nonnegative integer");
    int value = 0;
    auto [p, ec] = std::from_chars(t.text.data(),
                                   t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail(t, "exponent out of range");
    return value;
  }

  void parse_factor(TermData& td) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::XDoublePrime:
        get();
        if (peek().kind == Tok::Caret)
          fail(peek(), "x'' cannot take an exponent");
        td.has_xdd = true;
        return;
      case Tok::XPrime: {
        get();
        td.k += peek().kind == Tok::Caret ? parse_exponent() : 1;
        return;
      }
      case Tok::X: {
        get();
        td.m += peek().kind == Tok::Caret ? parse_exponent() : 1;
        return;
      }
      case Tok::LParen: {
        get();
        if (peek().kind != Tok::XPrime)
          fail(peek(), "expected x' inside parentheses");
        get();
        if (get().kind != Tok::RParen) fail(toks_[pos_ - 1], "expected ')'");
        td.k += peek().kind == Tok::Caret ? parse_exponent() : 1;
        return;
      }
      default:
        fail(t, std::string("expected a factor (x, x', x'', or (x')), got ") +
                    describe(t.kind));
    }
  }

  TermData parse_term() {
    TermData td;
    bool have_coeff = false;
    if (peek().kind == Tok::Number) {
      td.coeff = parse_coeff();
      have_coeff = true;
    }
    const bool factor_start =
        peek().kind == Tok::X || peek().kind == Tok::XPrime ||
        peek().kind == Tok::XDoublePrime || peek().kind == Tok::LParen;
    if (have_coeff && !factor_start) {
      if (peek().kind == Tok::Star) {
        get();
      } else {
        return td;  // bare constant
      }
    } else if (have_coeff && factor_start) {
      fail(peek(), "missing '*' between coefficient and factor");
    }

    parse_factor(td);
    while (peek().kind == Tok::Star) {
      get();
      parse_factor(td);
    }
    if (td.has_xdd && (td.k != 0 || td.m != 0))
      fail(toks_[pos_ - 1], "x'' must stand alone in its term");
    return td;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

PolynomialODE parse_ode(std::string_view source,
                        std::optional<Rational> w_override) {
  return Parser(source).run(w_override);
}

std::string render_ode(const PolynomialODE& ode) {
  std::string out = "x''";
  auto append = [&out](const Rational& c, const std::string& factors) {
    const bool neg = c.is_negative();
    const Rational mag = neg ? -c : c;
    out += neg ? " - " : " + ";
    if (factors.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  };
  auto x_part = [](int m) -> std::string {
    if (m == 0) return "";
    if (m == 1) return "x";
    return "x^" + std::to_string(m);
  };
  for (const auto& [l, a] : ode.alphas) append(a, x_part(l));
  for (const auto& [km, lam] : ode.lambdas) {
    const auto [k, m] = km;
    std::string f = k == 1 ? "x'" : "(x')^" + std::to_string(k);
    if (m > 0) f += "*" + x_part(m);
    append(lam, f);
  }
  out += " = 0";
  return out;
}

}  // namespace nlosc
