#include "nlosc/rational.hpp"

#include <cctype>

namespace nlosc {

namespace {

// Parses a run of digits into an int64, tracking overflow.
std::int64_t parse_digits(std::string_view text, std::size_t& i,
                          const std::string& full) {
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw std::invalid_argument("invalid rational '" + full +
                                "': expected digits");
  __int128 v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + (text[i] - '0');
    if (v > INT64_MAX)
      throw std::overflow_error("rational literal '" + full +
                                "' exceeds 64-bit range");
    ++i;
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string full(text);
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }

  Rational value;
  if (i < text.size() && text[i] == '.') {
    // ".5" style decimal
    ++i;
    std::size_t start = i;
    std::int64_t frac = parse_digits(text, i, full);
    std::size_t digits = i - start;
    if (digits > 12)
      throw std::invalid_argument("invalid rational '" + full +
                                  "': more than 12 fractional digits");
    std::int64_t scale = 1;
    for (std::size_t d = 0; d < digits; ++d) scale *= 10;
    value = Rational(frac, scale);
  } else {
    std::int64_t whole = parse_digits(text, i, full);
    if (i < text.size() && text[i] == '.') {
      ++i;
      std::size_t start = i;
      std::int64_t frac = 0;
      std::size_t digits = 0;
      if (i < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i]))) {
        frac = parse_digits(text, i, full);
        digits = i - start;
      }
      if (digits > 12)
        throw std::invalid_argument("invalid rational '" + full +
                                    "': more than 12 fractional digits");
      std::int64_t scale = 1;
      for (std::size_t d = 0; d < digits; ++d) scale *= 10;
      value = Rational(whole) + Rational(frac, scale);
    } else if (i < text.size() && text[i] == '/') {
      ++i;
      std::int64_t den = parse_digits(text, i, full);
      if (den == 0)
        throw std::invalid_argument("invalid rational '" + full +
                                    "': zero denominator");
      value = Rational(whole, den);
    } else {
      value = Rational(whole);
    }
  }

  if (i != text.size())
    throw std::invalid_argument("invalid rational '" + full +
                                "': trailing characters");
  return neg ? -value : value;
}

}  // namespace nlosc
