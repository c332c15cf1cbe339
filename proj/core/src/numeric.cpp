#include "eth2game/numeric.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace eth2game {

Rational rational_from_double(double value) {
  if (!std::isfinite(value))
    throw std::domain_error("cannot represent non-finite value exactly");
  return Rational(value);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) +
                              "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt pow10(std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

// Always base 10. The cpp_int string constructor would read a leading zero
// as an octal prefix.
BigInt decimal_bigint(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt{std::string(digits.substr(first))};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    BigInt d = decimal_bigint(den);
    if (d == 0) bad_number(text);
    Rational r(decimal_bigint(num), d);
    return negative ? -r : r;
  }

  std::string_view mantissa = s;
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp = s.substr(e + 1);
    bool exp_neg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_neg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_number(text);
    for (char c : exp) exponent = exponent * 10 + (c - '0');
    if (exp_neg) exponent = -exponent;
  }

  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);

  std::string digits;
  digits.reserve(int_part.size() + frac_part.size());
  digits.append(int_part);
  digits.append(frac_part);
  if (digits.empty()) bad_number(text);

  Rational r(decimal_bigint(digits), pow10(frac_part.size()));
  if (exponent > 0)
    r *= Rational(pow10(static_cast<std::size_t>(exponent)));
  else if (exponent < 0)
    r /= Rational(pow10(static_cast<std::size_t>(-exponent)));
  return negative ? -r : r;
}

BigInt floor_int(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (numerator(value) < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

std::string fraction_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_fixed(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt num = numerator(value);
  const BigInt& den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  const BigInt scale = pow10(static_cast<std::size_t>(digits));
  const BigInt scaled = num * scale;
  BigInt q = scaled / den;
  if (2 * (scaled % den) >= den) ++q;  // round half away from zero

  std::string body = q.str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." +
          body.substr(body.size() - digits);
  }
  if (negative && q != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace eth2game
