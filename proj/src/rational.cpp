#include "rational.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "error.hpp"

namespace ncl {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) {
    fail(Errc::internal_error, std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(Errc::internal_error, "rational with zero denominator");
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n, "construction");
  den_ = narrow(d, "construction");
}

Rational Rational::parse_decimal(std::string_view text) {
  if (text.empty()) fail(Errc::malformed_row, "empty numeric field");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::int64_t int_part = 0;
  std::size_t int_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    int_part = int_part * 10 + (text[pos] - '0');
    ++pos;
    if (++int_digits > 15) fail(Errc::malformed_row, "numeric field too large: " + std::string(text));
  }
  std::int64_t frac_part = 0;
  std::int64_t frac_den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t frac_digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      frac_part = frac_part * 10 + (text[pos] - '0');
      frac_den *= 10;
      ++pos;
      if (++frac_digits > 9) {
        fail(Errc::malformed_row,
             "decimal fraction exceeds supported precision (denominator > 2^32): " + std::string(text));
      }
    }
    if (frac_den == 1) fail(Errc::malformed_row, "trailing decimal point: " + std::string(text));
  }
  if (pos != text.size() || int_digits == 0) {
    fail(Errc::malformed_row, "not a decimal number: " + std::string(text));
  }
  Wide num = static_cast<Wide>(int_part) * frac_den + frac_part;
  if (negative) num = -num;
  return Rational(narrow(num, "parse"), frac_den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      fail(Errc::malformed_row, "not a rational number: " + std::string(text));
    }
    return value;
  };
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(Errc::malformed_row, "rational with zero denominator: " + std::string(text));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  Wide n = static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_;
  Wide d = static_cast<Wide>(den_) * o.den_;
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n, "addition"), narrow(d, "addition"));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num_, o.den_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<Wide>(num_) * o.den_ < static_cast<Wide>(o.num_) * den_;
}

Rational mediant(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) fail(Errc::internal_error, "mediant requires lo < hi");
  return Rational(lo.num() + hi.num(), lo.den() + hi.den());
}

}  // namespace ncl
