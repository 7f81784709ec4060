#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ncl {

/// Exact rational on 64-bit integers, always normalized (den > 0, gcd = 1).
/// Beat annotations parse to rationals so that "notes at the same position"
/// is an exact comparison, never an epsilon test.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_int(std::int64_t v) { return Rational(v, 1); }

  /// Parses a decimal fraction ("0.25", "3", "-1.5"). The implied
  /// power-of-ten denominator must stay within 2^32 (at most 9 fraction
  /// digits). Throws Errc::malformed_row on anything else.
  static Rational parse_decimal(std::string_view text);

  /// Accepts either a decimal fraction or a "num/den" literal.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Freshman-sum rational strictly between lo and hi (requires lo < hi).
/// Denominators only ever add, so repeated use cannot overflow the way
/// exact midpoints would.
Rational mediant(const Rational& lo, const Rational& hi);

}  // namespace ncl
