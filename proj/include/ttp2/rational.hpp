#ifndef TTP2_RATIONAL_HPP
#define TTP2_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

namespace ttp2 {

// Exact rational on 64-bit components. Magnitudes here stay tiny (totals are
// at most a few million), so no overflow care beyond 128-bit cross products.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den <= (__int128)b.num * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }

  double to_double() const { return (double)num / (double)den; }

  // Fixed-point decimal rendering, e.g. 4 places for ratios, 2 for gaps.
  std::string to_decimal(int places) const {
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 scaled = (__int128)num * scale * 2;
    __int128 q = scaled / den;
    // round half away from zero
    if (q >= 0)
      q = (q + 1) / 2;
    else
      q = (q - 1) / 2;
    bool neg = q < 0;
    if (neg) q = -q;
    std::int64_t whole = (std::int64_t)(q / scale);
    std::int64_t frac = (std::int64_t)(q % scale);
    std::ostringstream os;
    if (neg) os << '-';
    os << whole << '.';
    std::string f = std::to_string(frac);
    os << std::string(places - (int)f.size(), '0') << f;
    return os.str();
  }
};

}  // namespace ttp2

#endif  // TTP2_RATIONAL_HPP
