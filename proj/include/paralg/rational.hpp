#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "paralg/errors.hpp"

namespace paralg {

// Exact rational with 64-bit numerator and denominator, stored normalized
// (denominator > 0, gcd(num, den) = 1). Products and sums pass through
// 128-bit intermediates; results that do not fit back into 64 bits throw.
class Rational {
 public:
  Rational() = default;
  Rational(long long num) : num_(num), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) { normalize(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw structural_error("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p", "-p" or "p/q" with optional leading sign.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(parse_ll(text), 1);
      return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw structural_error("malformed rational: '" + text + "'");
    } catch (const std::out_of_range&) {
      throw structural_error("rational out of range: '" + text + "'");
    }
  }

 private:
  using i128 = __int128;

  static long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  }

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(i128 n, i128 d) {
    Rational r;
    r.normalize128(n, d);
    return r;
  }

  void normalize(long long n, long long d) { normalize128(i128(n), i128(d)); }

  void normalize128(i128 n, i128 d) {
    if (d == 0) throw structural_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    i128 g = gcd128(n, d);
    n /= g;
    d /= g;
    constexpr i128 kMax = INT64_MAX;
    constexpr i128 kMin = INT64_MIN;
    if (n > kMax || n < kMin || d > kMax) throw std::overflow_error("rational overflow");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
  }

  long long num_ = 0;
  long long den_ = 1;
};

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}  // NOLINT: implicit by design
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace paralg
