#pragma once

#include <cmath>
#include <complex>

#include "paralg/rational.hpp"

namespace paralg {

// Coefficient of a graded-algebra structure constant: an exact Gaussian
// rational by default, or a double-precision complex tagged as inexact.
// Any arithmetic touching an inexact value yields an inexact result.
class Scalar {
 public:
  Scalar() = default;  // exact zero
  Scalar(const GaussianRational& q) : exact_(true), q_(q), d_(q.to_complex()) {}  // NOLINT
  Scalar(long long n) : Scalar(GaussianRational(Rational(n))) {}                  // NOLINT

  static Scalar rational(long long num, long long den = 1) {
    return Scalar(GaussianRational(Rational(num, den)));
  }
  static Scalar gaussian(Rational re, Rational im) { return Scalar(GaussianRational(re, im)); }
  static Scalar imaginary_unit() { return gaussian(Rational(0), Rational(1)); }
  static Scalar inexact(std::complex<double> v) {
    Scalar s;
    s.exact_ = false;
    s.d_ = v;
    return s;
  }

  bool exact() const { return exact_; }
  const GaussianRational& exact_value() const {
    if (!exact_) throw structural_error("exact_value() on inexact scalar");
    return q_;
  }
  std::complex<double> to_complex() const { return d_; }

  bool is_zero(double tol = 0.0) const {
    if (exact_) return q_.is_zero();
    return std::abs(d_) <= tol;
  }

  Scalar conj() const {
    if (exact_) return Scalar(q_.conj());
    return inexact(std::conj(d_));
  }
  Scalar operator-() const {
    if (exact_) return Scalar(-q_);
    return inexact(-d_);
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.q_ + b.q_);
    return inexact(a.d_ + b.d_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.q_ * b.q_);
    return inexact(a.d_ * b.d_);
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  // Exact scalars compare exactly; anything inexact compares within tol.
  bool equals(const Scalar& other, double tol = 0.0) const {
    if (exact_ && other.exact_) return q_ == other.q_;
    return std::abs(d_ - other.d_) <= tol;
  }

  std::string str() const {
    if (!exact_) {
      return "(" + std::to_string(d_.real()) + "," + std::to_string(d_.imag()) + ")";
    }
    if (q_.im.is_zero()) return q_.re.str();
    return q_.re.str() + (q_.im < Rational(0) ? "" : "+") + q_.im.str() + "i";
  }

 private:
  bool exact_ = true;
  GaussianRational q_;
  std::complex<double> d_{0.0, 0.0};
};

}  // namespace paralg
