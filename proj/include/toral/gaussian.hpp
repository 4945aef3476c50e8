#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace toral {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both components are kept canonical (lowest terms, positive denominator),
/// so equality is structural.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class &re() const noexcept { return re_; }
  const mpq_class &im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  // Throws std::domain_error on zero.
  GaussianRational inverse() const;
  // Integer power; negative exponents invert (the base must be nonzero).
  GaussianRational pow(std::int64_t exponent) const;

  GaussianRational &operator+=(const GaussianRational &o);
  GaussianRational &operator-=(const GaussianRational &o);
  GaussianRational &operator*=(const GaussianRational &o);
  GaussianRational &operator/=(const GaussianRational &o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Compact rendering: "3", "-1/2", "i", "-2i", "1/2+3i".
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

} // namespace toral
