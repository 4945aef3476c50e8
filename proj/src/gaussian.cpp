#include "toral/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace toral {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(std::int64_t exponent) const {
  GaussianRational base = exponent < 0 ? inverse() : *this;
  // Negating INT64_MIN is undefined; no lattice code produces it.
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  GaussianRational result(1);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z) { return os << z.to_string(); }

} // namespace toral
