#include "toral/lattice_vector.hpp"

#include <algorithm>

#include "toral/error.hpp"

namespace toral {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DimensionError("lattice coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DimensionError("lattice coordinate overflow");
  return r;
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t index) {
  LatticeVector v(rank);
  v[index] = 1;
  return v;
}

bool LatticeVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

LatticeVector &LatticeVector::operator+=(const LatticeVector &o) {
  if (o.size() != size()) throw DimensionError("lattice vectors of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  return *this;
}

LatticeVector &LatticeVector::operator-=(const LatticeVector &o) {
  if (o.size() != size()) throw DimensionError("lattice vectors of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] = checked_add(coords_[i], checked_mul(-1, o.coords_[i]));
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked_mul(-1, coords_[i]);
  return r;
}

LatticeVector operator*(std::int64_t k, const LatticeVector &v) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(k, v[i]);
  return r;
}

std::string LatticeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

} // namespace toral
