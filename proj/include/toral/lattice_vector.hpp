#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toral {

/// Point of the character lattice Z^r. Arithmetic is overflow-checked.
class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static LatticeVector unit(std::size_t rank, std::size_t index);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t &operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept;

  LatticeVector &operator+=(const LatticeVector &o);
  LatticeVector &operator-=(const LatticeVector &o);
  LatticeVector operator-() const;
  friend LatticeVector operator+(LatticeVector a, const LatticeVector &b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, const LatticeVector &v);

  // Lexicographic, most significant coordinate first.
  friend auto operator<=>(const LatticeVector &, const LatticeVector &) = default;
  friend bool operator==(const LatticeVector &, const LatticeVector &) = default;

  std::string to_string() const; // "(1,-2,0)"

private:
  std::vector<std::int64_t> coords_;
};

// Checked int64 helpers shared by the lattice code.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace toral
