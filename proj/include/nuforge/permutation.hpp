#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuforge/errors.hpp"

namespace nuforge {

// A permutation of {0..degree-1} stored as its image array. Composition is
// left-to-right: (a * b) applies a first, then b.
class Permutation {
 public:
  using u32 = std::uint32_t;

  Permutation() = default;
  explicit Permutation(u32 degree);               // identity
  explicit Permutation(std::vector<u32> images);  // validates bijectivity

  static Permutation from_images_unchecked(std::vector<u32> images);

  u32 degree() const { return static_cast<u32>(img_.size()); }
  u32 operator[](u32 point) const { return img_[point]; }
  const std::vector<u32>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // b^-1 * (*this) * b
  Permutation conjugated_by(const Permutation& b) const;
  // a^-1 * b^-1 * a * b
  static Permutation commutator(const Permutation& a, const Permutation& b);

  std::uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Permutation& rhs) const { return img_ != rhs.img_; }
  bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

 private:
  std::vector<u32> img_;
};

// Disjoint-cycle text form, e.g. "(0 1 2)(3 4)"; "()" is the identity.
// Points are 0-based. Degree is max point + 1, raised to min_degree.
Permutation parse_cycles(const std::string& text, std::uint32_t min_degree = 0);
std::string format_cycles(const Permutation& p);

}  // namespace nuforge
