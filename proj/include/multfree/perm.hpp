#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "multfree/partition.hpp"

namespace multfree {

/// A permutation of {0..n-1} stored as an image array.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  explicit Perm(std::vector<uint8_t> images);
  /// Parses 1-based cycle notation "(1,2,3)(4,5)" on the given degree;
  /// "()" is the identity.
  static Perm parse_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[static_cast<size_t>(x)]; }
  int operator()(int x) const { return apply(x); }
  const std::vector<uint8_t>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  /// (a*b)(x) = a(b(x)): apply b, then a.
  friend Perm operator*(const Perm& a, const Perm& b);

  int sign() const;
  Partition cycle_type() const;
  /// Extends to a larger degree with new points fixed.
  Perm extended(int degree) const;
  /// Shifts all points up by `offset` inside a larger degree.
  Perm shifted(int offset, int degree) const;

  /// 1-based cycle notation; "()" for the identity.
  std::string str() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }

 private:
  std::vector<uint8_t> img_;
};

}  // namespace multfree
