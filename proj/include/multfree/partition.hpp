#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multfree {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "[4,2,1]" or the exponent shorthand "[2^3,1^2]"; "[]" is empty.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// 0-based row; rows past the end have size 0.
  int part(int i) const {
    return i >= 0 && i < rows() ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// [2*p1, ..., 2*pa]
  Partition doubled() const;
  bool is_self_conjugate() const { return *this == conjugate(); }

  /// Plain bracket form, e.g. "[4,2,1]"; never uses exponent shorthand.
  std::string str() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Canonical order used everywhere: reverse-lexicographic, [n] first.
bool revlex_precedes(const Partition& a, const Partition& b);

struct PartitionRevLexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return revlex_precedes(a, b);
  }
};

/// All partitions of n in reverse-lexicographic order, starting at [n].
std::vector<Partition> partitions_of(int n);

/// Streaming variant for large n; callback gets each partition once, in the
/// same reverse-lexicographic order. Return false from the callback to stop.
void for_each_partition(int n, const std::function<bool(const Partition&)>& fn);

/// Number of partitions of n (independent recurrence, used as an oracle).
long long partition_count(int n);

/// Diagonal hook at cell (i,i): width counts the arm including the corner,
/// depth the leg including the corner.
struct DiagonalHook {
  int index;  // 1-based diagonal position
  int width;
  int depth;
};

std::vector<DiagonalHook> diagonal_hooks(const Partition& p);

/// True iff every diagonal hook has width == depth + offset (offset +1/-1).
bool all_hooks_satisfy(const Partition& p, int offset);

/// Builds the partition with diagonal arm lengths a_i = width_i - 1 and leg
/// lengths b_i = depth_i - 1 (Frobenius coordinates); both strictly
/// decreasing, same length.
Partition partition_from_hooks(const std::vector<int>& widths,
                               const std::vector<int>& depths);

/// The partitions of 2d+1 obtained from a partition of d by doubling all
/// parts and then adding one box wherever the result stays a partition
/// (including as a new trailing part 1).
std::vector<Partition> odd_promotions(const Partition& p);

/// Interprets a formula term: drops trailing zeros, rejects anything that
/// is not weakly decreasing positive. Used to instantiate displayed sums
/// whose edge terms vanish.
std::optional<Partition> partition_from_terms(const std::vector<int>& terms);

}  // namespace multfree
