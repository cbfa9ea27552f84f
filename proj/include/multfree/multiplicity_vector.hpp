#pragma once

#include <map>
#include <string>

#include "multfree/partition.hpp"

namespace multfree {

/// A decomposed character: map from partitions of n to multiplicities.
/// Zero entries are never stored. Iteration order is reverse-lexicographic.
class MultiplicityVector {
 public:
  using Map = std::map<Partition, long long, PartitionRevLexLess>;

  MultiplicityVector() = default;
  explicit MultiplicityVector(int n) : n_(n) {}

  int n() const { return n_; }
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t constituents() const { return entries_.size(); }

  long long at(const Partition& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
  }

  void add(const Partition& p, long long c);
  void set(const Partition& p, long long c);

  MultiplicityVector& operator+=(const MultiplicityVector& o);
  friend MultiplicityVector operator+(MultiplicityVector a,
                                      const MultiplicityVector& b) {
    a += b;
    return a;
  }
  MultiplicityVector scaled(long long c) const;

  /// entries'[p] = entries[p] + entries[p'] for every p.
  MultiplicityVector conjugate_symmetrized() const;
  /// entries'[p'] = entries[p].
  MultiplicityVector conjugated() const;

  bool multiplicity_free() const;
  /// Sum of squared multiplicities (orbital count of the subgroup).
  long long rank() const;

  bool operator==(const MultiplicityVector& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }

  /// One constituent per line, "λ: m", reverse-lexicographic.
  std::string str() const;
  /// Compact "λ:m;λ:m" form used by data files.
  std::string compact() const;
  static MultiplicityVector parse_compact(int n, std::string_view text);

 private:
  int n_ = 0;
  Map entries_;
};

}  // namespace multfree
