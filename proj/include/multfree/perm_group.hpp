#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "multfree/partition.hpp"
#include "multfree/perm.hpp"

namespace multfree {

using BigInt = boost::multiprecision::cpp_int;

enum class Exec { serial, parallel };

/// Thrown when an enumeration-based request exceeds the configured cap.
class CensusInfeasible : public std::runtime_error {
 public:
  explicit CensusInfeasible(const std::string& what)
      : std::runtime_error(what) {}
};

inline constexpr long long kDefaultCensusCap = 20'000'000;

/// Exact per-cycle-type element counts of a subgroup of S_n, indexed in the
/// partitions_of(degree) class order.
struct CycleTypeCensus {
  int degree = 0;
  std::vector<long long> counts;

  long long total() const;
  long long at(const Partition& type) const;
  /// Counts restricted to even classes (what survives in G meet A_n).
  CycleTypeCensus even_part() const;
};

/// A permutation group given by generators, with a base and strong
/// generating set computed deterministically at construction.
class PermGroup {
 public:
  static PermGroup generate(std::vector<Perm> gens, int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }

  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& super) const;

  /// All generators even <=> the group lies inside A_n.
  bool in_alternating() const;

  std::vector<std::vector<int>> point_orbits() const;
  bool is_transitive() const;
  /// Transitive and no nontrivial block system.
  bool is_primitive() const;

  /// Exact cycle-type census by streaming transversal products; never
  /// stores the element set. Throws CensusInfeasible above the cap.
  CycleTypeCensus census(long long cap = kDefaultCensusCap,
                         Exec mode = Exec::parallel) const;

  /// G meet A_n (equals G when G is already even).
  PermGroup intersect_alternating() const;

  /// Number of orbits on unordered k-subsets, from the census via the
  /// fixed-k-set count of each class.
  long long orbit_count_on_ksets(const CycleTypeCensus& census, int k) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;          // strong generators active at this level
    std::vector<int> orbit;          // points in discovery order
    std::vector<int> orbit_pos;      // -1 if not in orbit
    std::vector<Perm> transversal;   // by point; maps base_point -> point
  };

  void rebuild_level(size_t i);
  std::pair<Perm, size_t> sift(Perm g, size_t from) const;
  void schreier_sims();

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace multfree
