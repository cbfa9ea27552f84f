#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "multfree/multiplicity_vector.hpp"
#include "multfree/partition.hpp"

namespace multfree {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// A conjugacy class of S_n, written as its cycle type (fixed points as 1s).
using CycleType = Partition;

BigInt factorial(int n);

/// Centraliser order z_mu = prod_j j^{m_j} m_j!.
BigInt centraliser_order(const CycleType& mu);

/// |C| = n!/z_mu.
BigInt class_size(const CycleType& mu);

/// (-1)^{n - #parts}; +1 means the class lies in A_n.
int sign_of_class(const CycleType& mu);

/// dim of the irreducible indexed by lambda (hook-length formula; exact).
long long dimension(const Partition& lambda);

/// Full integral character table of S_n. Rows are irreducibles, columns are
/// cycle types, both in the reverse-lexicographic partitions_of(n) order.
/// Built once per degree and cached; concurrent readers are fine after that.
class CharacterTable {
 public:
  static const CharacterTable& for_degree(int n);

  int n() const { return n_; }
  const std::vector<Partition>& classes() const { return classes_; }
  size_t class_count() const { return classes_.size(); }
  int class_index(const CycleType& mu) const;

  long long value(size_t irrep, size_t cls) const {
    return values_[irrep * classes_.size() + cls];
  }
  long long value(const Partition& lambda, const CycleType& mu) const;

 private:
  explicit CharacterTable(int n);
  int n_;
  std::vector<Partition> classes_;
  std::vector<long long> values_;
};

/// chi^lambda(mu) via the cached table.
long long character_value(const Partition& lambda, const CycleType& mu);

/// Direct signed rim-hook recursion without any caching; test oracle for
/// the table builder.
long long character_value_reference(const Partition& lambda,
                                    const CycleType& mu);

/// An exact class function on S_n, stored on every cycle type of n in the
/// canonical class order.
class ClassFunction {
 public:
  explicit ClassFunction(int n);
  static ClassFunction irreducible(const Partition& lambda);
  /// Values = number of fixed points (the natural permutation character).
  static ClassFunction natural_permutation(int n);
  /// Values = n! on the identity, 0 elsewhere.
  static ClassFunction regular(int n);
  static ClassFunction from_multiplicities(const MultiplicityVector& mv);

  int n() const { return n_; }
  const BigInt& value(size_t cls) const { return values_[cls]; }
  BigInt& value(size_t cls) { return values_[cls]; }
  size_t size() const { return values_.size(); }

 private:
  int n_;
  std::vector<BigInt> values_;
};

/// <f, g> = (1/n!) sum_mu |C_mu| f(mu) g(mu), exact.
BigRat inner_product(const ClassFunction& f, const ClassFunction& g);

/// entries[lambda] = <f, chi^lambda>. Throws if any multiplicity is not an
/// integer ("not a virtual character").
MultiplicityVector decompose(const ClassFunction& f);

}  // namespace multfree
