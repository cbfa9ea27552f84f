#pragma once

#include <map>

#include "multfree/multiplicity_vector.hpp"
#include "multfree/partition.hpp"

namespace multfree {

/// Multiset of results of all strict nu-expansions of mu: each partitionable
/// shape counted once per distinct expansion (= Littlewood-Richardson
/// tableau of shape lambda/mu and content nu).
std::map<Partition, long long, PartitionRevLexLess> strict_expansions(
    const Partition& mu, const Partition& nu);

/// Number of nu-expansions of mu with the strictness (lattice word)
/// condition dropped; only the horizontal-strip stages remain.
long long count_all_expansions(const Partition& mu, const Partition& nu);

/// N^lambda_{mu,nu}; zero unless |mu|+|nu| = |lambda|.
long long lr_coefficient(const Partition& mu, const Partition& nu,
                         const Partition& lambda);

/// Bilinear extension of the Littlewood-Richardson product; realizes
/// induction from S_{d1} x S_{d2} to S_{d1+d2}.
MultiplicityVector outer_product(const MultiplicityVector& a,
                                 const MultiplicityVector& b);

}  // namespace multfree
