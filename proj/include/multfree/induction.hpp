#pragma once

#include <optional>
#include <string>

#include "multfree/group_spec.hpp"
#include "multfree/multiplicity_vector.hpp"
#include "multfree/perm_group.hpp"

namespace multfree {

enum class Provenance { brute_force, closed_form, transform, stored };

std::string provenance_name(Provenance p);

/// A decomposed induced trivial character.
struct Decomposition {
  MultiplicityVector mv;
  Provenance prov = Provenance::brute_force;

  bool multiplicity_free() const { return mv.multiplicity_free(); }
  long long rank() const { return mv.rank(); }
};

/// Decomposition of the trivial character induced from G to S_n:
/// entries[lambda] = (1/|G|) sum over classes census * chi^lambda.
/// Checks exactness of every division, entries[[n]] = 1, and the degree
/// identity; any failure is an internal error and aborts.
Decomposition induced_trivial(const PermGroup& g,
                              long long census_cap = kDefaultCensusCap,
                              Exec mode = Exec::parallel);

/// Same, from a precomputed census.
Decomposition induced_trivial(const CycleTypeCensus& census,
                              Exec mode = Exec::parallel);

/// Multiplicity-freeness verdict only, with per-irreducible early abort as
/// soon as some multiplicity reaches 2.
bool induced_trivial_is_mf(const CycleTypeCensus& census);

/// Prop on intersecting with the alternating group:
/// entries'[lambda] = entries[lambda] + entries[lambda'].
/// Only valid when the decomposed subgroup is not inside A_n.
Decomposition alt_transform(const Decomposition& d);

/// Index [S_n : G] recovered from a decomposition (degree identity).
BigInt decomposition_index(const MultiplicityVector& mv);

struct CrossCheckReport {
  GroupSpec spec;
  Decomposition closed;
  Decomposition brute;
  bool identical = false;
  std::vector<Partition> mismatched;

  /// One line per lambda, "lambda<TAB>closed<TAB>brute", then a final
  /// "IDENTICAL" or "MISMATCH" line.
  std::string text() const;
};

/// Computes both the registered closed form and the brute-force
/// decomposition for the spec and compares them exactly.
CrossCheckReport cross_check(const GroupSpec& spec,
                             long long census_cap = kDefaultCensusCap,
                             Exec mode = Exec::parallel);

/// Every registered closed form at its three smallest census-feasible
/// parameter values (plus the stored families): the closed-vs-brute
/// verification set.
std::vector<std::string> cross_check_specs();

}  // namespace multfree
