#pragma once

#include <optional>
#include <string>

#include "multfree/group_spec.hpp"
#include "multfree/induction.hpp"
#include "multfree/multiplicity_vector.hpp"

namespace multfree::closed {

// ---- Young products (two-orbit groups on k + (n-k) points, 2k <= n) ----
MultiplicityVector young_ss(int k, int n);
/// Valid as a group decomposition for k >= 2.
MultiplicityVector young_as(int k, int n);
/// Valid for n-k >= 2.
MultiplicityVector young_sa(int k, int n);
/// Valid for k >= 2 and n-k >= 2.
MultiplicityVector young_aa(int k, int n);
/// (S_k x S_{n-k}) meet A_n; valid when the product is not inside A_n.
MultiplicityVector young_cap_alt(int k, int n);

// ---- S_l wr S_2 and the inductions of its linear characters ----
enum class WreathL2Char { Sigma, Psi, SigmaPsi, Phi };
MultiplicityVector wreath_l2(int l);
MultiplicityVector wreath_l2_linear(int l, WreathL2Char c);
MultiplicityVector wreath_l2_cap_alt(int l);  // 1 + sigma
MultiplicityVector wreath_l2_sdp2(int l);     // 1 + sigma*psi
MultiplicityVector alt_wreath_l2(int l);      // 1 + sigma*psi + phi, l >= 3

// ---- S_2 wr S_k and its index-<=4 subgroups ----
MultiplicityVector wreath_2k(int k);
/// All partitions of 2k whose diagonal hooks have depth one less than
/// width; built from the distinct-part partitions of k.
MultiplicityVector psi_k_induced(int k);
MultiplicityVector sigma_psi_k_induced(int k);
MultiplicityVector s2_wr_ak(int k);          // 1 + psi_k
MultiplicityVector wreath_2k_cap_alt(int k); // 1 + sigma
MultiplicityVector sdpk_form(int k);         // 1 + sigma*psi_k
MultiplicityVector sdpka_form(int k);        // all four linear characters

// ---- products with the three exceptional homogeneous groups ----
enum class SpecialBase { AGL15, PGL25, PGammaL28 };
enum class ProductFactor { Sk, Ak, CapAlt };
const MultiplicityVector& special_base(SpecialBase b);
MultiplicityVector special_product(SpecialBase b, ProductFactor f, int k);

// ---- one-point extensions ----
MultiplicityVector point_wr2d(int d);  // S_1 x (S_2 wr S_d), odd promotions
MultiplicityVector point_wrc2(int c);  // S_1 x (S_c wr S_2)
MultiplicityVector point_wreath_l2_cap_alt(int l);
MultiplicityVector point_sdp2(int l);

// ---- multiplicity-freeness membership predicates ----
// Collision-governed families are computed from the characterizations, not
// hard-coded; the published sets are regression expectations in the tests.
bool mf_s2_wr_ak(int k);
bool mf_sdpk(int k);
bool mf_wreath_2k_cap_alt(int k);
bool mf_sdpka(int k);
/// Family ids: young_ss, young_as, young_sa, young_aa, young_cap_alt
/// (param pair k,n); wreath_l2, wreath_l2_cap_alt, sdp2, alt_wreath_l2,
/// wreath_2k, wr2k_cap_alt, S2wrAk, sdpk, sdpka (param k); agl15_x_sk,
/// agl15_x_ak, agl15_cap_alt, pgl25_x_sk, pgl25_x_ak, pgl25_cap_alt,
/// pgammal28_x_sk, pgammal28_x_ak (param k).
bool mf_membership(const std::string& family, int k, int n = -1);

}  // namespace multfree::closed

namespace multfree {

/// Closed-form decomposition for a parsed group spec, when one is known:
/// formula families, stored census-derived data, and the compositional
/// rules for prod/point/alt wrappers.
std::optional<Decomposition> closed_form_for(const GroupSpec& spec);

/// Frozen decompositions shipped with the repo (keyed by spec text).
const MultiplicityVector* stored_decomposition(const std::string& spec_text);

}  // namespace multfree
