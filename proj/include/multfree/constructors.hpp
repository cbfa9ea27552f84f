#pragma once

#include "multfree/perm_group.hpp"

namespace multfree {

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);

/// Direct product on disjoint point ranges, left factor on the low points.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

enum class TopGroup { Sym, Alt };

/// base wr Top(k) with block-major labelling: block b occupies points
/// (b-1)*l+1 .. b*l (1-based).
PermGroup wreath_product(const PermGroup& base, int k, TopGroup top);

/// The index-2 subgroup of S_l wr S_k other than the alternating
/// intersection and S_l wr A_k: the kernel of (ambient sign)x(block sign).
/// Realizes ((S_l x S_l) cap A_2l) x| S_2, ((S_2)^k cap A_2k) x| S_k and
/// ((S_l)^3 cap A_3l) x| S_3.
PermGroup alt_semidirect(int l, int k);

/// ((S_2)^k cap A_2k) x| A_k: even component part, even block part.
PermGroup alt_semidirect_alt(int k);

/// SD_l = D_l x| S_3 with D_l = {(a,b,c) : sgn a = sgn b = sgn c}.
PermGroup sd_group(int l);

/// RD_l = {(a,b,c:pi) : sgn pi = sgn a = sgn b = sgn c}.
PermGroup rd_group(int l);

/// S_1 x G with the fixed point labelled n+1.
PermGroup point_extension(const PermGroup& g);

}  // namespace multfree
