#include "multfree/induction.hpp"

#include <omp.h>

#include "multfree/catalog.hpp"
#include "multfree/characters.hpp"
#include "multfree/closed_forms.hpp"

namespace multfree {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::brute_force: return "brute_force";
    case Provenance::closed_form: return "closed_form";
    case Provenance::transform: return "transform";
    case Provenance::stored: return "stored";
  }
  return "?";
}

namespace {

long long multiplicity_of(const CycleTypeCensus& census,
                          const CharacterTable& table, size_t irrep,
                          long long order) {
  __int128 sum = 0;
  for (size_t c = 0; c < census.counts.size(); ++c) {
    if (census.counts[c] == 0) continue;
    sum += static_cast<__int128>(census.counts[c]) *
           table.value(irrep, c);
  }
  if (sum % order != 0)
    throw std::logic_error("non-integral multiplicity in induced character");
  long long m = static_cast<long long>(sum / order);
  if (m < 0)
    throw std::logic_error("negative multiplicity in induced character");
  return m;
}

}  // namespace

Decomposition induced_trivial(const CycleTypeCensus& census, Exec mode) {
  const CharacterTable& table = CharacterTable::for_degree(census.degree);
  long long order = census.total();
  size_t m = table.class_count();
  std::vector<long long> mult(m, 0);
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < m; ++i)
      mult[i] = multiplicity_of(census, table, i, order);
  } else {
    for (size_t i = 0; i < m; ++i)
      mult[i] = multiplicity_of(census, table, i, order);
  }

  Decomposition d;
  d.mv = MultiplicityVector(census.degree);
  d.prov = Provenance::brute_force;
  for (size_t i = 0; i < m; ++i)
    if (mult[i] != 0) d.mv.set(table.classes()[i], mult[i]);

  // trivial constituent and degree identity are hard invariants
  std::vector<int> full;
  if (census.degree > 0) full.push_back(census.degree);
  if (d.mv.at(Partition(full)) != 1)
    throw std::logic_error("induced trivial character misses 1_{S_n}");
  if (decomposition_index(d.mv) * order != factorial(census.degree))
    throw std::logic_error("degree identity failed for induced character");
  return d;
}

Decomposition induced_trivial(const PermGroup& g, long long census_cap,
                              Exec mode) {
  return induced_trivial(g.census(census_cap, mode), mode);
}

bool induced_trivial_is_mf(const CycleTypeCensus& census) {
  const CharacterTable& table = CharacterTable::for_degree(census.degree);
  long long order = census.total();
  for (size_t i = 0; i < table.class_count(); ++i)
    if (multiplicity_of(census, table, i, order) > 1) return false;
  return true;
}

Decomposition alt_transform(const Decomposition& d) {
  Decomposition out;
  out.mv = d.mv.conjugate_symmetrized();
  out.prov = Provenance::transform;
  return out;
}

BigInt decomposition_index(const MultiplicityVector& mv) {
  BigInt idx = 0;
  for (const auto& [lam, c] : mv.entries()) idx += BigInt(c) * dimension(lam);
  return idx;
}

std::string CrossCheckReport::text() const {
  std::string s;
  // union of constituents in canonical order
  MultiplicityVector all = closed.mv;
  all += brute.mv;
  for (const auto& [lam, c] : all.entries()) {
    (void)c;
    s += lam.str();
    s += '\t';
    s += std::to_string(closed.mv.at(lam));
    s += '\t';
    s += std::to_string(brute.mv.at(lam));
    s += '\n';
  }
  s += identical ? "IDENTICAL\n" : "MISMATCH\n";
  if (!identical)
    for (const auto& lam : mismatched) s += "  differs at " + lam.str() + "\n";
  return s;
}

std::vector<std::string> cross_check_specs() {
  return {
      // S_l wr S_2 and its index-2 subgroups
      "wr(S2,S2)", "wr(S3,S2)", "wr(S4,S2)", "wr(S5,S2)", "wr(S6,S2)",
      "alt(wr(S3,S2))", "alt(wr(S4,S2))", "alt(wr(S5,S2))",
      "sdp2(3)", "sdp2(4)", "sdp2(5)",
      "wr(A3,S2)", "wr(A4,S2)", "wr(A5,S2)",
      // S_2 wr S_k and its index-<=4 subgroups
      "wr(S2,S3)", "wr(S2,S4)", "wr(S2,S5)", "wr(S2,S6)", "wr(S2,S7)",
      "wr(S2,S8)",
      "alt(wr(S2,S3))", "alt(wr(S2,S5))", "alt(wr(S2,S7))",
      "wr(S2,A3)", "wr(S2,A4)", "wr(S2,A5)", "wr(S2,A6)",
      "sdpk(2)", "sdpk(4)", "sdpk(5)",
      "sdpka(3)", "sdpka(4)", "sdpka(5)",
      // Young products and their alternating intersections
      "prod(S2,S3)", "prod(S3,S4)", "prod(S4,S4)",
      "prod(A3,S3)", "prod(A3,S4)", "prod(A4,S4)",
      "prod(S2,A4)", "prod(S3,A4)", "prod(S2,A5)",
      "prod(A3,A5)", "prod(A3,A6)", "prod(A4,A6)",
      "alt(prod(S2,S3))", "alt(prod(S3,S4))", "alt(prod(S2,S4))",
      // products with the exceptional homogeneous groups
      "prod(S1,named:AGL(1,5))", "prod(S2,named:AGL(1,5))",
      "prod(S3,named:AGL(1,5))",
      "prod(A4,named:AGL(1,5))", "prod(A5,named:AGL(1,5))",
      "prod(A6,named:AGL(1,5))",
      "alt(prod(S5,named:AGL(1,5)))", "alt(prod(S6,named:AGL(1,5)))",
      "alt(prod(S7,named:AGL(1,5)))",
      "prod(S1,named:PGL(2,5))", "prod(S2,named:PGL(2,5))",
      "prod(S3,named:PGL(2,5))",
      "prod(A3,named:PGL(2,5))", "prod(A4,named:PGL(2,5))",
      "prod(A5,named:PGL(2,5))",
      "alt(prod(S2,named:PGL(2,5)))", "alt(prod(S3,named:PGL(2,5)))",
      "alt(prod(S4,named:PGL(2,5)))",
      "prod(S1,named:PGammaL(2,8))", "prod(S2,named:PGammaL(2,8))",
      "prod(S3,named:PGammaL(2,8))", "prod(S4,named:PGammaL(2,8))",
      "prod(S5,named:PGammaL(2,8))",
      "prod(A2,named:PGammaL(2,8))", "prod(A5,named:PGammaL(2,8))",
      "prod(A7,named:PGammaL(2,8))",
      // one-point extensions
      "point(wr(S2,S2))", "point(wr(S2,S3))", "point(wr(S2,S4))",
      "point(wr(S3,S2))", "point(wr(S4,S2))",
      "point(alt(wr(S3,S2)))", "point(alt(wr(S4,S2)))",
      "point(alt(wr(S5,S2)))",
      "point(sdp2(3))", "point(sdp2(4))", "point(sdp2(5))",
      // families stored from a one-time census run
      "sdp3(3)", "sdp3(4)", "sdp3(5)", "SD(4)", "SD(5)", "RD(4)",
      "wr(A5,S3)",
  };
}

CrossCheckReport cross_check(const GroupSpec& spec, long long census_cap,
                             Exec mode) {
  const Catalog& catalog = Catalog::instance();
  auto closed = closed_form_for(spec);
  if (!closed)
    throw std::invalid_argument("no closed form registered for " + spec.str());
  PermGroup g = spec.build(catalog);
  CrossCheckReport rep{spec, *closed, induced_trivial(g, census_cap, mode),
                       false, {}};
  rep.identical = rep.closed.mv == rep.brute.mv;
  if (!rep.identical) {
    MultiplicityVector all = rep.closed.mv;
    all += rep.brute.mv;
    for (const auto& [lam, c] : all.entries()) {
      (void)c;
      if (rep.closed.mv.at(lam) != rep.brute.mv.at(lam))
        rep.mismatched.push_back(lam);
    }
  }
  return rep;
}

}  // namespace multfree
