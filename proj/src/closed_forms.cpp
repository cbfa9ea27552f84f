#include "multfree/closed_forms.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "multfree/catalog.hpp"
#include "multfree/lr.hpp"

namespace multfree::closed {

namespace {

MultiplicityVector single(const Partition& p) {
  MultiplicityVector mv(p.n());
  mv.set(p, 1);
  return mv;
}

Partition row(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition column(int n) {
  return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

// [a^ca, b^cb] shape helper; skips zero-count runs
Partition runs(std::initializer_list<std::pair<int, int>> spec) {
  std::vector<int> parts;
  for (auto [val, cnt] : spec)
    for (int i = 0; i < cnt; ++i) parts.push_back(val);
  return Partition(std::move(parts));
}

void add_terms(MultiplicityVector& mv, const std::vector<int>& terms) {
  if (auto p = partition_from_terms(terms)) mv.add(*p, 1);
}

// distinct-part partitions of k, each callback once
void distinct_partitions(int k, int maxpart, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& f) {
  if (k == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(k, maxpart); p >= 1; --p) {
    cur.push_back(p);
    distinct_partitions(k - p, p - 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

MultiplicityVector young_ss(int k, int n) {
  MultiplicityVector mv(n);
  for (int i = 0; i <= std::min(k, n - k); ++i) add_terms(mv, {n - i, i});
  return mv;
}

MultiplicityVector young_as(int k, int n) {
  MultiplicityVector mv = young_ss(k, n);
  mv.add(runs({{n - k, 1}, {1, k}}), 1);
  mv.add(runs({{n - k + 1, 1}, {1, k - 1}}), 1);
  return mv;
}

MultiplicityVector young_sa(int k, int n) {
  MultiplicityVector mv = young_ss(k, n);
  mv.add(runs({{k, 1}, {1, n - k}}), 1);
  mv.add(runs({{k + 1, 1}, {1, n - k - 1}}), 1);
  return mv;
}

MultiplicityVector young_aa(int k, int n) {
  MultiplicityVector mv = young_cap_alt(k, n);
  mv.add(runs({{n - k, 1}, {1, k}}), 1);
  mv.add(runs({{n - k + 1, 1}, {1, k - 1}}), 1);
  mv.add(runs({{k, 1}, {1, n - k}}), 1);
  mv.add(runs({{k + 1, 1}, {1, n - k - 1}}), 1);
  return mv;
}

MultiplicityVector young_cap_alt(int k, int n) {
  MultiplicityVector mv(n);
  for (int i = 0; i <= std::min(k, n - k); ++i) {
    add_terms(mv, {n - i, i});
    mv.add(runs({{2, i}, {1, n - 2 * i}}), 1);
  }
  return mv;
}

MultiplicityVector wreath_l2(int l) {
  MultiplicityVector mv(2 * l);
  for (int i = 0; i <= l / 2; ++i) add_terms(mv, {2 * l - 2 * i, 2 * i});
  return mv;
}

MultiplicityVector wreath_l2_linear(int l, WreathL2Char c) {
  MultiplicityVector mv(2 * l);
  switch (c) {
    case WreathL2Char::Sigma:
      for (int i = 0; i <= l / 2; ++i)
        mv.add(runs({{2, 2 * i}, {1, 2 * l - 4 * i}}), 1);
      break;
    case WreathL2Char::Psi:
      for (int i = 0; i <= l / 2; ++i)
        add_terms(mv, {2 * l - 2 * i - 1, 2 * i + 1});
      break;
    case WreathL2Char::SigmaPsi:
      for (int i = 0; i <= l / 2 && 4 * i + 2 <= 2 * l; ++i)
        mv.add(runs({{2, 2 * i + 1}, {1, 2 * l - 4 * i - 2}}), 1);
      break;
    case WreathL2Char::Phi:
      mv.add(runs({{l + 1, 1}, {1, l - 1}}), 1);
      mv.add(runs({{l, 1}, {1, l}}), 1);
      break;
  }
  return mv;
}

MultiplicityVector wreath_l2_cap_alt(int l) {
  return wreath_l2(l) + wreath_l2_linear(l, WreathL2Char::Sigma);
}

MultiplicityVector wreath_l2_sdp2(int l) {
  return wreath_l2(l) + wreath_l2_linear(l, WreathL2Char::SigmaPsi);
}

MultiplicityVector alt_wreath_l2(int l) {
  // the ambient sign is trivial on A_l wr S_2 exactly when the block swap
  // is even, i.e. for even l; for odd l the surviving linear character is
  // sigma*psi
  WreathL2Char lin = l % 2 == 0 ? WreathL2Char::Sigma : WreathL2Char::SigmaPsi;
  return wreath_l2(l) + wreath_l2_linear(l, lin) +
         wreath_l2_linear(l, WreathL2Char::Phi);
}

MultiplicityVector wreath_2k(int k) {
  MultiplicityVector mv(2 * k);
  for (const Partition& p : partitions_of(k)) mv.add(p.doubled(), 1);
  return mv;
}

MultiplicityVector psi_k_induced(int k) {
  MultiplicityVector mv(2 * k);
  std::vector<int> cur;
  distinct_partitions(k, k, cur, [&](const std::vector<int>& d) {
    std::vector<int> widths, depths;
    for (int x : d) {
      widths.push_back(x + 1);
      depths.push_back(x);
    }
    mv.add(partition_from_hooks(widths, depths), 1);
  });
  return mv;
}

MultiplicityVector sigma_psi_k_induced(int k) {
  return psi_k_induced(k).conjugated();
}

MultiplicityVector s2_wr_ak(int k) { return wreath_2k(k) + psi_k_induced(k); }

MultiplicityVector wreath_2k_cap_alt(int k) {
  return wreath_2k(k).conjugate_symmetrized();
}

MultiplicityVector sdpk_form(int k) {
  return wreath_2k(k) + sigma_psi_k_induced(k);
}

MultiplicityVector sdpka_form(int k) {
  return wreath_2k_cap_alt(k) + psi_k_induced(k) + sigma_psi_k_induced(k);
}

const MultiplicityVector& special_base(SpecialBase b) {
  static const MultiplicityVector agl15 = [] {
    MultiplicityVector mv(5);
    mv.set(row(5), 1);
    mv.set(runs({{2, 2}, {1, 1}}), 1);
    return mv;
  }();
  static const MultiplicityVector pgl25 = [] {
    MultiplicityVector mv(6);
    mv.set(row(6), 1);
    mv.set(runs({{2, 3}}), 1);
    return mv;
  }();
  static const MultiplicityVector pgammal28 = [] {
    MultiplicityVector mv(9);
    mv.set(row(9), 1);
    mv.set(runs({{5, 1}, {1, 4}}), 1);
    mv.set(runs({{4, 2}, {1, 1}}), 1);
    mv.set(runs({{3, 1}, {2, 3}}), 1);
    mv.set(column(9), 1);
    return mv;
  }();
  switch (b) {
    case SpecialBase::AGL15: return agl15;
    case SpecialBase::PGL25: return pgl25;
    case SpecialBase::PGammaL28: return pgammal28;
  }
  throw std::logic_error("unreachable");
}

MultiplicityVector special_product(SpecialBase b, ProductFactor f, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  MultiplicityVector factor(k);
  factor.set(row(k), 1);
  if (f == ProductFactor::Ak && k >= 2) factor.set(column(k), 1);
  MultiplicityVector prod = outer_product(special_base(b), factor);
  if (f == ProductFactor::CapAlt) return prod.conjugate_symmetrized();
  return prod;
}

MultiplicityVector point_wr2d(int d) {
  MultiplicityVector mv(2 * d + 1);
  for (const Partition& p : partitions_of(d))
    for (const Partition& q : odd_promotions(p)) mv.add(q, 1);
  return mv;
}

MultiplicityVector point_wrc2(int c) {
  MultiplicityVector mv(2 * c + 1);
  for (int i = 0; i <= c / 2; ++i) {
    add_terms(mv, {2 * c - 2 * i + 1, 2 * i});
    add_terms(mv, {2 * c - 2 * i, 2 * i + 1});
    add_terms(mv, {2 * c - 2 * i, 2 * i, 1});
  }
  return mv;
}

MultiplicityVector point_wreath_l2_cap_alt(int l) {
  return outer_product(wreath_l2_cap_alt(l), single(row(1)));
}

MultiplicityVector point_sdp2(int l) {
  return outer_product(wreath_l2_sdp2(l), single(row(1)));
}

bool mf_s2_wr_ak(int k) { return s2_wr_ak(k).multiplicity_free(); }
bool mf_sdpk(int k) { return sdpk_form(k).multiplicity_free(); }
bool mf_wreath_2k_cap_alt(int k) {
  return wreath_2k_cap_alt(k).multiplicity_free();
}
bool mf_sdpka(int k) { return sdpka_form(k).multiplicity_free(); }

bool mf_membership(const std::string& family, int k, int n) {
  if (family == "young_ss") return true;
  if (family == "young_as") return k != 2;
  if (family == "young_sa") return n - k != 2;
  if (family == "young_aa") return k >= 3 && 2 * k <= n - 2;
  if (family == "young_cap_alt") return young_cap_alt(k, n).multiplicity_free();
  if (family == "wreath_l2") return true;
  if (family == "wreath_l2_cap_alt")
    return k >= 3 && wreath_l2_cap_alt(k).multiplicity_free();
  if (family == "sdp2") return wreath_l2_sdp2(k).multiplicity_free();
  if (family == "alt_wreath_l2")
    return k >= 3 && alt_wreath_l2(k).multiplicity_free();
  if (family == "wreath_2k") return true;
  if (family == "wr2k_cap_alt") return mf_wreath_2k_cap_alt(k);
  if (family == "S2wrAk") return mf_s2_wr_ak(k);
  if (family == "sdpk") return mf_sdpk(k);
  if (family == "sdpka") return mf_sdpka(k);
  if (family == "agl15_x_sk")
    return special_product(SpecialBase::AGL15, ProductFactor::Sk, k)
        .multiplicity_free();
  if (family == "agl15_x_ak")
    return special_product(SpecialBase::AGL15, ProductFactor::Ak, k)
        .multiplicity_free();
  if (family == "agl15_cap_alt")
    return special_product(SpecialBase::AGL15, ProductFactor::CapAlt, k)
        .multiplicity_free();
  if (family == "pgl25_x_sk")
    return special_product(SpecialBase::PGL25, ProductFactor::Sk, k)
        .multiplicity_free();
  if (family == "pgl25_x_ak")
    return special_product(SpecialBase::PGL25, ProductFactor::Ak, k)
        .multiplicity_free();
  if (family == "pgl25_cap_alt")
    return special_product(SpecialBase::PGL25, ProductFactor::CapAlt, k)
        .multiplicity_free();
  if (family == "pgammal28_x_sk")
    return special_product(SpecialBase::PGammaL28, ProductFactor::Sk, k)
        .multiplicity_free();
  if (family == "pgammal28_x_ak")
    return special_product(SpecialBase::PGammaL28, ProductFactor::Ak, k)
        .multiplicity_free();
  throw std::invalid_argument("unknown family: " + family);
}

}  // namespace multfree::closed

namespace multfree {

namespace {

std::map<std::string, MultiplicityVector>& stored_map() {
  static std::map<std::string, MultiplicityVector> m;
  static std::once_flag once;
  std::call_once(once, [] {
    std::string path = default_data_dir() + "/stored_decomps.tsv";
    std::ifstream in(path);
    if (!in) return;  // optional file
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      std::string spec, n_s, mv_s;
      if (!std::getline(ss, spec, '\t') || !std::getline(ss, n_s, '\t') ||
          !std::getline(ss, mv_s))
        throw std::runtime_error("malformed stored decomposition: " + line);
      m.emplace(spec,
                MultiplicityVector::parse_compact(std::stoi(n_s), mv_s));
    }
  });
  return m;
}

using Kind = GroupSpec::Kind;

std::optional<MultiplicityVector> closed_mv(const GroupSpec& s) {
  using namespace closed;
  switch (s.kind()) {
    case Kind::Sym: {
      MultiplicityVector mv(s.param());
      mv.set(Partition(std::vector<int>{s.param()}), 1);
      return mv;
    }
    case Kind::Alt: {
      int n = s.param();
      MultiplicityVector mv(n);
      mv.set(Partition(std::vector<int>{n}), 1);
      if (n >= 2) mv.set(Partition(std::vector<int>(static_cast<size_t>(n), 1)), 1);
      return mv;
    }
    case Kind::Prod: {
      auto a = closed_mv(s.child(0));
      auto b = closed_mv(s.child(1));
      if (!a || !b) return std::nullopt;
      return outer_product(*a, *b);
    }
    case Kind::Point: {
      auto a = closed_mv(s.child());
      if (!a) return std::nullopt;
      MultiplicityVector box(1);
      box.set(Partition(std::vector<int>{1}), 1);
      return outer_product(*a, box);
    }
    case Kind::AltWrap: {
      auto a = closed_mv(s.child());
      if (!a) return std::nullopt;
      // intersecting changes nothing when the subgroup is already even
      PermGroup g = s.child().build(Catalog::instance());
      if (g.in_alternating()) return a;
      return a->conjugate_symmetrized();
    }
    case Kind::WreathSym: {
      int k = s.param();
      const GroupSpec& base = s.child();
      if (base.kind() == Kind::Sym && k == 2) return wreath_l2(base.param());
      if (base.kind() == Kind::Sym && base.param() == 2) return wreath_2k(k);
      if (base.kind() == Kind::Alt && k == 2 && base.param() >= 3)
        return alt_wreath_l2(base.param());
      break;
    }
    case Kind::WreathAlt: {
      const GroupSpec& base = s.child();
      if (base.kind() == Kind::Sym && base.param() == 2 && s.param() >= 2)
        return s2_wr_ak(s.param());
      break;
    }
    case Kind::Sdp2:
      return wreath_l2_sdp2(s.param());
    case Kind::Sdpk:
      return sdpk_form(s.param());
    case Kind::Sdpka:
      return sdpka_form(s.param());
    case Kind::Sdp3:
    case Kind::SD:
    case Kind::RD:
      break;
    case Kind::Named: {
      if (s.name() == "AGL(1,5)") return special_base(SpecialBase::AGL15);
      if (s.name() == "PGL(2,5)") return special_base(SpecialBase::PGL25);
      if (s.name() == "PGammaL(2,8)")
        return special_base(SpecialBase::PGammaL28);
      break;
    }
  }
  if (const MultiplicityVector* mv = stored_decomposition(s.str())) return *mv;
  return std::nullopt;
}

}  // namespace

const MultiplicityVector* stored_decomposition(const std::string& spec_text) {
  const auto& m = stored_map();
  auto it = m.find(spec_text);
  return it == m.end() ? nullptr : &it->second;
}

std::optional<Decomposition> closed_form_for(const GroupSpec& spec) {
  Decomposition d;
  if (const MultiplicityVector* mv = stored_decomposition(spec.str())) {
    d.mv = *mv;
    d.prov = Provenance::stored;
    return d;
  }
  auto mv = closed_mv(spec);
  if (!mv) return std::nullopt;
  d.mv = std::move(*mv);
  d.prov = Provenance::closed_form;
  return d;
}

}  // namespace multfree
