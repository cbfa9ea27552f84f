#include "multfree/constructors.hpp"

#include <stdexcept>

#include "multfree/characters.hpp"

namespace multfree {

namespace {

Perm cycle(std::vector<int> pts, int degree) {
  Perm p = Perm::identity(degree);
  std::vector<uint8_t> img(p.images());
  for (size_t i = 0; i < pts.size(); ++i)
    img[static_cast<size_t>(pts[i])] =
        static_cast<uint8_t>(pts[(i + 1) % pts.size()]);
  return Perm(std::move(img));
}

std::vector<Perm> symmetric_gens(int n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(cycle({0, 1}, n));
  if (n >= 3) {
    std::vector<int> full(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) full[static_cast<size_t>(i)] = i;
    gens.push_back(cycle(full, n));
  }
  return gens;
}

std::vector<Perm> alternating_gens(int n) {
  std::vector<Perm> gens;
  if (n < 3) return gens;  // A_1, A_2 trivial
  gens.push_back(cycle({0, 1, 2}, n));
  if (n >= 4) {
    std::vector<int> c;
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) c.push_back(i);
    } else {
      for (int i = 1; i < n; ++i) c.push_back(i);
    }
    gens.push_back(cycle(c, n));
  }
  return gens;
}

// the top permutation acting on blocks of size l, block-major
Perm lift_block_perm(const Perm& pi, int l, int degree) {
  std::vector<uint8_t> img(static_cast<size_t>(degree));
  for (int b = 0; b < pi.degree(); ++b)
    for (int i = 0; i < l; ++i)
      img[static_cast<size_t>(b * l + i)] =
          static_cast<uint8_t>(pi(b) * l + i);
  return Perm(std::move(img));
}

BigInt pow_big(BigInt b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_order(const PermGroup& g, const BigInt& expect,
                 const std::string& what) {
  if (g.order() != expect)
    throw std::logic_error(what + ": constructed order " + g.order().str() +
                           " != expected " + expect.str());
}

}  // namespace

PermGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  PermGroup g = PermGroup::generate(symmetric_gens(n), n);
  check_order(g, factorial(n), "S_n");
  return g;
}

PermGroup alternating_group(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  PermGroup g = PermGroup::generate(alternating_gens(n), n);
  check_order(g, n >= 2 ? factorial(n) / 2 : 1, "A_n");
  return g;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(g.extended(n));
  for (const Perm& g : b.generators()) gens.push_back(g.shifted(a.degree(), n));
  PermGroup g = PermGroup::generate(std::move(gens), n);
  check_order(g, a.order() * b.order(), "direct product");
  return g;
}

PermGroup wreath_product(const PermGroup& base, int k, TopGroup top) {
  if (k < 1) throw std::invalid_argument("wreath needs k >= 1");
  int l = base.degree();
  int n = l * k;
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b)
    for (const Perm& g : base.generators()) gens.push_back(g.shifted(b * l, n));
  std::vector<Perm> topgens =
      top == TopGroup::Sym ? symmetric_gens(k) : alternating_gens(k);
  for (const Perm& pi : topgens) gens.push_back(lift_block_perm(pi, l, n));
  PermGroup g = PermGroup::generate(std::move(gens), n);
  BigInt expect = pow_big(base.order(), k);
  if (top == TopGroup::Sym)
    expect *= factorial(k);
  else if (k >= 3)
    expect *= factorial(k) / 2;
  check_order(g, expect, "wreath product");
  return g;
}

PermGroup alt_semidirect(int l, int k) {
  if (l < 2 || k < 2) throw std::invalid_argument("alt_semidirect needs l,k >= 2");
  int n = l * k;
  std::vector<Perm> gens;
  // (S_l)^k cap A_n: per-block A_l plus cross-block odd*odd pairs
  for (int b = 0; b < k; ++b)
    for (const Perm& g : alternating_gens(l)) gens.push_back(g.shifted(b * l, n));
  for (int b = 0; b + 1 < k; ++b) {
    Perm t1 = cycle({b * l, b * l + 1}, n);
    Perm t2 = cycle({(b + 1) * l, (b + 1) * l + 1}, n);
    gens.push_back(t1 * t2);
  }
  // even block permutations
  for (const Perm& pi : alternating_gens(k)) gens.push_back(lift_block_perm(pi, l, n));
  // one mixed element: block transposition, compensated when l is even
  Perm swap01 = lift_block_perm(cycle({0, 1}, k), l, n);
  if (l % 2 == 0) swap01 = cycle({0, 1}, n) * swap01;
  gens.push_back(swap01);
  PermGroup g = PermGroup::generate(std::move(gens), n);
  check_order(g, pow_big(factorial(l), k) * factorial(k) / 2,
              "alt_semidirect");
  return g;
}

PermGroup alt_semidirect_alt(int k) {
  if (k < 2) throw std::invalid_argument("needs k >= 2");
  int l = 2, n = 2 * k;
  std::vector<Perm> gens;
  for (int b = 0; b + 1 < k; ++b) {
    Perm t1 = cycle({b * l, b * l + 1}, n);
    Perm t2 = cycle({(b + 1) * l, (b + 1) * l + 1}, n);
    gens.push_back(t1 * t2);
  }
  for (const Perm& pi : alternating_gens(k)) gens.push_back(lift_block_perm(pi, l, n));
  PermGroup g = PermGroup::generate(std::move(gens), n);
  BigInt expect = pow_big(2, k - 1) * (k >= 3 ? factorial(k) / 2 : 1);
  check_order(g, expect, "alt_semidirect_alt");
  return g;
}

PermGroup sd_group(int l) {
  if (l < 2) throw std::invalid_argument("SD_l needs l >= 2");
  int k = 3, n = 3 * l;
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b)
    for (const Perm& g : alternating_gens(l)) gens.push_back(g.shifted(b * l, n));
  // diagonal odd triple
  Perm diag = cycle({0, 1}, n) * cycle({l, l + 1}, n) * cycle({2 * l, 2 * l + 1}, n);
  gens.push_back(diag);
  for (const Perm& pi : symmetric_gens(k)) gens.push_back(lift_block_perm(pi, l, n));
  PermGroup g = PermGroup::generate(std::move(gens), n);
  check_order(g, pow_big(factorial(l), 3) / 4 * 6, "SD_l");
  return g;
}

PermGroup rd_group(int l) {
  if (l < 2) throw std::invalid_argument("RD_l needs l >= 2");
  int k = 3, n = 3 * l;
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b)
    for (const Perm& g : alternating_gens(l)) gens.push_back(g.shifted(b * l, n));
  for (const Perm& pi : alternating_gens(k)) gens.push_back(lift_block_perm(pi, l, n));
  // odd block transposition paired with odd components
  Perm mixed = lift_block_perm(cycle({0, 1}, k), l, n);
  mixed = cycle({0, 1}, n) * cycle({l, l + 1}, n) * cycle({2 * l, 2 * l + 1}, n) * mixed;
  gens.push_back(mixed);
  PermGroup g = PermGroup::generate(std::move(gens), n);
  check_order(g, pow_big(factorial(l), 3) / 4 * 3, "RD_l");
  return g;
}

PermGroup point_extension(const PermGroup& g) {
  int n = g.degree() + 1;
  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) gens.push_back(x.extended(n));
  PermGroup h = PermGroup::generate(std::move(gens), n);
  check_order(h, g.order(), "point extension");
  return h;
}

}  // namespace multfree
