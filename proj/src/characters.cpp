#include "multfree/characters.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace multfree {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt centraliser_order(const CycleType& mu) {
  BigInt z = 1;
  int run = 0, prev = 0;
  for (int p : mu.parts()) {
    if (p == prev) {
      ++run;
    } else {
      prev = p;
      run = 1;
    }
    z *= p;
    z *= run;  // accumulates m_j! one factor at a time
  }
  return z;
}

BigInt class_size(const CycleType& mu) {
  return factorial(mu.n()) / centraliser_order(mu);
}

int sign_of_class(const CycleType& mu) {
  return (mu.n() - mu.rows()) % 2 == 0 ? 1 : -1;
}

long long dimension(const Partition& lambda) {
  BigInt hooks = 1;
  Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
  BigInt d = factorial(lambda.n()) / hooks;
  if (d > std::numeric_limits<long long>::max())
    throw std::overflow_error("dimension does not fit in 64 bits");
  return static_cast<long long>(d);
}

namespace {

constexpr int kMaxDegree = 32;  // beta-set masks must fit in 64 bits

// Beta-set encoding: partition lambda with at most L rows becomes the mask
// { lambda_i + (L-1-i) : i = 0..L-1 }. Adding a border strip of length t
// replaces a set bit f by f+t; the strip height is the number of set bits
// strictly between them.
uint64_t beta_mask(const Partition& p, int L) {
  uint64_t m = 0;
  for (int i = 0; i < L; ++i)
    m |= 1ull << (p.part(i) + (L - 1 - i));
  return m;
}


// One column of the character table: chi^lambda(mu) for all lambda of n,
// by adding border strips for the parts of mu from the smallest up.
std::unordered_map<uint64_t, long long> strip_dp(const CycleType& mu, int L) {
  std::unordered_map<uint64_t, long long> cur;
  cur.emplace(beta_mask(Partition(), L), 1);
  const auto& parts = mu.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    int t = *it;
    std::unordered_map<uint64_t, long long> next;
    next.reserve(cur.size() * 4);
    for (const auto& [mask, coeff] : cur) {
      for (int f = 0; f + t < 64; ++f) {
        if (!(mask & (1ull << f)) || (mask & (1ull << (f + t)))) continue;
        uint64_t between =
            mask & ((~0ull >> (63 - (f + t))) ^ ((2ull << f) - 1));
        between &= ~(1ull << (f + t));
        int height = static_cast<int>(__builtin_popcountll(between));
        uint64_t nm = (mask ^ (1ull << f)) | (1ull << (f + t));
        next[nm] += (height % 2 == 0) ? coeff : -coeff;
      }
    }
    for (auto it2 = next.begin(); it2 != next.end();) {
      if (it2->second == 0)
        it2 = next.erase(it2);
      else
        ++it2;
    }
    cur = std::move(next);
  }
  return cur;
}

std::mutex table_mutex;
std::map<int, std::unique_ptr<CharacterTable>>& table_cache() {
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  return cache;
}

}  // namespace

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 0 || n > kMaxDegree)
    throw std::invalid_argument("character table degree out of range");
  classes_ = partitions_of(n);
  size_t m = classes_.size();
  values_.assign(m * m, 0);
  int L = std::max(n, 1);
  std::vector<uint64_t> irrep_mask(m);
  std::unordered_map<uint64_t, size_t> irrep_index;
  for (size_t i = 0; i < m; ++i) {
    irrep_mask[i] = beta_mask(classes_[i], L);
    irrep_index.emplace(irrep_mask[i], i);
  }
#pragma omp parallel for schedule(dynamic)
  for (size_t c = 0; c < m; ++c) {
    auto col = strip_dp(classes_[c], L);
    for (const auto& [mask, val] : col) {
      auto it = irrep_index.find(mask);
      if (it == irrep_index.end())
        throw std::logic_error("strip DP produced unknown shape");
      values_[it->second * m + c] = val;
    }
  }
}

const CharacterTable& CharacterTable::for_degree(int n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& cache = table_cache();
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::unique_ptr<CharacterTable>(new CharacterTable(n)))
             .first;
  return *it->second;
}

int CharacterTable::class_index(const CycleType& mu) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), mu,
                             PartitionRevLexLess{});
  if (it == classes_.end() || !(*it == mu))
    throw std::invalid_argument("cycle type of wrong degree");
  return static_cast<int>(it - classes_.begin());
}

long long CharacterTable::value(const Partition& lambda,
                                const CycleType& mu) const {
  return value(static_cast<size_t>(class_index(lambda)),
               static_cast<size_t>(class_index(mu)));
}

long long character_value(const Partition& lambda, const CycleType& mu) {
  if (lambda.n() != mu.n())
    throw std::invalid_argument("partition/cycle type size mismatch");
  return CharacterTable::for_degree(lambda.n()).value(lambda, mu);
}

namespace {

long long mn_reference(uint64_t mask, int L, const std::vector<int>& parts,
                       size_t idx) {
  if (idx == parts.size()) return 1;
  int t = parts[idx];
  long long total = 0;
  for (int f = t; f < 64; ++f) {
    if (!(mask & (1ull << f)) || (mask & (1ull << (f - t)))) continue;
    uint64_t between = mask & (((1ull << f) - 1) ^ ((1ull << (f - t + 1)) - 1));
    int height = static_cast<int>(__builtin_popcountll(between));
    uint64_t nm = (mask ^ (1ull << f)) | (1ull << (f - t));
    long long sub = mn_reference(nm, L, parts, idx + 1);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long character_value_reference(const Partition& lambda,
                                    const CycleType& mu) {
  if (lambda.n() != mu.n())
    throw std::invalid_argument("partition/cycle type size mismatch");
  int L = std::max(lambda.n(), 1);
  return mn_reference(beta_mask(lambda, L), L, mu.parts(), 0);
}

ClassFunction::ClassFunction(int n)
    : n_(n), values_(partitions_of(n).size(), BigInt(0)) {}

ClassFunction ClassFunction::irreducible(const Partition& lambda) {
  const auto& table = CharacterTable::for_degree(lambda.n());
  ClassFunction f(lambda.n());
  size_t row = static_cast<size_t>(table.class_index(lambda));
  for (size_t c = 0; c < table.class_count(); ++c)
    f.values_[c] = table.value(row, c);
  return f;
}

ClassFunction ClassFunction::natural_permutation(int n) {
  ClassFunction f(n);
  auto classes = partitions_of(n);
  for (size_t c = 0; c < classes.size(); ++c) {
    int fixed = 0;
    for (int p : classes[c].parts())
      if (p == 1) ++fixed;
    f.values_[c] = fixed;
  }
  return f;
}

ClassFunction ClassFunction::regular(int n) {
  ClassFunction f(n);
  auto classes = partitions_of(n);
  for (size_t c = 0; c < classes.size(); ++c)
    if (classes[c].rows() == n) f.values_[c] = factorial(n);
  return f;
}

ClassFunction ClassFunction::from_multiplicities(const MultiplicityVector& mv) {
  const auto& table = CharacterTable::for_degree(mv.n());
  ClassFunction f(mv.n());
  for (const auto& [lam, c] : mv.entries()) {
    size_t row = static_cast<size_t>(table.class_index(lam));
    for (size_t cls = 0; cls < table.class_count(); ++cls)
      f.values_[cls] += BigInt(c) * table.value(row, cls);
  }
  return f;
}

BigRat inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("degree mismatch");
  auto classes = partitions_of(f.n());
  BigInt sum = 0;
  for (size_t c = 0; c < classes.size(); ++c)
    sum += class_size(classes[c]) * f.value(c) * g.value(c);
  return BigRat(sum, factorial(f.n()));
}

MultiplicityVector decompose(const ClassFunction& f) {
  const auto& table = CharacterTable::for_degree(f.n());
  const auto& classes = table.classes();
  BigInt nfact = factorial(f.n());
  MultiplicityVector out(f.n());
  for (size_t i = 0; i < classes.size(); ++i) {
    BigInt sum = 0;
    for (size_t c = 0; c < classes.size(); ++c)
      sum += class_size(classes[c]) * f.value(c) * table.value(i, c);
    if (sum % nfact != 0)
      throw std::domain_error("not a virtual character: <f, " +
                              classes[i].str() + "> is not an integer");
    BigInt m = sum / nfact;
    out.add(classes[i], static_cast<long long>(m));
  }
  return out;
}

}  // namespace multfree
