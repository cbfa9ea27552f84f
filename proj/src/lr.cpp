#include "multfree/lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace multfree {

namespace {

// Stage-by-stage enumeration of nu-expansions of mu. Stage s adds
// nu.part(s) boxes labelled s+1 as a horizontal strip (no two same-stage
// boxes in a column, condition new_r <= base_{r-1}); the lattice-word
// requirement is checked incrementally per row: the cumulative count of
// label s+1 in rows 0..r may not exceed the count of label s in rows
// 0..r-1.
struct LrEnum {
  const Partition* nu = nullptr;
  std::vector<int> shape;
  std::vector<int> prev_cum;  // cumulative row counts of the previous label
  bool strict = true;
  const std::vector<int>* target = nullptr;
  std::function<void(const std::vector<int>&)> leaf;

  int target_row(size_t r) const {
    if (!target) return 1 << 28;
    return r < target->size() ? (*target)[r] : 0;
  }

  void stage(int s) {
    if (s == nu->rows()) {
      leaf(shape);
      return;
    }
    std::vector<int> base = shape;
    std::vector<int> cur_cum(shape.size(), 0);
    place(s, 0, nu->part(s), base, cur_cum);
  }

  void place(int s, size_t r, int left, const std::vector<int>& base,
             std::vector<int>& cur_cum) {
    if (left == 0) {
      for (size_t j = r; j < cur_cum.size(); ++j)
        cur_cum[j] = r == 0 ? 0 : cur_cum[r - 1];
      std::vector<int> saved = std::move(prev_cum);
      prev_cum = cur_cum;
      stage(s + 1);
      prev_cum = std::move(saved);
      return;
    }
    if (r >= shape.size()) return;
    int above_base = r == 0 ? (1 << 28) : base[r - 1];
    int maxc = std::min({left, above_base - base[r], target_row(r) - base[r]});
    if (strict && s > 0) {
      int prev_above = r == 0 ? 0 : prev_cum[r - 1];
      int cur_above = r == 0 ? 0 : cur_cum[r - 1];
      maxc = std::min(maxc, prev_above - cur_above);
    }
    for (int c = maxc; c >= 0; --c) {
      shape[r] = base[r] + c;
      cur_cum[r] = (r == 0 ? 0 : cur_cum[r - 1]) + c;
      place(s, r + 1, left - c, base, cur_cum);
    }
    shape[r] = base[r];
  }
};

void run_expansions(const Partition& mu, const Partition& nu, bool strict,
                    const std::vector<int>* target,
                    const std::function<void(const std::vector<int>&)>& leaf) {
  LrEnum ex;
  ex.nu = &nu;
  ex.shape.assign(static_cast<size_t>(mu.rows() + nu.rows() + 1), 0);
  for (int i = 0; i < mu.rows(); ++i)
    ex.shape[static_cast<size_t>(i)] = mu.part(i);
  ex.prev_cum.assign(ex.shape.size(), 0);
  ex.strict = strict;
  ex.target = target;
  ex.leaf = leaf;
  ex.stage(0);
}

Partition shape_to_partition(const std::vector<int>& shape) {
  std::vector<int> rows;
  for (int v : shape) {
    if (v == 0) break;
    rows.push_back(v);
  }
  return Partition(std::move(rows));
}

}  // namespace

std::map<Partition, long long, PartitionRevLexLess> strict_expansions(
    const Partition& mu, const Partition& nu) {
  std::map<Partition, long long, PartitionRevLexLess> out;
  run_expansions(mu, nu, /*strict=*/true, nullptr,
                 [&](const std::vector<int>& shape) {
                   out[shape_to_partition(shape)] += 1;
                 });
  return out;
}

long long count_all_expansions(const Partition& mu, const Partition& nu) {
  long long count = 0;
  run_expansions(mu, nu, /*strict=*/false, nullptr,
                 [&](const std::vector<int>&) { ++count; });
  return count;
}

long long lr_coefficient(const Partition& mu, const Partition& nu,
                         const Partition& lambda) {
  if (mu.n() + nu.n() != lambda.n()) return 0;
  for (int i = 0; i < mu.rows(); ++i)
    if (mu.part(i) > lambda.part(i)) return 0;
  std::vector<int> target(lambda.parts());
  long long count = 0;
  run_expansions(mu, nu, /*strict=*/true, &target,
                 [&](const std::vector<int>& shape) {
                   if (shape_to_partition(shape) == lambda) ++count;
                 });
  return count;
}

MultiplicityVector outer_product(const MultiplicityVector& a,
                                 const MultiplicityVector& b) {
  MultiplicityVector out(a.n() + b.n());
  for (const auto& [mu, cm] : a.entries()) {
    for (const auto& [nu, cn] : b.entries()) {
      auto exp = strict_expansions(mu, nu);
      for (const auto& [lam, cnt] : exp) out.add(lam, cm * cn * cnt);
    }
  }
  return out;
}

}  // namespace multfree
