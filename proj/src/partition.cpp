#include "multfree/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multfree {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("bad partition literal: " + std::string(text));
  };
  size_t i = 0, m = text.size();
  auto skip_ws = [&] { while (i < m && text[i] == ' ') ++i; };
  skip_ws();
  if (i >= m || text[i] != '[') fail();
  ++i;
  std::vector<int> parts;
  skip_ws();
  if (i < m && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      if (i >= m || !isdigit(static_cast<unsigned char>(text[i]))) fail();
      int v = 0;
      while (i < m && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      int rep = 1;
      skip_ws();
      if (i < m && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= m || !isdigit(static_cast<unsigned char>(text[i]))) fail();
        rep = 0;
        while (i < m && isdigit(static_cast<unsigned char>(text[i])))
          rep = rep * 10 + (text[i++] - '0');
      }
      for (int r = 0; r < rep; ++r) parts.push_back(v);
      skip_ws();
      if (i < m && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < m && text[i] == ']') {
        ++i;
        break;
      }
      fail();
    }
  }
  skip_ws();
  if (i != m) fail();
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
  for (int j = 0; j < parts_[0]; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= j + 1) ++cnt;
    c[static_cast<size_t>(j)] = cnt;
  }
  return Partition(std::move(c));
}

Partition Partition::doubled() const {
  std::vector<int> d(parts_);
  for (int& p : d) p *= 2;
  return Partition(std::move(d));
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ']';
  return s;
}

bool revlex_precedes(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();  // lexicographically larger comes first
}

static void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                           const std::function<bool(const Partition&)>& fn,
                           bool& stop) {
  if (stop) return;
  if (n == 0) {
    if (!fn(Partition(cur))) stop = true;
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, fn, stop);
    cur.pop_back();
    if (stop) return;
  }
}

void for_each_partition(int n,
                        const std::function<bool(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<int> cur;
  bool stop = false;
  gen_partitions(n, n, cur, fn, stop);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

long long partition_count(int n) {
  // p(n) by the Euler pentagonal-number recurrence
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) s += sign * p[static_cast<size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<size_t>(m - g2)];
    }
    p[static_cast<size_t>(m)] = s;
  }
  return p[static_cast<size_t>(n)];
}

std::vector<DiagonalHook> diagonal_hooks(const Partition& p) {
  Partition c = p.conjugate();
  std::vector<DiagonalHook> hooks;
  for (int i = 0; p.part(i) >= i + 1; ++i)
    hooks.push_back({i + 1, p.part(i) - i, c.part(i) - i});
  return hooks;
}

bool all_hooks_satisfy(const Partition& p, int offset) {
  if (offset != 1 && offset != -1)
    throw std::invalid_argument("offset must be +1 or -1");
  if (p.empty()) return true;
  for (const auto& h : diagonal_hooks(p))
    if (h.width != h.depth + offset) return false;
  return true;
}

Partition partition_from_hooks(const std::vector<int>& widths,
                               const std::vector<int>& depths) {
  if (widths.size() != depths.size())
    throw std::invalid_argument("width/depth length mismatch");
  size_t d = widths.size();
  // arms a_i = widths[i]-1 strictly decreasing >= 0, legs likewise
  std::vector<int> rows;
  // row lengths: lambda_i = a_i + i + 1 for i < d, then column tail from legs
  std::vector<int> collen(d);
  for (size_t i = 0; i < d; ++i) collen[i] = depths[i] - 1 + static_cast<int>(i) + 1;
  int total_rows = d ? collen[0] : 0;
  rows.assign(static_cast<size_t>(total_rows), 0);
  for (size_t i = 0; i < d; ++i) {
    rows[i] = widths[i] - 1 + static_cast<int>(i) + 1;
    for (int r = static_cast<int>(i); r < collen[i]; ++r)
      rows[static_cast<size_t>(r)] = std::max(rows[static_cast<size_t>(r)],
                                              static_cast<int>(i) + 1);
  }
  return Partition(std::move(rows));
}

std::vector<Partition> odd_promotions(const Partition& p) {
  std::vector<int> dbl(p.parts());
  for (int& x : dbl) x *= 2;
  std::vector<Partition> out;
  int a = static_cast<int>(dbl.size());
  for (int i = 0; i <= a; ++i) {
    std::vector<int> cand(dbl);
    if (i < a)
      cand[static_cast<size_t>(i)] += 1;
    else
      cand.push_back(1);
    int prev = (i == 0) ? 2 * p.n() + 2 : cand[static_cast<size_t>(i - 1)];
    if (prev >= cand[static_cast<size_t>(i)]) out.push_back(Partition(cand));
  }
  return out;
}

std::optional<Partition> partition_from_terms(const std::vector<int>& terms) {
  std::vector<int> t(terms);
  while (!t.empty() && t.back() == 0) t.pop_back();
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1) return std::nullopt;
    if (i + 1 < t.size() && t[i] < t[i + 1]) return std::nullopt;
  }
  return Partition(std::move(t));
}

}  // namespace multfree
