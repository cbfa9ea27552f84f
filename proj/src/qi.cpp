#include "multfree/qi.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "multfree/characters.hpp"

namespace multfree::qi {

std::string UniformPartition::str() const {
  std::string s = "{";
  for (size_t c = 0; c < cells.size(); ++c) {
    if (c) s += '|';
    bool first = true;
    for (int b = 0; b < 32; ++b)
      if (cells[c] >> b & 1) {
        if (!first) s += ',';
        s += std::to_string(b + 1);
        first = false;
      }
  }
  return s + "}";
}

BigInt count_uniform(int n, int k) {
  if (k <= 0 || n % k != 0) throw std::invalid_argument("k must divide n");
  int l = n / k;
  BigInt c = factorial(n);
  for (int i = 0; i < k; ++i) c /= factorial(l);
  return c / factorial(k);
}

namespace {

void enumerate_rec(int n, int l, uint32_t used,
                   std::vector<uint32_t>& cells,
                   std::vector<UniformPartition>& out) {
  if (static_cast<int>(std::popcount(used)) == n) {
    out.push_back(UniformPartition{cells});
    return;
  }
  int first = std::countr_zero(~used);  // smallest unused point
  // choose the remaining l-1 members of first's cell from larger points
  std::vector<int> avail;
  for (int b = first + 1; b < n; ++b)
    if (!(used >> b & 1)) avail.push_back(b);
  std::vector<int> pick;
  std::function<void(size_t)> choose = [&](size_t start) {
    if (static_cast<int>(pick.size()) == l - 1) {
      uint32_t cell = 1u << first;
      for (int b : pick) cell |= 1u << b;
      cells.push_back(cell);
      enumerate_rec(n, l, used | cell, cells, out);
      cells.pop_back();
      return;
    }
    for (size_t i = start; i < avail.size(); ++i) {
      pick.push_back(avail[i]);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
}

}  // namespace

std::vector<UniformPartition> enumerate_uniform(int n, int k) {
  if (k <= 0 || n % k != 0) throw std::invalid_argument("k must divide n");
  if (n > 32) throw std::invalid_argument("n must be at most 32");
  std::vector<UniformPartition> out;
  std::vector<uint32_t> cells;
  enumerate_rec(n, n / k, 0, cells, out);
  return out;
}

MeetTable meet_table(const UniformPartition& p, const UniformPartition& q) {
  int k = static_cast<int>(p.cells.size());
  if (q.cells.size() != p.cells.size())
    throw std::invalid_argument("partition shape mismatch");
  MeetTable t;
  t.k = k;
  t.m.resize(static_cast<size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t.m[static_cast<size_t>(i * k + j)] =
          std::popcount(p.cells[static_cast<size_t>(i)] &
                        q.cells[static_cast<size_t>(j)]);
  return t;
}

MeetTable MeetTable::transposed() const {
  MeetTable t;
  t.k = k;
  t.m.resize(m.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t.m[static_cast<size_t>(j * k + i)] = m[static_cast<size_t>(i * k + j)];
  return t;
}

bool MeetTable::all_positive() const {
  return std::all_of(m.begin(), m.end(), [](int v) { return v > 0; });
}

std::string MeetTable::str() const {
  std::string s;
  for (int i = 0; i < k; ++i) {
    if (i) s += ';';
    for (int j = 0; j < k; ++j) {
      if (j) s += ' ';
      s += std::to_string(at(i, j));
    }
  }
  return s;
}

namespace {

MeetTable canonical_uncached(const MeetTable& t) {
  // k <= 4 in scope: brute-force over column permutations, rows sorted
  int k = t.k;
  std::vector<int> colperm(static_cast<size_t>(k));
  std::iota(colperm.begin(), colperm.end(), 0);
  MeetTable best;
  bool have = false;
  std::vector<std::vector<int>> rows(static_cast<size_t>(k),
                                     std::vector<int>(static_cast<size_t>(k)));
  do {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            t.at(i, colperm[static_cast<size_t>(j)]);
    std::sort(rows.begin(), rows.end());
    MeetTable cand;
    cand.k = k;
    cand.m.reserve(static_cast<size_t>(k * k));
    for (const auto& r : rows) cand.m.insert(cand.m.end(), r.begin(), r.end());
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  } while (std::next_permutation(colperm.begin(), colperm.end()));
  return best;
}

// tables with k <= 4 and entries < 16 pack into 64 bits
bool pack_table(const MeetTable& t, uint64_t* key) {
  if (t.k > 4) return false;
  uint64_t v = static_cast<uint64_t>(t.k);
  int shift = 3;
  for (int x : t.m) {
    if (x >= 16) return false;
    v |= static_cast<uint64_t>(x) << shift;
    shift += 4;
  }
  *key = v;
  return true;
}

}  // namespace

MeetTable canonical(const MeetTable& t) {
  // the same few hundred tables recur across all vertex pairs, so memoize
  // per thread
  thread_local std::map<uint64_t, MeetTable> cache;
  uint64_t key;
  if (!pack_table(t, &key)) return canonical_uncached(t);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MeetTable c = canonical_uncached(t);
  cache.emplace(key, c);
  return c;
}

bool BitMatrix::symmetric() const {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

long long BitMatrix::row_sum(size_t i) const {
  long long s = 0;
  for (size_t w = 0; w < words; ++w)
    s += std::popcount(row(i)[w]);
  return s;
}

std::vector<SchemeMatrix> scheme_matrices(int n, int k, size_t vertex_cap,
                                          Exec mode) {
  auto parts = enumerate_uniform(n, k);
  size_t v = parts.size();
  if (v > vertex_cap)
    throw CensusInfeasible("vertex count " + std::to_string(v) +
                           " exceeds cap " + std::to_string(vertex_cap));
  // Every S_n-orbital on ordered pairs has a representative whose first
  // coordinate is vertex 0 (the action is vertex-transitive), so scanning
  // row 0 already yields the complete class list.
  std::map<MeetTable, size_t> class_of;
  for (size_t j = 1; j < v; ++j)
    class_of.emplace(canonical(meet_table(parts[0], parts[j])), 0);
  {
    size_t id = 0;
    for (auto& [tbl, cid] : class_of) cid = id++;
  }

  std::vector<SchemeMatrix> mats(class_of.size());
  for (const auto& [tbl, id] : class_of) {
    mats[id].table = tbl;
    mats[id].adjacency = BitMatrix(v);
  }

  // class_of is immutable now; parallel rows only read it
  std::vector<std::vector<uint16_t>> class_row(v);
  auto run_row = [&](size_t i) {
    class_row[i].assign(v, 0xffff);
    for (size_t j = 0; j < v; ++j) {
      if (i == j) continue;
      MeetTable canon = canonical(meet_table(parts[i], parts[j]));
      class_row[i][j] = static_cast<uint16_t>(class_of.at(canon));
    }
  };
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (size_t i = 0; i < v; ++i) run_row(i);
  } else {
    for (size_t i = 0; i < v; ++i) run_row(i);
  }

  for (size_t i = 0; i < v; ++i)
    for (size_t j = 0; j < v; ++j)
      if (i != j) mats[class_row[i][j]].adjacency.set(i, j);
  return mats;
}

bool commuting_check(const std::vector<SchemeMatrix>& mats,
                     std::pair<size_t, size_t>* witness, Exec mode) {
  // (AB)_{ij} = popcount(row_i(A) & row_j(B)); with symmetric matrices
  // AB = BA iff AB is symmetric: compare (AB)_{ij} with (AB)_{ji}
  for (const SchemeMatrix& m : mats)
    if (!m.adjacency.symmetric())
      throw std::logic_error("scheme matrix for class " + m.table.str() +
                             " is not symmetric");
  for (size_t a = 0; a < mats.size(); ++a) {
    for (size_t b = a + 1; b < mats.size(); ++b) {
      const BitMatrix& A = mats[a].adjacency;
      const BitMatrix& B = mats[b].adjacency;
      size_t v = A.n;
      auto entry = [&](const BitMatrix& X, const BitMatrix& Y, size_t i,
                       size_t j) {
        long long s = 0;
        const uint64_t* xi = X.row(i);
        const uint64_t* yj = Y.row(j);
        for (size_t w = 0; w < X.words; ++w)
          s += std::popcount(xi[w] & yj[w]);
        return s;
      };
      long long bad = 0;
      if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad)
        for (size_t i = 0; i < v; ++i)
          for (size_t j = i + 1; j < v; ++j)
            if (entry(A, B, i, j) != entry(B, A, i, j)) ++bad;
      } else {
        for (size_t i = 0; i < v && bad == 0; ++i)
          for (size_t j = i + 1; j < v; ++j)
            if (entry(A, B, i, j) != entry(B, A, i, j)) {
              ++bad;
              break;
            }
      }
      if (bad != 0) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  }
  return true;
}

BitMatrix qi_graph(int n, int k, size_t vertex_cap) {
  auto parts = enumerate_uniform(n, k);
  size_t v = parts.size();
  if (v > vertex_cap)
    throw CensusInfeasible("vertex count exceeds cap");
  BitMatrix adj(v);
#pragma omp parallel for schedule(dynamic, 8)
  for (size_t i = 0; i < v; ++i)
    for (size_t j = 0; j < v; ++j)
      if (i != j && meet_table(parts[i], parts[j]).all_positive())
        adj.set(i, j);
  return adj;
}

namespace {

struct CliqueSearch {
  const BitMatrix* adj;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  int best = 0;
  std::vector<int> best_set;
  std::vector<int> current;

  // greedy colouring upper bound; returns vertices ordered by colour with
  // their colour numbers (ascending)
  int colour_sort(const std::vector<uint64_t>& cand, size_t words,
                  std::vector<int>& order, std::vector<int>& colours) {
    order.clear();
    colours.clear();
    std::vector<uint64_t> uncoloured(cand);
    int colour = 0;
    while (true) {
      bool any = false;
      for (size_t w = 0; w < words; ++w)
        if (uncoloured[w]) {
          any = true;
          break;
        }
      if (!any) break;
      ++colour;
      std::vector<uint64_t> avail(uncoloured);
      while (true) {
        int v = -1;
        for (size_t w = 0; w < words && v < 0; ++w)
          if (avail[w]) v = static_cast<int>(w * 64 + std::countr_zero(avail[w]));
        if (v < 0) break;
        order.push_back(v);
        colours.push_back(colour);
        uncoloured[static_cast<size_t>(v) / 64] &= ~(1ull << (v % 64));
        avail[static_cast<size_t>(v) / 64] &= ~(1ull << (v % 64));
        const uint64_t* nv = adj->row(static_cast<size_t>(v));
        for (size_t w = 0; w < words; ++w) avail[w] &= ~nv[w];
      }
    }
    return colour;
  }

  void expand(std::vector<uint64_t>& cand, size_t words) {
    ++nodes;
    if (nodes > budget) {
      exhausted = true;
      return;
    }
    std::vector<int> order, colours;
    colour_sort(cand, words, order, colours);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (exhausted) return;
      int v = order[static_cast<size_t>(idx)];
      if (static_cast<int>(current.size()) + colours[static_cast<size_t>(idx)] <=
          best)
        return;  // colour bound prunes the rest
      current.push_back(v);
      std::vector<uint64_t> next(words);
      const uint64_t* nv = adj->row(static_cast<size_t>(v));
      bool nonempty = false;
      for (size_t w = 0; w < words; ++w) {
        next[w] = cand[w] & nv[w];
        nonempty |= next[w] != 0;
      }
      if (nonempty) {
        expand(next, words);
      } else if (static_cast<int>(current.size()) > best) {
        best = static_cast<int>(current.size());
        best_set = current;
      }
      current.pop_back();
      cand[static_cast<size_t>(v) / 64] &= ~(1ull << (v % 64));
    }
  }
};

}  // namespace

CliqueResult max_clique(const BitMatrix& adj, long long node_budget) {
  CliqueSearch s;
  s.adj = &adj;
  s.budget = node_budget;
  std::vector<uint64_t> cand(adj.words, 0);
  for (size_t i = 0; i < adj.n; ++i)
    cand[i / 64] |= 1ull << (i % 64);
  std::vector<int> order, colours;
  int ub = s.colour_sort(cand, adj.words, order, colours);
  s.expand(cand, adj.words);
  CliqueResult r;
  r.lower = s.best;
  r.upper = s.exhausted ? ub : s.best;
  r.exact = !s.exhausted;
  r.witness = s.best_set;
  r.nodes = s.nodes;
  return r;
}

CliqueResult max_clique_qi(int n, int k, long long node_budget,
                           size_t vertex_cap, Exec mode) {
  auto parts = enumerate_uniform(n, k);
  size_t v = parts.size();
  BitMatrix adj = qi_graph(n, k, vertex_cap);

  // Vertex transitivity: some maximum clique contains vertex 0. The
  // stabiliser of vertex 0 acts on its neighbours with orbits given by the
  // canonical meet table, so one representative neighbour per all-positive
  // class covers all maximum cliques {0, rep, ...}.
  std::map<MeetTable, size_t> rep_map;  // class -> smallest neighbour index
  for (size_t j = 1; j < v; ++j) {
    MeetTable t = meet_table(parts[0], parts[j]);
    if (!t.all_positive()) continue;
    rep_map.emplace(canonical(t), j);  // keeps the first (smallest) j
  }
  if (rep_map.empty()) {
    CliqueResult r;
    r.lower = v > 0 ? 1 : 0;
    r.upper = r.lower;
    r.exact = true;
    if (v > 0) r.witness = {0};
    return r;
  }
  std::vector<size_t> reps;
  for (const auto& [canon, rep] : rep_map) reps.push_back(rep);

  // root branches get an equal budget share so the outcome is independent
  // of the schedule
  long long share = node_budget / static_cast<long long>(reps.size());
  std::vector<CliqueResult> branch(reps.size());
  auto run_branch = [&](size_t b) {
    size_t rep = reps[b];
    std::vector<int> sub;  // common neighbours of 0 and rep
    for (size_t j = 0; j < v; ++j)
      if (j != 0 && j != rep && adj.get(0, j) && adj.get(rep, j))
        sub.push_back(static_cast<int>(j));
    BitMatrix sadj(sub.size());
    for (size_t a = 0; a < sub.size(); ++a)
      for (size_t c = 0; c < sub.size(); ++c)
        if (a != c && adj.get(static_cast<size_t>(sub[a]),
                              static_cast<size_t>(sub[c])))
          sadj.set(a, c);
    branch[b] = max_clique(sadj, share);
    for (int& x : branch[b].witness) x = sub[static_cast<size_t>(x)];
  };
  if (mode == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (size_t b = 0; b < reps.size(); ++b) run_branch(b);
  } else {
    for (size_t b = 0; b < reps.size(); ++b) run_branch(b);
  }

  CliqueResult out;
  out.exact = true;
  out.lower = 2;
  out.upper = 2;
  for (size_t b = 0; b < reps.size(); ++b) {
    const CliqueResult& r = branch[b];
    out.nodes += r.nodes;
    if (2 + r.lower > out.lower) {
      out.lower = 2 + r.lower;
      out.witness = {0, static_cast<int>(reps[b])};
      out.witness.insert(out.witness.end(), r.witness.begin(),
                         r.witness.end());
    }
    out.upper = std::max(out.upper, 2 + r.upper);
    out.exact = out.exact && r.exact;
  }
  if (out.exact) out.upper = out.lower;
  return out;
}

}  // namespace multfree::qi
