#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multfree/perm_group.hpp"

namespace multfree::qi {

/// A uniform k-partition of {1..n}: k cells of size l = n/k, each a bitmask,
/// cells ordered by minimum element. n <= 32.
struct UniformPartition {
  std::vector<uint32_t> cells;
  std::string str() const;  // e.g. "{1,2|3,4}"
};

/// All uniform k-partitions in a fixed deterministic order.
std::vector<UniformPartition> enumerate_uniform(int n, int k);

/// Number of uniform k-partitions, n!/((l!)^k k!).
BigInt count_uniform(int n, int k);

/// k x k table of cell intersection sizes, row-major.
struct MeetTable {
  int k = 0;
  std::vector<int> m;  // k*k entries
  int at(int i, int j) const { return m[static_cast<size_t>(i * k + j)]; }
  MeetTable transposed() const;
  bool all_positive() const;
  bool operator==(const MeetTable& o) const { return k == o.k && m == o.m; }
  bool operator!=(const MeetTable& o) const { return !(*this == o); }
  bool operator<(const MeetTable& o) const { return m < o.m; }
  std::string str() const;  // row-major integers, rows separated by ';'
};

MeetTable meet_table(const UniformPartition& p, const UniformPartition& q);

/// Lexicographically least matrix over all row and column permutations.
MeetTable canonical(const MeetTable& t);

/// Fixed-width bitset adjacency matrix.
struct BitMatrix {
  size_t n = 0, words = 0;
  std::vector<uint64_t> bits;

  explicit BitMatrix(size_t n_ = 0)
      : n(n_), words((n_ + 63) / 64), bits(n_ * ((n_ + 63) / 64), 0) {}
  void set(size_t i, size_t j) { bits[i * words + j / 64] |= 1ull << (j % 64); }
  bool get(size_t i, size_t j) const {
    return bits[i * words + j / 64] >> (j % 64) & 1;
  }
  const uint64_t* row(size_t i) const { return bits.data() + i * words; }
  bool symmetric() const;
  long long row_sum(size_t i) const;
};

/// One relation class of the meet-table scheme.
struct SchemeMatrix {
  MeetTable table;        // canonical representative
  BitMatrix adjacency;
};

inline constexpr size_t kDefaultVertexCap = 10'000;

/// One matrix per canonical off-diagonal meet-table class (the diagonal
/// class diag(l) is the identity and is omitted).
std::vector<SchemeMatrix> scheme_matrices(int n, int k,
                                          size_t vertex_cap = kDefaultVertexCap,
                                          Exec mode = Exec::parallel);

/// Exact integer check that all pairs of matrices commute; on failure the
/// witness holds the indices of the first non-commuting pair.
bool commuting_check(const std::vector<SchemeMatrix>& mats,
                     std::pair<size_t, size_t>* witness = nullptr,
                     Exec mode = Exec::parallel);

/// Adjacency of the qualitative-independence graph QI(n,k): all-positive
/// meet table.
BitMatrix qi_graph(int n, int k, size_t vertex_cap = kDefaultVertexCap);

struct CliqueResult {
  int lower = 0;                // size of the best clique found
  int upper = 0;                // certified upper bound
  bool exact = false;           // search ran to completion
  std::vector<int> witness;     // vertex indices of the best clique
  long long nodes = 0;
};

/// Exact branch-and-bound maximum clique with greedy colouring bounds.
CliqueResult max_clique(const BitMatrix& adj, long long node_budget);

/// Maximum clique of QI(n,k) using the vertex-transitive + stabiliser-orbit
/// symmetry reduction at the first two levels. Root branches (one per
/// all-positive meet-table class) run in parallel with an equal budget
/// share each, so the result does not depend on the schedule.
CliqueResult max_clique_qi(int n, int k, long long node_budget,
                           size_t vertex_cap = kDefaultVertexCap,
                           Exec mode = Exec::parallel);

}  // namespace multfree::qi
