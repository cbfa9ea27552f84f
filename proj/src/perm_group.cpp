#include "multfree/perm_group.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>

namespace multfree {

namespace {
inline bool class_is_odd(const Partition& mu) {
  return (mu.n() - mu.rows()) % 2 != 0;
}
}  // namespace

long long CycleTypeCensus::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0ll);
}

long long CycleTypeCensus::at(const Partition& type) const {
  auto classes = partitions_of(degree);
  auto it = std::lower_bound(classes.begin(), classes.end(), type,
                             PartitionRevLexLess{});
  if (it == classes.end() || !(*it == type))
    throw std::invalid_argument("type of wrong degree");
  return counts[static_cast<size_t>(it - classes.begin())];
}

CycleTypeCensus CycleTypeCensus::even_part() const {
  CycleTypeCensus out{degree, counts};
  auto classes = partitions_of(degree);
  for (size_t i = 0; i < classes.size(); ++i)
    if (class_is_odd(classes[i])) out.counts[i] = 0;
  return out;
}

// ---------------------------------------------------------------------------
// Schreier-Sims

void PermGroup::rebuild_level(size_t i) {
  Level& lv = levels_[i];
  lv.orbit.clear();
  lv.orbit_pos.assign(static_cast<size_t>(degree_), -1);
  lv.transversal.assign(static_cast<size_t>(degree_), Perm());
  lv.orbit.push_back(lv.base_point);
  lv.orbit_pos[static_cast<size_t>(lv.base_point)] = 0;
  lv.transversal[static_cast<size_t>(lv.base_point)] = Perm::identity(degree_);
  for (size_t head = 0; head < lv.orbit.size(); ++head) {
    int p = lv.orbit[head];
    for (const Perm& g : lv.gens) {
      int q = g(p);
      if (lv.orbit_pos[static_cast<size_t>(q)] < 0) {
        lv.orbit_pos[static_cast<size_t>(q)] =
            static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal[static_cast<size_t>(q)] =
            g * lv.transversal[static_cast<size_t>(p)];
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::sift(Perm g, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    int x = g(levels_[i].base_point);
    if (levels_[i].orbit_pos[static_cast<size_t>(x)] < 0) return {g, i};
    g = levels_[i].transversal[static_cast<size_t>(x)].inverse() * g;
  }
  return {g, levels_.size()};
}

void PermGroup::schreier_sims() {
  auto new_base_point = [&](const Perm& g) {
    for (int p = 0; p < degree_; ++p)
      if (g(p) != p) return p;
    throw std::logic_error("identity has no base point");
  };

  levels_.clear();
  for (const Perm& g : gens_) {
    size_t lvl = 0;
    while (true) {
      if (lvl == levels_.size()) {
        levels_.push_back(Level{});
        levels_.back().base_point = new_base_point(g);
      }
      levels_[lvl].gens.push_back(g);
      if (g(levels_[lvl].base_point) != levels_[lvl].base_point) break;
      ++lvl;
    }
  }
  for (size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  // verify Schreier generators sift to identity; insert dropouts and re-run
  size_t i = levels_.size();
  while (i > 0) {
    --i;
    bool restart = false;
    Level& lv = levels_[i];
    for (size_t oi = 0; oi < lv.orbit.size() && !restart; ++oi) {
      int p = lv.orbit[oi];
      const Perm& u_p = lv.transversal[static_cast<size_t>(p)];
      for (size_t si = 0; si < lv.gens.size(); ++si) {
        const Perm& s = lv.gens[si];
        const Perm& u_sp = lv.transversal[static_cast<size_t>(s(p))];
        Perm schreier = u_sp.inverse() * (s * u_p);
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), i + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          levels_.push_back(Level{});
          levels_.back().base_point = new_base_point(h);
        }
        for (size_t t = i + 1; t <= j; ++t) {
          levels_[t].gens.push_back(h);
          rebuild_level(t);
        }
        i = j + 1;
        restart = true;
        break;
      }
    }
  }

  order_ = 1;
  for (const Level& lv : levels_)
    order_ *= static_cast<long long>(lv.orbit.size());
}

PermGroup PermGroup::generate(std::vector<Perm> gens, int degree) {
  PermGroup G;
  G.degree_ = degree;
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) G.gens_.push_back(std::move(g));
  }
  G.schreier_sims();
  return G;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, lvl] = sift(g, 0);
  (void)lvl;
  return h.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& super) const {
  for (const Perm& g : gens_)
    if (!super.contains(g)) return false;
  return true;
}

bool PermGroup::in_alternating() const {
  for (const Perm& g : gens_)
    if (g.sign() < 0) return false;
  return true;
}

std::vector<std::vector<int>> PermGroup::point_orbits() const {
  std::vector<int> root(static_cast<size_t>(degree_), -1);
  std::vector<std::vector<int>> orbits;
  for (int s = 0; s < degree_; ++s) {
    if (root[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> orbit{s};
    root[static_cast<size_t>(s)] = s;
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& g : gens_) {
        int q = g(orbit[head]);
        if (root[static_cast<size_t>(q)] < 0) {
          root[static_cast<size_t>(q)] = s;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && point_orbits().size() == 1;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) return false;
  if (degree_ <= 2) return true;
  // block-seed closure: the minimal congruence containing {0,w} must be
  // trivial for every w
  for (int w = 1; w < degree_; ++w) {
    std::vector<int> parent(static_cast<size_t>(degree_));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    std::vector<std::pair<int, int>> queue;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return;
      parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
      queue.emplace_back(a, b);
    };
    unite(0, w);
    for (size_t head = 0; head < queue.size(); ++head) {
      auto [a, b] = queue[head];
      for (const Perm& g : gens_) unite(g(a), g(b));
    }
    int blocks = 0;
    for (int x = 0; x < degree_; ++x)
      if (find(x) == x) ++blocks;
    if (blocks > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// census

namespace {

// Open-addressed accumulator keyed by the packed descending cycle-length
// string; sized for p(32) live keys.
struct TypeAccumulator {
  static constexpr size_t kSlots = 16384;
  struct Slot {
    uint64_t key[3] = {0, 0, 0};
    long long count = 0;
    bool used = false;
  };
  std::vector<Slot> slots{kSlots};

  static uint64_t mix(uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
  }

  void add(const uint64_t key[3], long long c) {
    uint64_t h = mix(key[0] ^ mix(key[1] ^ mix(key[2])));
    size_t i = h & (kSlots - 1);
    while (true) {
      Slot& s = slots[i];
      if (!s.used) {
        s.used = true;
        std::memcpy(s.key, key, sizeof(s.key));
        s.count = c;
        return;
      }
      if (s.key[0] == key[0] && s.key[1] == key[1] && s.key[2] == key[2]) {
        s.count += c;
        return;
      }
      i = (i + 1) & (kSlots - 1);
    }
  }

  void merge_into(TypeAccumulator& other) const {
    for (const Slot& s : slots)
      if (s.used) other.add(s.key, s.count);
  }
};

inline void cycle_type_key(const uint8_t* img, int n, uint64_t key[3]) {
  uint8_t lens[24] = {0};
  int nl = 0;
  uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen & (1u << i)) continue;
    int len = 0, j = i;
    while (!(seen & (1u << j))) {
      seen |= 1u << j;
      j = img[j];
      ++len;
    }
    int k = nl++;
    while (k > 0 && lens[k - 1] < len) {
      lens[k] = lens[k - 1];
      --k;
    }
    lens[k] = static_cast<uint8_t>(len);
  }
  std::memcpy(key, lens, 24);
}

// Allocation-free DFS over transversal products. buf[lvl] holds the image
// array of the prefix u_0 ... u_{lvl}.
struct Enumerator {
  const std::vector<std::vector<Perm>>* levels = nullptr;
  int degree = 0;
  TypeAccumulator* acc = nullptr;
  std::array<std::array<uint8_t, 32>, 40> buf{};

  void run(size_t lvl, const uint8_t* img) {
    if (lvl == levels->size()) {
      uint64_t key[3];
      cycle_type_key(img, degree, key);
      acc->add(key, 1);
      return;
    }
    uint8_t* out = buf[lvl].data();
    for (const Perm& u : (*levels)[lvl]) {
      const uint8_t* ui = u.images().data();
      for (int i = 0; i < degree; ++i) out[i] = img[ui[i]];
      run(lvl + 1, out);
    }
  }
};

}  // namespace

CycleTypeCensus PermGroup::census(long long cap, Exec mode) const {
  if (degree_ > 32) throw CensusInfeasible("census supports degree <= 32");
  if (order_ > cap)
    throw CensusInfeasible("census infeasible; use closed form (order " +
                           order_.str() + " exceeds cap " +
                           std::to_string(cap) + ")");

  std::vector<std::vector<Perm>> levels;
  for (const Level& lv : levels_) {
    if (lv.orbit.size() < 2) continue;
    std::vector<Perm> t;
    t.reserve(lv.orbit.size());
    for (int p : lv.orbit) t.push_back(lv.transversal[static_cast<size_t>(p)]);
    levels.push_back(std::move(t));
  }

  Perm id = Perm::identity(degree_);
  TypeAccumulator acc;
  if (mode == Exec::serial || levels.size() <= 1) {
    Enumerator en;
    en.levels = &levels;
    en.degree = degree_;
    en.acc = &acc;
    en.run(0, id.images().data());
  } else {
    std::vector<Perm> prefixes{id};
    size_t consumed = 0;
    size_t want =
        static_cast<size_t>(std::max(64, 16 * omp_get_max_threads()));
    while (consumed < levels.size() - 1 && prefixes.size() < want) {
      std::vector<Perm> next;
      next.reserve(prefixes.size() * levels[consumed].size());
      for (const Perm& p : prefixes)
        for (const Perm& u : levels[consumed]) next.push_back(p * u);
      prefixes = std::move(next);
      ++consumed;
    }
    int nthreads = omp_get_max_threads();
    std::vector<TypeAccumulator> partial(static_cast<size_t>(nthreads));
    std::vector<Enumerator> workers(static_cast<size_t>(nthreads));
#pragma omp parallel for schedule(dynamic)
    for (size_t t = 0; t < prefixes.size(); ++t) {
      int tid = omp_get_thread_num();
      Enumerator& en = workers[static_cast<size_t>(tid)];
      en.levels = &levels;
      en.degree = degree_;
      en.acc = &partial[static_cast<size_t>(tid)];
      en.run(consumed, prefixes[t].images().data());
    }
    for (const auto& p : partial) p.merge_into(acc);
  }

  auto classes = partitions_of(degree_);
  CycleTypeCensus out;
  out.degree = degree_;
  out.counts.assign(classes.size(), 0);
  std::map<std::vector<uint8_t>, size_t> index;
  for (size_t i = 0; i < classes.size(); ++i) {
    std::vector<uint8_t> k(24, 0);
    for (size_t j = 0; j < classes[i].parts().size(); ++j)
      k[j] = static_cast<uint8_t>(classes[i].parts()[j]);
    index.emplace(std::move(k), i);
  }
  for (const auto& slot : acc.slots) {
    if (!slot.used) continue;
    std::vector<uint8_t> k(24);
    std::memcpy(k.data(), slot.key, 24);
    out.counts[index.at(k)] += slot.count;
  }
  if (BigInt(out.total()) != order_)
    throw std::logic_error("census total does not match group order");
  return out;
}

PermGroup PermGroup::intersect_alternating() const {
  if (in_alternating()) return *this;
  const Perm* odd = nullptr;
  for (const Perm& g : gens_)
    if (g.sign() < 0) {
      odd = &g;
      break;
    }
  // Reidemeister-Schreier generators for the even kernel with transversal
  // {e, t}: {g, t g t^-1} for even g, {g t^-1, t g} for odd g
  const Perm& t = *odd;
  Perm tinv = t.inverse();
  std::vector<Perm> gens;
  for (const Perm& g : gens_) {
    if (g.sign() > 0) {
      gens.push_back(g);
      gens.push_back(t * (g * tinv));
    } else {
      gens.push_back(g * tinv);
      gens.push_back(t * g);
    }
  }
  PermGroup H = generate(std::move(gens), degree_);
  if (H.order() * 2 != order_)
    throw std::logic_error("alternating intersection has wrong order");
  return H;
}

long long PermGroup::orbit_count_on_ksets(const CycleTypeCensus& census,
                                          int k) const {
  if (k < 0 || k > degree_) throw std::invalid_argument("k out of range");
  auto classes = partitions_of(degree_);
  __int128 sum = 0;
  for (size_t c = 0; c < classes.size(); ++c) {
    if (census.counts[c] == 0) continue;
    // k-subsets fixed by this class: coefficient of x^k in
    // prod over cycle lengths (1 + x^len)
    std::vector<long long> coeff(static_cast<size_t>(k) + 1, 0);
    coeff[0] = 1;
    for (int len : classes[c].parts())
      for (int d = k; d >= len; --d)
        coeff[static_cast<size_t>(d)] += coeff[static_cast<size_t>(d - len)];
    sum += static_cast<__int128>(census.counts[c]) *
           coeff[static_cast<size_t>(k)];
  }
  long long order_ll = census.total();
  if (sum % order_ll != 0) throw std::logic_error("non-integral orbit count");
  return static_cast<long long>(sum / order_ll);
}

}  // namespace multfree
