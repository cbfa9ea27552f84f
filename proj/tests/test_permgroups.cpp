#include <bit>
#include <set>

#include "doctest.h"
#include "multfree/catalog.hpp"
#include "multfree/characters.hpp"
#include "multfree/constructors.hpp"
#include "multfree/group_spec.hpp"

using namespace multfree;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

PermGroup from_cycles(std::initializer_list<const char*> gens, int degree) {
  std::vector<Perm> g;
  for (const char* s : gens) g.push_back(Perm::parse_cycles(s, degree));
  return PermGroup::generate(std::move(g), degree);
}

// oracle: closure by multiplication, explicit element set
std::set<std::vector<uint8_t>> element_closure(const PermGroup& g) {
  std::set<std::vector<uint8_t>> seen{Perm::identity(g.degree()).images()};
  std::vector<Perm> frontier{Perm::identity(g.degree())};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& s : g.generators()) {
        Perm y = s * x;
        if (seen.insert(y.images()).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_SUITE_BEGIN("permgroups");

TEST_CASE("perm basics") {
  Perm a = Perm::parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(a.str() == "(1,2,3)(4,5)");
  CHECK(a.cycle_type() == P("[3,2,1]"));
  CHECK(a.sign() == -1);
  CHECK((a * a.inverse()).is_identity());
  Perm b = Perm::parse_cycles("(1,2)", 3);
  Perm c = Perm::parse_cycles("(2,3)", 3);
  // (b*c)(x) = b(c(x)): 1->1? c: 1->1, b: 1->2
  CHECK((b * c).str() == "(1,2,3)");
}

TEST_CASE("generate: order and membership") {
  auto trivial = PermGroup::generate({}, 4);
  CHECK(trivial.order() == 1);

  auto s5 = from_cycles({"(1,2)", "(1,2,3,4,5)"}, 5);
  CHECK(s5.order() == 120);
  CHECK(s5.contains(Perm::parse_cycles("(1,3)(2,5,4)", 5)));

  auto c4 = from_cycles({"(1,3,2,4)"}, 4);
  CHECK(c4.order() == 4);
  CHECK(c4.is_transitive());
  CHECK_FALSE(c4.contains(Perm::parse_cycles("(1,2)", 4)));

  // closure oracle on a batch of small groups
  for (const PermGroup& g :
       {from_cycles({"(1,2,3)", "(2,3,4)"}, 4),
        from_cycles({"(1,2)", "(3,4)", "(1,3)(2,4)"}, 4),
        from_cycles({"(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"}, 7)}) {
    auto elems = element_closure(g);
    CHECK(BigInt(elems.size()) == g.order());
    for (const auto& img : elems)
      CHECK(g.contains(Perm(std::vector<uint8_t>(img))));
  }
}

TEST_CASE("census of small groups") {
  auto s3 = symmetric_group(3);
  auto c = s3.census();
  CHECK(c.at(P("[1,1,1]")) == 1);
  CHECK(c.at(P("[2,1]")) == 3);
  CHECK(c.at(P("[3]")) == 2);

  auto a4 = alternating_group(4);
  auto ca = a4.census();
  CHECK(ca.total() == 12);
  for (const Partition& mu : partitions_of(4))
    if (sign_of_class(mu) < 0) CHECK(ca.at(mu) == 0);

  auto c4 = from_cycles({"(1,3,2,4)"}, 4).census();
  CHECK(c4.at(P("[1,1,1,1]")) == 1);
  CHECK(c4.at(P("[2,2]")) == 1);
  CHECK(c4.at(P("[4]")) == 2);
}

TEST_CASE("serial and parallel census agree") {
  for (const char* spec : {"wr(S3,S2)", "wr(S2,S4)", "SD(3)", "prod(S4,A4)"}) {
    PermGroup g = GroupSpec::parse(spec).build(Catalog::instance());
    auto a = g.census(kDefaultCensusCap, Exec::serial);
    auto b = g.census(kDefaultCensusCap, Exec::parallel);
    CHECK(a.counts == b.counts);
  }
}

TEST_CASE("census cap") {
  auto s13 = symmetric_group(13);
  CHECK_THROWS_AS(static_cast<void>(s13.census(1000000)), CensusInfeasible);
}

TEST_CASE("transitivity and primitivity") {
  auto w22 = wreath_product(symmetric_group(2), 3, TopGroup::Sym);
  CHECK(w22.is_transitive());
  CHECK_FALSE(w22.is_primitive());

  const auto& m11 = Catalog::instance().get("M11");
  CHECK(m11.is_transitive());
  CHECK(m11.is_primitive());

  auto intrans = direct_product(symmetric_group(2), symmetric_group(3));
  CHECK_FALSE(intrans.is_transitive());
}

TEST_CASE("orbit counts on k-sets") {
  // any transitive group has one orbit on 1-sets
  for (const char* spec : {"wr(S2,S2)", "named:M12", "SD(4)"}) {
    PermGroup g = GroupSpec::parse(spec).build(Catalog::instance());
    auto c = g.census();
    CHECK(g.orbit_count_on_ksets(c, 1) == 1);
    // complementation symmetry
    for (int k = 0; 2 * k <= g.degree(); ++k)
      CHECK(g.orbit_count_on_ksets(c, k) ==
            g.orbit_count_on_ksets(c, g.degree() - k));
  }

  // S_k x S_{n-k} has k+1 orbits on k-sets (2k <= n)
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}, {4, 8}}) {
    auto g = direct_product(symmetric_group(k), symmetric_group(n - k));
    auto c = g.census();
    CHECK(g.orbit_count_on_ksets(c, k) == k + 1);
  }

  // oracle: direct orbit count of S_2 wr S_2 on 2-subsets of 4 points
  {
    auto g = wreath_product(symmetric_group(2), 2, TopGroup::Sym);
    auto c = g.census();
    CHECK(g.orbit_count_on_ksets(c, 2) == 2);
    // enumerate the six 2-subsets and close under generators
    std::set<std::set<uint32_t>> orbits;
    std::set<uint32_t> seen;
    for (uint32_t m = 0; m < 16; ++m) {
      if (std::popcount(m) != 2 || seen.count(m)) continue;
      std::set<uint32_t> orbit{m};
      std::vector<uint32_t> frontier{m};
      while (!frontier.empty()) {
        uint32_t s = frontier.back();
        frontier.pop_back();
        for (const Perm& p : g.generators()) {
          uint32_t t = 0;
          for (int b = 0; b < 4; ++b)
            if (s >> b & 1) t |= 1u << p(b);
          if (orbit.insert(t).second) frontier.push_back(t);
        }
      }
      for (uint32_t x : orbit) seen.insert(x);
      orbits.insert(orbit);
    }
    CHECK(orbits.size() == 2);
  }
}

TEST_CASE("intersect with alternating group") {
  auto a4 = symmetric_group(4).intersect_alternating();
  CHECK(a4.order() == 12);
  CHECK(a4.in_alternating());

  auto a5 = alternating_group(5);
  auto same = a5.intersect_alternating();
  CHECK(same.order() == a5.order());

  // the even half of S_2 wr S_2 is the Klein four-group
  auto v = wreath_product(symmetric_group(2), 2, TopGroup::Sym)
               .intersect_alternating();
  CHECK(v.order() == 4);
  for (const char* s : {"(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"})
    CHECK(v.contains(Perm::parse_cycles(s, 4)));
}

TEST_CASE("census of even part") {
  for (const char* spec : {"wr(S2,S3)", "prod(S3,S2)", "SD(3)"}) {
    PermGroup g = GroupSpec::parse(spec).build(Catalog::instance());
    if (g.in_alternating()) continue;
    auto full = g.census();
    auto even = g.intersect_alternating().census();
    CHECK(even.total() * 2 == full.total());
    CHECK(even.counts == full.even_part().counts);
  }
}

TEST_CASE("constructors: orders") {
  CHECK(wreath_product(symmetric_group(2), 2, TopGroup::Sym).order() == 8);
  // order of S_l wr S_k = (l!)^k k! for every l*k <= 16
  for (int l = 1; l <= 16; ++l) {
    for (int k = 1; l * k <= 16; ++k) {
      BigInt expect = 1;
      for (int i = 0; i < k; ++i) expect *= factorial(l);
      expect *= factorial(k);
      CHECK(wreath_product(symmetric_group(l), k, TopGroup::Sym).order() ==
            expect);
    }
  }
  CHECK(alt_semidirect(2, 2).order() == 4);
  CHECK(alt_semidirect(2, 2).contains(Perm::parse_cycles("(1,3,2,4)", 4)));
  CHECK(alt_semidirect(3, 2).order() == 36);
  CHECK(alt_semidirect(4, 3).order() == 41472);
  CHECK(sd_group(4).order() == 20736);
  CHECK(rd_group(4).order() == 10368);
  CHECK(sd_group(5).order() == 2592000);
  CHECK(point_extension(symmetric_group(3)).degree() == 4);
}

TEST_CASE("group spec grammar") {
  const Catalog& cat = Catalog::instance();
  auto check_spec = [&](const char* text, int degree, const char* order) {
    GroupSpec s = GroupSpec::parse(text);
    CHECK(s.str() == text);
    PermGroup g = s.build(cat);
    CHECK(g.degree() == degree);
    CHECK(g.order() == BigInt(order));
  };
  check_spec("S5", 5, "120");
  check_spec("A6", 6, "360");
  check_spec("wr(S2,S2)", 4, "8");
  check_spec("wr(S5,A3)", 15, "5184000");
  check_spec("prod(S3,A4)", 7, "72");
  check_spec("alt(wr(S3,S2))", 6, "36");
  check_spec("point(wr(S2,S2))", 5, "8");
  check_spec("sdp2(4)", 8, "576");
  check_spec("sdpk(5)", 10, "1920");
  check_spec("sdpka(4)", 8, "96");
  check_spec("sdp3(3)", 9, "648");
  check_spec("SD(4)", 12, "20736");
  check_spec("RD(4)", 12, "10368");
  check_spec("named:AGL(1,5)", 5, "20");
  check_spec("wr(named:AGL(1,5),S2)", 10, "800");
  check_spec("prod(S2,named:M12)", 14, "190080");
  CHECK_THROWS_AS(GroupSpec::parse("frob(3)"), SpecParseError);
  CHECK_THROWS_AS(GroupSpec::parse("wr(S2,S2) junk"), SpecParseError);
  CHECK_THROWS_AS(static_cast<void>(
                      GroupSpec::parse("named:NoSuchGroup").build(cat)),
                  std::invalid_argument);
}

TEST_CASE("catalog sanity") {
  const Catalog& cat = Catalog::instance();
  struct Row {
    const char* name;
    int degree;
    const char* order;
    bool primitive;
  };
  // expected order, degree, transitivity, primitivity per record
  for (const Row& r : std::vector<Row>{
           {"AGL(1,5)", 5, "20", true},
           {"PSL(2,5)", 6, "60", true},
           {"PGL(2,5)", 6, "120", true},
           {"AGL(1,7)", 7, "42", true},
           {"PSL(3,2)", 7, "168", true},
           {"AGammaL(1,8)", 8, "168", true},
           {"PGL(2,7)", 8, "336", true},
           {"AGL(3,2)", 8, "1344", true},
           {"AGL(2,3)", 9, "432", true},
           {"PGL(2,8)", 9, "504", true},
           {"PGammaL(2,8)", 9, "1512", true},
           {"PSL(2,9)", 10, "360", true},
           {"PGammaL(2,9)", 10, "1440", true},
           {"M11", 11, "7920", true},
           {"M11_12", 12, "7920", true},
           {"M12", 12, "95040", true},
       }) {
    const PermGroup& g = cat.get(r.name);
    CHECK(g.degree() == r.degree);
    CHECK(g.order() == BigInt(r.order));
    CHECK(g.is_transitive());
    CHECK(g.is_primitive() == r.primitive);
  }
}

TEST_CASE("subgroup relations sift correctly") {
  const Catalog& cat = Catalog::instance();
  auto sub = [&](const char* h, const char* g) {
    return GroupSpec::parse(h).build(cat).is_subgroup_of(
        GroupSpec::parse(g).build(cat));
  };
  CHECK(sub("wr(A3,S2)", "wr(S3,S2)"));
  CHECK(sub("alt(wr(S3,S2))", "wr(S3,S2)"));
  CHECK(sub("sdp2(3)", "wr(S3,S2)"));
  CHECK(sub("RD(4)", "SD(4)"));
  CHECK(sub("named:PGL(2,8)", "named:PGammaL(2,8)"));
  CHECK_FALSE(sub("wr(S3,S2)", "alt(wr(S3,S2))"));
}

TEST_SUITE_END();
