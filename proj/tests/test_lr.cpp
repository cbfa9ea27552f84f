#include <map>

#include "doctest.h"
#include "multfree/characters.hpp"
#include "multfree/lr.hpp"

using namespace multfree;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

MultiplicityVector mv_of(int n, std::initializer_list<const char*> parts) {
  MultiplicityVector mv(n);
  for (const char* s : parts) mv.add(P(s), 1);
  return mv;
}

// character-theoretic oracle, independent of the tableau enumeration:
// N^lambda_{mu,nu} = sum over class pairs (alpha,beta) of
//   chi^mu(alpha) chi^nu(beta) chi^lambda(alpha cup beta) / (z_alpha z_beta)
long long lr_via_characters(const Partition& mu, const Partition& nu,
                            const Partition& lambda) {
  if (mu.n() + nu.n() != lambda.n()) return 0;
  BigRat total = 0;
  for (const Partition& alpha : partitions_of(mu.n())) {
    for (const Partition& beta : partitions_of(nu.n())) {
      std::vector<int> joined(alpha.parts());
      joined.insert(joined.end(), beta.parts().begin(), beta.parts().end());
      std::sort(joined.begin(), joined.end(), std::greater<int>());
      Partition gamma(joined);
      BigInt num = BigInt(character_value(mu, alpha)) *
                   character_value(nu, beta) *
                   character_value(lambda, gamma);
      total += BigRat(num, centraliser_order(alpha) * centraliser_order(beta));
    }
  }
  CHECK(boost::multiprecision::denominator(total) == 1);
  return static_cast<long long>(boost::multiprecision::numerator(total));
}

}  // namespace

TEST_SUITE_BEGIN("lr");

TEST_CASE("worked example: [2,1]-expansions of [3]") {
  auto exp = strict_expansions(P("[3]"), P("[2,1]"));
  REQUIRE(exp.size() == 4);
  CHECK(exp.at(P("[5,1]")) == 1);
  CHECK(exp.at(P("[4,2]")) == 1);
  CHECK(exp.at(P("[4,1,1]")) == 1);
  CHECK(exp.at(P("[3,2,1]")) == 1);
  // eight expansions in total, of which four fail the lattice condition
  CHECK(count_all_expansions(P("[3]"), P("[2,1]")) == 8);
}

TEST_CASE("one-row expansions") {
  // [n-k]-expansions of [k] are the two-row partitions [n-i,i]
  for (int n : {5, 7, 8}) {
    for (int k = 0; 2 * k <= n; ++k) {
      Partition mu = k == 0 ? Partition() : Partition(std::vector<int>{k});
      auto exp = strict_expansions(mu, Partition(std::vector<int>{n - k}));
      REQUIRE(static_cast<int>(exp.size()) == std::min(k, n - k) + 1);
      for (const auto& [lam, c] : exp) {
        CHECK(c == 1);
        CHECK(lam.rows() <= 2);
      }
    }
  }
}

TEST_CASE("expanding the empty diagram") {
  auto exp = strict_expansions(P("[]"), P("[3,2]"));
  REQUIRE(exp.size() == 1);
  CHECK(exp.at(P("[3,2]")) == 1);
}

TEST_CASE("lr_coefficient examples") {
  CHECK(lr_coefficient(P("[3]"), P("[2,1]"), P("[4,2]")) == 1);
  CHECK(lr_coefficient(P("[3]"), P("[2,1]"), P("[6]")) == 0);
  CHECK(lr_coefficient(P("[3]"), P("[2,1]"), P("[3,3]")) == 0);
  // derived by brute-force enumeration and by the character oracle
  CHECK(lr_coefficient(P("[2,1]"), P("[2,1]"), P("[3,2,1]")) == 2);
  CHECK(lr_via_characters(P("[2,1]"), P("[2,1]"), P("[3,2,1]")) == 2);
}

TEST_CASE("lr symmetry and character-oracle agreement, |lambda| <= 12") {
  for (int n = 2; n <= 12; ++n) {
    for (int a = 1; 2 * a <= n; ++a) {
      int b = n - a;
      for (const Partition& mu : partitions_of(a)) {
        for (const Partition& nu : partitions_of(b)) {
          auto ab = strict_expansions(mu, nu);
          auto ba = strict_expansions(nu, mu);
          CHECK(ab == ba);
        }
      }
    }
  }
  // spot-check the enumeration against the character route on n = 8
  for (const Partition& mu : partitions_of(3)) {
    for (const Partition& nu : partitions_of(5)) {
      auto exp = strict_expansions(mu, nu);
      for (const Partition& lam : partitions_of(8)) {
        auto it = exp.find(lam);
        long long via_tableaux = it == exp.end() ? 0 : it->second;
        CHECK(via_tableaux == lr_via_characters(mu, nu, lam));
      }
    }
  }
}

TEST_CASE("degree consistency of induction") {
  // sum over lambda of N^lambda_{mu,nu} dim(lambda)
  //   = binom(n, |mu|) dim(mu) dim(nu)
  for (auto [mu_s, nu_s] : std::vector<std::pair<const char*, const char*>>{
           {"[2,1]", "[3,2]"}, {"[4]", "[2,2]"}, {"[1,1]", "[5,1]"}}) {
    Partition mu = P(mu_s), nu = P(nu_s);
    int n = mu.n() + nu.n();
    BigInt lhs = 0;
    for (const auto& [lam, c] : strict_expansions(mu, nu))
      lhs += BigInt(c) * dimension(lam);
    BigInt binom = factorial(n) / (factorial(mu.n()) * factorial(nu.n()));
    CHECK(lhs == binom * dimension(mu) * dimension(nu));
  }
}

TEST_CASE("outer product") {
  // [k] o [n-k] = sum of [n-i,i]
  auto prod = outer_product(mv_of(2, {"[2]"}), mv_of(3, {"[3]"}));
  CHECK(prod == mv_of(5, {"[5]", "[4,1]", "[3,2]"}));

  // one-box product: all addable corners of [7,2]
  auto prod2 = outer_product(mv_of(9, {"[7,2]"}), mv_of(1, {"[1]"}));
  CHECK(prod2 == mv_of(10, {"[8,2]", "[7,3]", "[7,2,1]"}));
  CHECK(prod2.at(P("[8,2]")) == 1);
  CHECK(prod2.at(P("[7,3]")) == 1);

  // bilinearity with the zero vector
  auto zero = outer_product(mv_of(4, {"[2,2]"}), MultiplicityVector(0));
  CHECK(zero.empty());
}

TEST_SUITE_END();
