#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tropic/hurwitz.hpp"

using namespace tropic;
using namespace tropic::hurwitz;

namespace {

Partition P(std::vector<std::int64_t> parts) { return Partition::of(std::move(parts)); }

Query Q(std::int64_t d, std::int64_t g, std::int64_t gp, std::vector<Partition> profiles = {}) {
  return Query{d, g, gp, std::move(profiles)};
}

}  // namespace

TEST_CASE("compute_R on the degree-4 star profiles") {
  CHECK(compute_R(Q(4, 0, 0, {P({2, 2}), P({2, 2}), P({3, 1})})) == 0);
}

TEST_CASE("compute_R for degree-2 covers of the line") {
  for (std::int64_t g = 0; g <= 3; ++g) CHECK(compute_R(Q(2, 0, g)) == 2 * g + 2);
}

TEST_CASE("compute_R vanishes for the identity-degree query") {
  for (std::int64_t g = 0; g <= 2; ++g) CHECK(compute_R(Q(1, g, g)) == 0);
}

TEST_CASE("R and the profile deficiency always have equal parity") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t d = 1 + rng() % 5;
    std::vector<Partition> profiles;
    int s = rng() % 3;
    for (int i = 0; i < s; ++i) {
      std::vector<std::int64_t> parts;
      std::int64_t left = d;
      while (left > 0) {
        std::int64_t p = 1 + rng() % left;
        parts.push_back(p);
        left -= p;
      }
      profiles.push_back(P(parts));
    }
    Query q{d, (std::int64_t)(rng() % 3), (std::int64_t)(rng() % 4), profiles};
    std::int64_t deficiency = 0;
    for (auto& mu : q.profiles) deficiency += d - mu.length();
    CHECK((compute_R(q) - deficiency) % 2 == 0);
  }
}

TEST_CASE("degree-2 Hurwitz numbers are 1/2") {
  for (std::int64_t g = 0; g <= 2; ++g) {
    auto res = hurwitz_number(Q(2, 0, g));
    CHECK(res.value == Rational(1, 2));
    CHECK(res.raw_count == 1);
  }
}

TEST_CASE("the degree-4 obstruction: H((2,2),(2,2),(3,1)) = 0") {
  auto res = hurwitz_number(Q(4, 0, 0, {P({2, 2}), P({2, 2}), P({3, 1})}));
  CHECK(res.raw_count == 0);
  CHECK(res.value == Rational(0));
}

TEST_CASE("H^6((4,2),(2,2,2),(4,1,1)) = 0") {
  auto res = hurwitz_number(Q(6, 0, 0, {P({4, 2}), P({2, 2, 2}), P({4, 1, 1})}));
  CHECK(res.raw_count == 0);
}

TEST_CASE("cyclic covers: H^d((d),(d)) = 1/d, count (d-1)!") {
  // independent check: the tuples must be exactly (c, c^{-1}) for a
  // d-cycle c, so the raw count equals the number of d-cycles
  for (std::int64_t d = 2; d <= 6; ++d) {
    auto res = hurwitz_number(Q(d, 0, 0, {P({d}), P({d})}));
    CHECK(res.raw_count == factorial(d - 1));
    CHECK(res.value == Rational(1, d));
  }
}

TEST_CASE("witness tuples multiply to the identity and have the right types") {
  auto res = hurwitz_number(Q(4, 0, 1, {P({2, 2}), P({2, 2}), P({3, 1})}));
  REQUIRE(res.raw_count > 0);
  REQUIRE(res.witness.size() == res.witness_roles.size());
  std::vector<int> prod(4);
  std::iota(prod.begin(), prod.end(), 0);
  for (auto& f : res.witness) {
    std::vector<int> next(4);
    for (int i = 0; i < 4; ++i) next[i] = f[prod[i]];
    prod = next;
  }
  for (int i = 0; i < 4; ++i) CHECK(prod[i] == i);
}

TEST_CASE("parity vanishing: an odd transposition count gives zero") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t d = 2 + rng() % 3;
    std::vector<Partition> profiles;
    if (rng() % 2) profiles.push_back(P({d}));
    Query q{d, 0, (std::int64_t)(rng() % 2), profiles};
    std::int64_t R = compute_R(q);
    if (R < 0) continue;
    // full enumeration with the parity shortcut disabled must still be 0
    auto res = count_tuples(q, R + 1, Budget{}, /*parity_shortcut=*/false);
    CHECK(res.raw_count == 0);
  }
}

TEST_CASE("value is invariant under profile permutations") {
  std::vector<Partition> ps{P({2, 2}), P({3, 1}), P({2, 1, 1})};
  std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
    return a.parts < b.parts;
  });
  std::vector<Rational> values;
  do {
    values.push_back(hurwitz_number(Q(4, 0, 1, ps)).value);
  } while (std::next_permutation(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) {
    return a.parts < b.parts;
  }));
  for (auto& v : values) CHECK(v == values.front());
}

TEST_CASE("degree at most three: positive whenever R is in range") {
  // a slice of the full acceptance sweep
  for (std::int64_t d = 1; d <= 3; ++d) {
    std::vector<std::vector<std::int64_t>> parts_of;
    if (d == 1) parts_of = {{1}};
    if (d == 2) parts_of = {{2}, {1, 1}};
    if (d == 3) parts_of = {{3}, {2, 1}, {1, 1, 1}};
    for (auto& mu1 : parts_of)
      for (auto& mu2 : parts_of) {
        Query q{d, 0, 0, {P(mu1), P(mu2)}};
        std::int64_t R = compute_R(q);
        if (R < 0 || R > 4) continue;
        CHECK(hurwitz_number(q).raw_count > 0);
      }
  }
}

TEST_CASE("profile_set_nonempty shortcuts and characteristic handling") {
  // trivial profiles
  CHECK(profile_set_nonempty(Q(3, 1, 1, {P({1, 1, 1})}), 2) == Ternary::yes);
  // the z -> z^d family in any characteristic prime to d
  CHECK(profile_set_nonempty(Q(4, 0, 0, {P({4}), P({4})}), 3) == Ternary::yes);
  // char 0 falls back to the Hurwitz number
  CHECK(profile_set_nonempty(Q(4, 0, 0, {P({2, 2}), P({2, 2}), P({3, 1})}), 0) == Ternary::no);
  // large characteristic behaves like characteristic zero
  CHECK(profile_set_nonempty(Q(4, 0, 0, {P({2, 2}), P({2, 2}), P({3, 1})}), 5) == Ternary::no);
  // small characteristic without a shortcut: unknown (tame profiles)
  CHECK(profile_set_nonempty(Q(3, 0, 1, {P({3}), P({3})}), 2) == Ternary::unknown);
  // wild profiles are out of scope
  CHECK_THROWS_WITH_AS(profile_set_nonempty(Q(4, 0, 0, {P({2, 2}), P({2, 2})}), 2),
                       doctest::Contains("wild"), domain_error);
}

TEST_CASE("minimal source genus for the star profiles") {
  auto res = minimal_source_genus(4, 0, {P({2, 2}), P({2, 2}), P({3, 1})}, 0);
  CHECK(res.upper_bound == 7);  // 1 + (2 + 2 + 2)
  CHECK(res.gprime >= 1);       // genus zero is obstructed
  CHECK(res.witness.raw_count > 0);
  // the found genus is minimal: everything below has H = 0
  for (std::int64_t gp = 0; gp < res.gprime; ++gp) {
    Query q{4, 0, gp, {P({2, 2}), P({2, 2}), P({3, 1})}};
    if (compute_R(q) < 0) continue;
    CHECK(hurwitz_number(q).raw_count == 0);
  }
}

TEST_CASE("minimal source genus with trivial profiles is forced by R") {
  auto res = minimal_source_genus(3, 0, {}, 0);
  CHECK(res.gprime == 0);
}

TEST_CASE("pad_profiles returns d when the set is already nonempty") {
  auto res = pad_profiles(2, 1, {P({2}), P({2})}, 0);
  CHECK(res.dprime == 2);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->raw_count > 0);
}

TEST_CASE("pad_profiles cyclic shortcut for a single full cycle") {
  auto res = pad_profiles(5, 3, {P({5})}, 0);
  CHECK(res.dprime == 5);
  CHECK(res.cyclic_shortcut);
}

TEST_CASE("pad_profiles grows the degree past an obstruction") {
  // the degree-4 star profiles become realizable after padding
  auto res = pad_profiles(4, 0, {P({2, 2}), P({2, 2}), P({3, 1})}, 0);
  CHECK(res.dprime > 4);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->raw_count > 0);
}

TEST_CASE("budgets turn into resource errors, not approximations") {
  Budget tight;
  tight.max_nodes = 10;
  CHECK_THROWS_AS(hurwitz_number(Q(5, 0, 3, {P({3, 2}), P({2, 2, 1})}), tight), resource_error);
  Budget degree_cap;
  degree_cap.max_degree = 4;
  CHECK_THROWS_AS(hurwitz_number(Q(5, 0, 0, {P({5}), P({5})}), degree_cap), resource_error);
  CHECK_THROWS_AS(hurwitz_number(Q(2, 0, 10)), resource_error);  // factor cap
}

TEST_CASE("negative R is a domain error") {
  CHECK_THROWS_WITH_AS(hurwitz_number(Q(3, 2, 0)), doctest::Contains("undefined"), domain_error);
}
