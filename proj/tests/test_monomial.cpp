#include <doctest.h>

#include <random>

#include "stanley/errors.hpp"
#include "stanley/ideal.hpp"
#include "stanley/ideal_io.hpp"
#include "test_support.hpp"

using namespace stanley;

namespace {

Monomial mono(int n, std::initializer_list<int> vars) { return Monomial::product(n, vars); }

MonomialIdeal ideal_of(int n, std::initializer_list<std::initializer_list<int>> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.push_back(Monomial::product(n, g));
  return minimalize(ms, n);
}

// (J : x_j) by enumeration: the squarefree m with m * x_j in J, then minimalized.
MonomialIdeal brute_force_colon(const MonomialIdeal& ideal, int j) {
  const int n = ideal.num_vars();
  std::vector<Monomial> members;
  for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
    const Monomial m = Monomial::from_mask(n, s);
    if (ideal.contains(m.times_variable(j))) members.push_back(m);
  }
  return minimalize(members, n);
}

}  // namespace

TEST_CASE("monomial mask view is lossless for squarefree monomials") {
  const Monomial m = mono(5, {1, 3, 5});
  REQUIRE(m.to_mask().has_value());
  CHECK(*m.to_mask() == 0b10101U);
  CHECK(Monomial::from_mask(5, 0b10101U) == m);
  CHECK_FALSE(mono(3, {2, 2}).to_mask().has_value());
  CHECK(mono(3, {2, 2}).to_string() == "x2^2");
  CHECK(Monomial::one(4).to_string() == "1");
}

TEST_CASE("minimalize drops divisible generators") {
  CHECK(ideal_of(3, {{1, 2}, {1, 2, 3}}) == ideal_of(3, {{1, 2}}));
  CHECK(ideal_of(3, {{1, 2}, {2, 3}}).num_generators() == 2);
  // Generators of (J_7 : x_7) before minimalization.
  const auto colon_gens = ideal_of(7, {{1}, {6}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(colon_gens == ideal_of(7, {{1}, {6}, {2, 3}, {3, 4}, {4, 5}}));

  const std::vector<Monomial> mixed = {mono(3, {1}), mono(4, {1})};
  CHECK_THROWS_AS(minimalize(mixed, 3), InputError);
}

TEST_CASE("membership") {
  CHECK(line_ideal(4).contains(mono(4, {1, 2, 4})));
  CHECK_FALSE(line_ideal(4).contains(mono(4, {1, 3})));
  CHECK(cycle_ideal(5).contains(mono(5, {5, 1})));
  CHECK_THROWS_AS(line_ideal(4).contains(mono(5, {1})), InputError);
}

TEST_CASE("colon by a variable") {
  CHECK(colon_by_variable(cycle_ideal(7), 7) == ideal_of(7, {{1}, {6}, {2, 3}, {3, 4}, {4, 5}}));
  CHECK(colon_by_variable(line_ideal(3), 3) == ideal_of(3, {{2}}));
  const auto expected_j6 = ideal_of(6, {{1}, {5}, {2, 3}, {3, 4}});
  CHECK(brute_force_colon(cycle_ideal(6), 6) == expected_j6);
  CHECK(colon_by_variable(cycle_ideal(6), 6) == expected_j6);
  CHECK_THROWS_AS(colon_by_variable(line_ideal(3), 4), InputError);
}

TEST_CASE("adding a variable") {
  CHECK(add_variable(cycle_ideal(7), 7) == ideal_of(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {7}}));
  CHECK(add_variable(ideal_of(3, {{1}}), 1) == ideal_of(3, {{1}}));
  CHECK(add_variable(line_ideal(4), 2) == ideal_of(4, {{2}, {3, 4}}));
}

TEST_CASE("unit and zero ideals are closed under the operations") {
  const auto unit = MonomialIdeal::unit(4);
  CHECK(unit.is_unit());
  CHECK(colon_by_variable(unit, 2) == unit);
  CHECK(add_variable(unit, 3) == unit);
  const auto zero = MonomialIdeal::zero(4);
  CHECK(zero.is_zero());
  CHECK(colon_by_variable(zero, 1) == zero);
  CHECK(add_variable(zero, 1) == ideal_of(4, {{1}}));
  // 1 absorbs every other generator.
  const std::vector<Monomial> with_one = {mono(3, {1, 2}), Monomial::one(3)};
  CHECK(minimalize(with_one, 3).is_unit());
}

TEST_CASE("family constructors") {
  CHECK(line_ideal(3) == ideal_of(3, {{1, 2}, {2, 3}}));
  CHECK(line_ideal(2).num_generators() == 1);
  CHECK(line_ideal(7).num_generators() == 6);
  CHECK(cycle_ideal(3) == ideal_of(3, {{1, 2}, {2, 3}, {3, 1}}));
  CHECK(cycle_ideal(5).num_generators() == 5);
  CHECK(cycle_ideal(4).contains(mono(4, {4, 1})));
  CHECK(veronese_ideal(3, 2) == ideal_of(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(veronese_ideal(4, 4) == ideal_of(4, {{1, 2, 3, 4}}));
  CHECK(veronese_ideal(5, 3).num_generators() == 10);
  CHECK_THROWS_AS(line_ideal(1), InputError);
  CHECK_THROWS_AS(cycle_ideal(2), InputError);
  CHECK_THROWS_AS(veronese_ideal(3, 4), InputError);
  CHECK_THROWS_AS(veronese_ideal(3, 0), InputError);

  for (int n = 3; n <= 12; ++n) {
    CHECK(line_ideal(n).num_generators() == static_cast<std::size_t>(n - 1));
    CHECK(cycle_ideal(n).num_generators() == static_cast<std::size_t>(n));
    const auto cycle = cycle_ideal(n);
    for (const auto& g : cycle.generators()) {
      CHECK(g.is_squarefree());
      CHECK(g.degree() == 2);
    }
  }
}

TEST_CASE("colon and sum identities for cycles, 4 <= n <= 12") {
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    std::vector<Monomial> colon = {mono(n, {1}), mono(n, {n - 1})};
    for (int i = 2; i <= n - 3; ++i) colon.push_back(mono(n, {i, i + 1}));
    CHECK(colon_by_variable(cycle_ideal(n), n) == minimalize(colon, n));

    std::vector<Monomial> sum = {mono(n, {n})};
    for (int i = 1; i <= n - 2; ++i) sum.push_back(mono(n, {i, i + 1}));
    CHECK(add_variable(cycle_ideal(n), n) == minimalize(sum, n));
  }
}

TEST_CASE("generator split") {
  for (int n = 3; n <= 10; ++n) {
    const auto split = generator_split(cycle_ideal(n), line_ideal(n));
    CHECK(split.common_count == static_cast<std::size_t>(n - 1));
    REQUIRE(split.extra.size() == 1);
    CHECK(split.extra.front() == mono(n, {n, 1}));
  }
  const auto same = generator_split(line_ideal(5), line_ideal(5));
  CHECK(same.common_count == 4);
  CHECK(same.extra.empty());

  const auto j = ideal_of(3, {{1}, {2, 3}});
  const auto i = ideal_of(3, {{1, 2}, {2, 3}});
  const auto split = generator_split(j, i);
  CHECK(split.common_count == 1);
  CHECK(split.extra == std::vector<Monomial>{mono(3, {1})});
  // Common generators of J are generators of I.
  for (const auto& g : split.common) {
    CHECK(std::find(i.generators().begin(), i.generators().end(), g) != i.generators().end());
  }
  CHECK_THROWS_AS(generator_split(i, j), InputError);
}

TEST_CASE("membership is stable under minimalization") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    std::uniform_int_distribution<SubsetMask> mask(0, (SubsetMask{1} << n) - 1);
    std::vector<Monomial> raw;
    for (int i = 0; i < 6; ++i) raw.push_back(Monomial::from_mask(n, mask(rng)));
    const auto ideal = minimalize(raw, n);
    for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
      const Monomial m = Monomial::from_mask(n, s);
      const bool by_raw = std::any_of(raw.begin(), raw.end(), [&](const Monomial& g) { return g.divides(m); });
      CHECK(ideal.contains(m) == by_raw);
    }
  }
}

TEST_CASE("ideal text format") {
  const auto ideal = parse_ideal("# the 3-cycle\nring 3\n\ngen x1*x2\n  gen   x2 * x3  # edge\ngen x3*x1\n");
  CHECK(ideal == cycle_ideal(3));
  CHECK(parse_ideal(format_ideal(cycle_ideal(7))) == cycle_ideal(7));

  const auto powers = parse_ideal("ring 5\ngen x3^2*x5\n");
  CHECK(powers.generators().front().exponent(3) == 2);
  CHECK(format_ideal(powers) == "ring 5\ngen x3^2*x5\n");
  CHECK(parse_ideal("ring 2\ngen 1\n").is_unit());
  CHECK(parse_ideal("ring 2\n").is_zero());

  CHECK_THROWS_AS(parse_ideal("gen x1\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("ring 2\ngen x3\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("ring 2\ngen y1\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("ring 2\ngen x1^\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("ring 2\nring 3\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("ring two\n"), InputError);
  CHECK_THROWS_AS(parse_ideal("ring 2\nfoo x1\n"), InputError);
}
