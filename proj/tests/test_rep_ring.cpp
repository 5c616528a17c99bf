#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qf/errors.hpp"
#include "qf/perm_group.hpp"
#include "qf/rep_ring.hpp"
#include "support.hpp"

using namespace qf;
using qt::cyc;

TEST_CASE("representation validation") {
  const auto c2 = qt::cyclic_table(2);
  CHECK_NOTHROW(qt::make_rep(c2, {1, 1}));
  CHECK_THROWS_AS(qt::make_rep(c2, {1}), Error);       // wrong length
  CHECK_THROWS_AS(qt::make_rep(c2, {2, -1}), Error);   // negative multiplicity
  CHECK_THROWS_AS(qt::make_rep(c2, {0, 0}), Error);    // dimension zero
  CHECK(qt::make_rep(c2, {2, 3}).dimension() == 5);
  const auto s3 = qt::table_of(PermGroup::symmetric(3));
  CHECK(qt::make_rep(s3, {1, 0, 2}).dimension() == 5);
}

TEST_CASE("decomposition of class functions") {
  const auto c2 = qt::cyclic_table(2);
  SUBCASE("integral values decompose") {
    const Decomposition d = from_class_function({c2, {cyc("1"), cyc("3")}});
    REQUIRE(d.character.has_value());
    CHECK(d.character->coords == std::vector<Int>{2, -1});
    CHECK(d.first_bad_index == -1);
  }
  SUBCASE("non-virtual data is rejected with the witness inner product") {
    const Decomposition d = from_class_function({c2, {cyc("1"), cyc("1/3")}});
    CHECK(!d.character.has_value());
    CHECK(d.first_bad_index == 0);
    CHECK(d.first_bad_value == cyc("2/3"));
  }
  SUBCASE("round trip on random coordinates") {
    qt::Rng rng(20240611);
    for (const PermGroup& group :
         {PermGroup::cyclic(3), PermGroup::symmetric(3), PermGroup::dihedral(4)}) {
      const auto table = qt::table_of(group);
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<Int> coords;
        for (int i = 0; i < table->num_classes; ++i) coords.push_back(rng.range(-5, 5));
        const VirtualCharacter v = qt::make_virtual(table, coords);
        const Decomposition d = from_class_function(to_class_function(v));
        REQUIRE(d.character.has_value());
        CHECK(d.character->coords == coords);
      }
    }
  }
}

TEST_CASE("ring multiplication") {
  const auto c2 = qt::cyclic_table(2);
  SUBCASE("square of the regular character of C2") {
    const VirtualCharacter reg = qt::make_virtual(c2, {1, 1});
    CHECK(mul(reg, reg).coords == std::vector<Int>{2, 2});
  }
  SUBCASE("inverse pair multiplies to the trivial character") {
    const auto c5 = qt::cyclic_table(5);
    const VirtualCharacter u = qt::make_virtual(c5, {3, 1, -2, -2, 1});
    const VirtualCharacter v = qt::make_virtual(c5, {3, -2, 1, 1, -2});
    CHECK(mul(u, v) == trivial_character(c5));
  }
  SUBCASE("trivial character is the identity") {
    const auto s3 = qt::table_of(PermGroup::symmetric(3));
    const VirtualCharacter v = qt::make_virtual(s3, {4, -1, 2});
    CHECK(mul(v, trivial_character(s3)) == v);
  }
  SUBCASE("commutative and associative") {
    const auto s3 = qt::table_of(PermGroup::symmetric(3));
    qt::Rng rng(907);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Int> a, b, c;
      for (int i = 0; i < 3; ++i) {
        a.push_back(rng.range(-3, 3));
        b.push_back(rng.range(-3, 3));
        c.push_back(rng.range(-3, 3));
      }
      const VirtualCharacter va = qt::make_virtual(s3, a);
      const VirtualCharacter vb = qt::make_virtual(s3, b);
      const VirtualCharacter vc = qt::make_virtual(s3, c);
      CHECK(mul(va, vb) == mul(vb, va));
      CHECK(mul(mul(va, vb), vc) == mul(va, mul(vb, vc)));
    }
  }
  SUBCASE("dimension is multiplicative") {
    const auto d4 = qt::table_of(PermGroup::dihedral(4));
    qt::Rng rng(31415);
    auto dim = [&](const VirtualCharacter& v) {
      Int n = 0;
      for (std::size_t i = 0; i < v.coords.size(); ++i) n += v.coords[i] * d4->degrees[i];
      return n;
    };
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Int> a, b;
      for (int i = 0; i < d4->num_classes; ++i) {
        a.push_back(rng.range(-2, 2));
        b.push_back(rng.range(-2, 2));
      }
      const VirtualCharacter va = qt::make_virtual(d4, a);
      const VirtualCharacter vb = qt::make_virtual(d4, b);
      CHECK(dim(mul(va, vb)) == dim(va) * dim(vb));
    }
  }
  SUBCASE("mixing tables of different groups is an internal error") {
    const VirtualCharacter a = qt::make_virtual(qt::cyclic_table(2), {1, 0});
    const VirtualCharacter b = qt::make_virtual(qt::cyclic_table(3), {1, 0, 0});
    CHECK_THROWS_AS(mul(a, b), InternalError);
  }
}

TEST_CASE("one minus a representation") {
  const auto c2 = qt::cyclic_table(2);
  SUBCASE("regular representation of C2") {
    const VirtualCharacter x = one_minus(qt::make_rep(c2, {1, 1}));
    CHECK(x.coords == std::vector<Int>{0, -1});
    const ClassFunction f = to_class_function(x);
    CHECK(f.values[0] == cyc("-1"));
    CHECK(f.values[1] == cyc("1"));
  }
  SUBCASE("doubled sign character") {
    const VirtualCharacter x = one_minus(qt::make_rep(c2, {0, 2}));
    CHECK(x.coords == std::vector<Int>{1, -2});
    const ClassFunction f = to_class_function(x);
    CHECK(f.values[0] == cyc("-1"));
    CHECK(f.values[1] == cyc("3"));
  }
  SUBCASE("trivial group") {
    const auto t1 = qt::cyclic_table(1);
    CHECK(to_class_function(one_minus(qt::make_rep(t1, {1}))).values[0] == cyc("0"));
    CHECK(one_minus(qt::make_rep(t1, {3})).coords == std::vector<Int>{-2});
  }
}

TEST_CASE("faithfulness") {
  const auto c2 = qt::cyclic_table(2);
  CHECK(is_faithful(qt::make_rep(c2, {0, 1})));
  CHECK(!is_faithful(qt::make_rep(c2, {1, 0})));
  CHECK(is_faithful(qt::make_rep(c2, {2, 1})));
  const auto c4 = qt::cyclic_table(4);
  // Row 1 of the C4 table is the order-2 character, rows 2 and 3 are faithful.
  CHECK(!is_faithful(qt::make_rep(c4, {0, 1, 0, 0})));
  CHECK(is_faithful(qt::make_rep(c4, {0, 0, 1, 0})));
  CHECK(is_faithful(qt::make_rep(c4, {1, 1, 0, 1})));
  const auto s3 = qt::table_of(PermGroup::symmetric(3));
  CHECK(is_faithful(qt::make_rep(s3, {0, 0, 1})));
  CHECK(!is_faithful(qt::make_rep(s3, {1, 2, 0})));
}

TEST_CASE("unit checks") {
  const auto c2 = qt::cyclic_table(2);
  SUBCASE("signed linear characters are units with conjugate inverses") {
    const UnitCheck plus = is_unit(qt::make_virtual(c2, {0, 1}));
    REQUIRE(plus.ok());
    CHECK(plus.inverse->coords == std::vector<Int>{0, 1});
    const UnitCheck minus = is_unit(qt::make_virtual(c2, {-1, 0}));
    REQUIRE(minus.ok());
    CHECK(minus.inverse->coords == std::vector<Int>{-1, 0});
  }
  SUBCASE("nonzero values with non-integral pointwise inverse") {
    const UnitCheck check = is_unit(qt::make_virtual(c2, {2, -1}));
    CHECK(!check.ok());
    CHECK(check.failure == UnitCheck::Failure::NonIntegralInverse);
    CHECK(!check.inverse.has_value());
  }
  SUBCASE("vanishing value is reported with its class") {
    const UnitCheck check = is_unit(qt::make_virtual(c2, {1, -1}));
    CHECK(check.failure == UnitCheck::Failure::ZeroValue);
    CHECK(check.zero_class == 0);
  }
  SUBCASE("a nontrivial unit of the C5 ring") {
    const auto c5 = qt::cyclic_table(5);
    const VirtualCharacter u = qt::make_virtual(c5, {3, 1, -2, -2, 1});
    const UnitCheck check = is_unit(u);
    REQUIRE(check.ok());
    CHECK(check.inverse->coords == std::vector<Int>{3, -2, 1, 1, -2});
    CHECK(mul(u, *check.inverse) == trivial_character(c5));
    const UnitCheck back = is_unit(*check.inverse);
    REQUIRE(back.ok());
    CHECK(back.inverse->coords == u.coords);
  }
  SUBCASE("unit values have absolute norm one") {
    const auto c5 = qt::cyclic_table(5);
    for (const VirtualCharacter& u : enumerate_units(c5, 1, 100000)) {
      for (const Cyclotomic& value : to_class_function(u).values) {
        const Rat n = value.absolute_norm();
        CHECK((n == 1 || n == -1));
      }
    }
  }
}

TEST_CASE("tensor power coverage") {
  SUBCASE("trivial group") {
    const FockCoverage cover = fock_coverage(qt::make_rep(qt::cyclic_table(1), {2}));
    CHECK(cover.kmax_used == 0);
    REQUIRE(cover.first_power.size() == 1);
    CHECK(cover.first_power[0] == 0);
    CHECK(cover.complete());
  }
  SUBCASE("regular representation of C2") {
    const FockCoverage cover = fock_coverage(qt::make_rep(qt::cyclic_table(2), {1, 1}));
    CHECK(cover.kmax_used == 1);
    CHECK(cover.first_power[0] == 0);
    CHECK(cover.first_power[1] == 1);
    CHECK(cover.complete());
  }
  SUBCASE("standard representation of S3") {
    const auto s3 = qt::table_of(PermGroup::symmetric(3));
    const FockCoverage cover = fock_coverage(qt::make_rep(s3, {0, 0, 1}));
    CHECK(cover.kmax_used == 2);
    CHECK(cover.first_power[0] == 0);
    CHECK(cover.first_power[1] == 2);  // sign appears in the square
    CHECK(cover.first_power[2] == 1);
    CHECK(cover.complete());
  }
  SUBCASE("non-faithful input misses characters") {
    const FockCoverage cover = fock_coverage(qt::make_rep(qt::cyclic_table(2), {2, 0}));
    CHECK(cover.kmax_used == 0);
    CHECK(cover.first_power[0] == 0);
    CHECK(!cover.first_power[1].has_value());
    CHECK(!cover.complete());
  }
  SUBCASE("explicit bound cuts the search off") {
    const auto s3 = qt::table_of(PermGroup::symmetric(3));
    const FockCoverage cover = fock_coverage(qt::make_rep(s3, {0, 0, 1}), 1);
    CHECK(cover.kmax_used == 1);
    CHECK(cover.first_power[0] == 0);
    CHECK(!cover.first_power[1].has_value());
    CHECK(cover.first_power[2] == 1);
    CHECK(!cover.complete());
    CHECK_THROWS_AS(fock_coverage(qt::make_rep(s3, {0, 0, 1}), -1), Error);
  }
}

TEST_CASE("equivariant K-groups") {
  const auto c2 = qt::cyclic_table(2);
  SUBCASE("regular representation of C2 kills both groups") {
    const KGroups k = equivariant_k_groups(qt::make_rep(c2, {1, 1}));
    CHECK(k == KGroups{{}, 0, 0});
  }
  SUBCASE("doubled sign gives three-torsion") {
    const KGroups k = equivariant_k_groups(qt::make_rep(c2, {0, 2}));
    CHECK(k.torsion == std::vector<Int>{3});
    CHECK(k.free_rank == 0);
    CHECK(k.k1_rank == 0);
  }
  SUBCASE("trivial group at dimension three") {
    const KGroups k = equivariant_k_groups(qt::make_rep(qt::cyclic_table(1), {3}));
    CHECK(k.torsion == std::vector<Int>{2});
    CHECK(k.free_rank == 0);
    CHECK(k.k1_rank == 0);
  }
  SUBCASE("vanishing classes contribute free rank") {
    // chi(g^2) = 1 for this C8 representation, so multiplication by
    // 1 - [pi] is singular with a rank-two kernel.
    const auto c8 = qt::cyclic_table(8);
    const Representation pi = qt::make_rep(c8, {3, 2, 2, 2, 2, 3, 2, 3});
    const KGroups k = equivariant_k_groups(pi);
    CHECK(k.torsion == std::vector<Int>{9});
    CHECK(k.free_rank == 2);
    CHECK(k.k1_rank == 2);
  }
}

TEST_CASE("classical units") {
  const auto c2 = qt::cyclic_table(2);
  const auto units_c2 = trivial_units(c2);
  REQUIRE(units_c2.size() == 4);
  auto has = [](const std::vector<VirtualCharacter>& units, const std::vector<Int>& coords) {
    return std::any_of(units.begin(), units.end(),
                       [&](const VirtualCharacter& u) { return u.coords == coords; });
  };
  CHECK(has(units_c2, {1, 0}));
  CHECK(has(units_c2, {-1, 0}));
  CHECK(has(units_c2, {0, 1}));
  CHECK(has(units_c2, {0, -1}));

  const auto s3 = qt::table_of(PermGroup::symmetric(3));
  const auto units_s3 = trivial_units(s3);
  CHECK(units_s3.size() == 4);  // two linear characters, two signs
  for (const VirtualCharacter& u : units_s3) CHECK(is_unit(u).ok());

  CHECK(trivial_units(qt::table_of(PermGroup::quaternion())).size() == 8);
}

TEST_CASE("graded lexicographic scan") {
  std::vector<std::vector<std::int64_t>> seen;
  auto collect = [&](std::span<const std::int64_t> v) {
    seen.emplace_back(v.begin(), v.end());
    return true;
  };
  SUBCASE("full order for length 2, height 1") {
    const std::int64_t count = scan_graded_lex(2, 1, 1000, collect);
    CHECK(count == 9);
    const std::vector<std::vector<std::int64_t>> want = {
        {0, 0},  {-1, 0}, {0, -1}, {0, 1},  {1, 0},
        {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    CHECK(seen == want);
  }
  SUBCASE("full order for length 1, height 3") {
    scan_graded_lex(1, 3, 1000, collect);
    const std::vector<std::vector<std::int64_t>> want = {{0}, {-1}, {1}, {-2}, {2}, {-3}, {3}};
    CHECK(seen == want);
  }
  SUBCASE("limit truncates the scan") {
    const std::int64_t count = scan_graded_lex(2, 1, 3, collect);
    CHECK(count == 3);
    CHECK(seen.size() == 3);
    CHECK(seen.back() == std::vector<std::int64_t>{0, -1});
  }
  SUBCASE("visitor can stop the scan") {
    std::int64_t calls = 0;
    const std::int64_t count = scan_graded_lex(3, 2, 100000, [&](std::span<const std::int64_t>) {
      ++calls;
      return calls < 4;
    });
    CHECK(count == 4);
    CHECK(calls == 4);
  }
  SUBCASE("counts match the full box") {
    CHECK(scan_graded_lex(3, 2, 1000, [](std::span<const std::int64_t>) { return true; }) == 125);
  }
}

TEST_CASE("unit enumeration") {
  SUBCASE("C2 at height one finds exactly the classical units, in scan order") {
    const auto units = enumerate_units(qt::cyclic_table(2), 1, 1000);
    REQUIRE(units.size() == 4);
    CHECK(units[0].coords == std::vector<Int>{-1, 0});
    CHECK(units[1].coords == std::vector<Int>{0, -1});
    CHECK(units[2].coords == std::vector<Int>{0, 1});
    CHECK(units[3].coords == std::vector<Int>{1, 0});
  }
  SUBCASE("trivial group has only the signs") {
    const auto units = enumerate_units(qt::cyclic_table(1), 3, 1000);
    REQUIRE(units.size() == 2);
    CHECK(units[0].coords == std::vector<Int>{-1});
    CHECK(units[1].coords == std::vector<Int>{1});
  }
  SUBCASE("C5 at height three contains a nontrivial unit") {
    const auto c5 = qt::cyclic_table(5);
    const auto units = enumerate_units(c5, 3, 20000);
    auto has = [&](const std::vector<Int>& coords) {
      return std::any_of(units.begin(), units.end(),
                         [&](const VirtualCharacter& u) { return u.coords == coords; });
    };
    CHECK(has({3, 1, -2, -2, 1}));
    CHECK(has({3, -2, 1, 1, -2}));
    for (const VirtualCharacter& u : trivial_units(c5)) CHECK(has(u.coords));
    for (const VirtualCharacter& u : units) CHECK(is_unit(u).ok());
  }
}
