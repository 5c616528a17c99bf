#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "qf/errors.hpp"
#include "qf/perm_group.hpp"
#include "qf/permutation.hpp"

using namespace qf;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  CHECK_THROWS_AS(Permutation({0, 2}), Error);
  CHECK_THROWS_AS(Permutation({-1, 0}), Error);
  CHECK_THROWS_AS(Permutation({}), Error);
  CHECK_NOTHROW(Permutation({2, 0, 1}));
}

TEST_CASE("composition, inverse, power, order") {
  const Permutation a({1, 0, 2});     // (0 1)
  const Permutation b({1, 2, 0});     // (0 1 2)
  CHECK(a.then(b)(0) == b(a(0)));
  CHECK(a.then(a) == Permutation::identity(3));
  CHECK(b.then(b.inverse()) == Permutation::identity(3));
  CHECK(b.power(3) == Permutation::identity(3));
  CHECK(b.power(2) == b.then(b));
  CHECK(b.power(0) == Permutation::identity(3));
  CHECK(a.order() == 2);
  CHECK(b.order() == 3);
  CHECK(a.then(b).order() == 2);  // (0 1)(0 1 2) is a transposition
  CHECK(Permutation({1, 0, 3, 2, 4}).order() == 2);
  CHECK(Permutation({1, 2, 0, 4, 3}).order() == 6);  // 3-cycle times 2-cycle
}

TEST_CASE("enumeration is breadth-first with identity first") {
  const PermGroup s3 = PermGroup::symmetric(3);
  const auto elements = enumerate_elements(s3);
  REQUIRE(elements.size() == 6);
  CHECK(elements[0].is_identity());
  // Two runs agree element by element.
  const auto again = enumerate_elements(s3);
  CHECK(elements == again);
}

TEST_CASE("factory group orders") {
  CHECK(enumerate_elements(PermGroup::trivial()).size() == 1);
  CHECK(enumerate_elements(PermGroup::cyclic(5)).size() == 5);
  CHECK(enumerate_elements(PermGroup::cyclic(6)).size() == 6);
  CHECK(enumerate_elements(PermGroup::symmetric(4)).size() == 24);
  CHECK(enumerate_elements(PermGroup::alternating(4)).size() == 12);
  CHECK(enumerate_elements(PermGroup::alternating(5)).size() == 60);
  CHECK(enumerate_elements(PermGroup::dihedral(4)).size() == 8);
  CHECK(enumerate_elements(PermGroup::klein_four()).size() == 4);
  CHECK(enumerate_elements(PermGroup::quaternion()).size() == 8);
}

TEST_CASE("enumeration limit is enforced") {
  CHECK_THROWS_AS(enumerate_elements(PermGroup::symmetric(5), 100), GroupTooLargeError);
  CHECK_NOTHROW(enumerate_elements(PermGroup::symmetric(5), 120));
}

TEST_CASE("conjugacy classes of small groups") {
  SUBCASE("cyclic C5") {
    const auto data = conjugacy_data(enumerate_elements(PermGroup::cyclic(5)));
    CHECK(data.num_classes() == 5);
    CHECK(data.class_sizes == std::vector<std::int64_t>(5, 1));
    CHECK(data.exponent == 5);
  }
  SUBCASE("symmetric S3") {
    const auto data = conjugacy_data(enumerate_elements(PermGroup::symmetric(3)));
    REQUIRE(data.num_classes() == 3);
    CHECK(data.class_sizes[0] == 1);
    CHECK(data.element_orders[0] == 1);
    std::vector<std::int64_t> sizes = data.class_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{1, 2, 3});
    CHECK(data.exponent == 6);
    // Every transposition lands in the same class.
    const int c = data.class_of[data.index_of_element(Permutation({1, 0, 2}))];
    CHECK(data.class_of[data.index_of_element(Permutation({0, 2, 1}))] == c);
    CHECK(data.class_of[data.index_of_element(Permutation({2, 1, 0}))] == c);
  }
  SUBCASE("quaternion Q8") {
    const auto data = conjugacy_data(enumerate_elements(PermGroup::quaternion()));
    REQUIRE(data.num_classes() == 5);
    std::vector<std::int64_t> sizes = data.class_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::int64_t>{1, 1, 2, 2, 2});
    CHECK(data.exponent == 4);
  }
}

TEST_CASE("class invariants over the corpus") {
  for (const PermGroup& group :
       {PermGroup::cyclic(2), PermGroup::cyclic(6), PermGroup::symmetric(3),
        PermGroup::dihedral(4), PermGroup::quaternion(), PermGroup::alternating(4),
        PermGroup::symmetric(4), PermGroup::alternating(5)}) {
    const auto elements = enumerate_elements(group);
    const auto data = conjugacy_data(elements);
    const auto total = std::accumulate(data.class_sizes.begin(), data.class_sizes.end(),
                                       std::int64_t{0});
    CHECK(total == static_cast<std::int64_t>(elements.size()));
    for (const std::int64_t size : data.class_sizes)
      CHECK(static_cast<std::int64_t>(elements.size()) % size == 0);
    for (const std::int64_t ord : data.element_orders) CHECK(data.exponent % ord == 0);
    // Conjugate elements share a class; element orders are constant on classes.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const int cls = data.class_of[i];
      CHECK(elements[i].order() == data.element_orders[cls]);
      const Permutation conj =
          elements[1 % elements.size()].inverse().then(elements[i]).then(
              elements[1 % elements.size()]);
      CHECK(data.class_of[data.index_of_element(conj)] == cls);
    }
  }
}

TEST_CASE("power map") {
  const auto s3 = conjugacy_data(enumerate_elements(PermGroup::symmetric(3)));
  const auto identity_map = power_map(s3, 1);
  for (int j = 0; j < s3.num_classes(); ++j) CHECK(identity_map[j] == j);

  // Squaring kills transpositions and permutes 3-cycles among themselves.
  const auto squares = power_map(s3, 2);
  const int transposition = s3.class_of[s3.index_of_element(Permutation({1, 0, 2}))];
  const int three_cycle = s3.class_of[s3.index_of_element(Permutation({1, 2, 0}))];
  CHECK(squares[transposition] == 0);
  CHECK(squares[three_cycle] == three_cycle);

  const auto c5 = conjugacy_data(enumerate_elements(PermGroup::cyclic(5)));
  const auto doubled = power_map(c5, 2);
  const auto& g = c5.elements[1];
  for (int j = 0; j < 5; ++j) {
    // Class of g^j maps to class of g^(2j mod 5).
    const int from = c5.class_of[c5.index_of_element(g.power(j))];
    const int to = c5.class_of[c5.index_of_element(g.power(2 * j % 5))];
    CHECK(doubled[from] == to);
  }

  // Composition law and negative exponents.
  const auto d4 = conjugacy_data(enumerate_elements(PermGroup::dihedral(4)));
  for (std::int64_t k : {0, 1, 2, 3}) {
    for (std::int64_t j : {1, 2, 3}) {
      const auto pk = power_map(d4, k);
      const auto pj = power_map(d4, j);
      const auto pkj = power_map(d4, k * j % d4.exponent);
      for (int c = 0; c < d4.num_classes(); ++c) CHECK(pk[pj[c]] == pkj[c]);
    }
  }
  const auto inverse_map = power_map(d4, -1);
  const auto same = power_map(d4, d4.exponent - 1);
  CHECK(inverse_map == same);
}
