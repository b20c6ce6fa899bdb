#include "sncode/characters.hpp"
#include "sncode/error.hpp"

#include "brute_force.hpp"

#include "doctest.h"

#include <bit>

using namespace sncode;

namespace {

using Poly = SparseBivariatePoly;

Poly poly(std::initializer_list<std::tuple<Int, int, int>> terms) {
  Poly p;
  for (auto [c, d1, d2] : terms)
    p += Poly::monomial(c, d1, d2);
  return p;
}

Partition two_row(int n, int m) {
  return m == 0 ? Partition({n}) : Partition({n - m, m});
}

// Number of m-subsets of {0..n-1} mapped onto themselves by a permutation
// with the given cycle lengths; the subset must be a union of whole cycles.
Int fixed_subsets(const std::vector<int>& cycles, int m) {
  Int count = 0;
  for (std::uint32_t mask = 0; mask < (1u << cycles.size()); ++mask) {
    int size = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (mask & (1u << i))
        size += cycles[i];
    if (size == m)
      ++count;
  }
  return count;
}

// chi^{(n-m,m)} = pi_m - pi_{m-1}, where pi_m is the permutation character on
// m-subsets. Independent of both character implementations.
Int two_row_by_fixed_subsets(const CycleType& ct, int m) {
  auto cycles = ct.to_partition().parts();
  if (m == 0)
    return 1;
  return fixed_subsets(cycles, m) - fixed_subsets(cycles, m - 1);
}

} // namespace

TEST_CASE("frobenius_poly expansions") {
  CHECK(frobenius_poly(CycleType::parse("2+1")) == poly({{1, 4, 0}, {-1, 0, 4}}));
  CHECK(frobenius_poly(CycleType::parse("3+2+1")) ==
        poly({{1, 7, 0}, {1, 4, 3}, {-1, 3, 4}, {-1, 0, 7}}));
  CHECK(frobenius_poly(CycleType::identity(2)) ==
        poly({{1, 3, 0}, {1, 2, 1}, {-1, 1, 2}, {-1, 0, 3}}));
}

TEST_CASE("frobenius_poly is homogeneous with at most n+2 terms") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lam : partitions_of(n)) {
      auto p = frobenius_poly(CycleType::from_partition(lam));
      CHECK(p.homogeneous_degree() == n + 1);
      CHECK(p.terms().size() <= static_cast<std::size_t>(n + 2));
      for (const auto& [e, c] : p.terms())
        CHECK(c != 0);
    }
  }
}

TEST_CASE("two_row_char values") {
  CHECK(two_row_char(CycleType::parse("2+1"), 1) == 0);
  CHECK(two_row_char(CycleType::parse("3+2+1"), 2) == 0);
  CHECK(two_row_char(CycleType::parse("5"), 0) == 1);
  for (int n = 2; n <= 12; ++n)
    CHECK(two_row_char(CycleType::identity(n), 1) == n - 1);
  CHECK_THROWS_AS(two_row_char(CycleType::parse("2+1"), 2), InvalidArgument);
  CHECK_THROWS_AS(two_row_char(CycleType::parse("2+1"), -1), InvalidArgument);
}

TEST_CASE("arithmetic cap") {
  Limits limits;
  limits.max_arith_degree = 8;
  CHECK_THROWS_AS(frobenius_poly(CycleType::identity(9), limits), LimitExceeded);
  CHECK_NOTHROW(frobenius_poly(CycleType::identity(20)));
}

TEST_CASE("pruned Frobenius path agrees with the full expansion") {
  for (int n = 1; n <= 14; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto ct = CycleType::from_partition(lam);
      for (int m = 0; 2 * m <= n; ++m)
        CHECK(two_row_char_pruned(ct, m) == two_row_char(ct, m));
    }
}

TEST_CASE("two-row characters match the subset-counting route") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto ct = CycleType::from_partition(lam);
      for (int m = 0; 2 * m <= n; ++m) {
        Int expected = two_row_by_fixed_subsets(ct, m);
        CHECK(two_row_char(ct, m) == expected);
        CHECK(mn_character(two_row(n, m), ct) == expected);
      }
    }
}

TEST_CASE("mn_character values") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(mn_character(Partition({n}), CycleType::from_partition(lam)) == 1);
  CHECK(mn_character(Partition({2, 1}), CycleType::parse("3")) == -1);
  CHECK(mn_character(Partition({1, 1, 1}), CycleType::parse("2+1")) == -1);
  for (int n = 2; n <= 12; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto ct = CycleType::from_partition(lam);
      CHECK(mn_character(Partition({n - 1, 1}), ct) == ct.multiplicity(1) - 1);
    }
  CHECK_THROWS_AS(mn_character(Partition({2, 1}), CycleType::identity(4)), InvalidArgument);
}

TEST_CASE("sign character") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto ct = CycleType::from_partition(lam);
      int even_cycles = 0;
      for (int l = 2; l <= n; l += 2)
        even_cycles += ct.multiplicity(l);
      CHECK(mn_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), ct) ==
            (even_cycles % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("dimensions: hook length, MN and standard tableaux agree") {
  for (int n = 1; n <= 9; ++n) {
    Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lam : partitions_of(n)) {
      Int dim = hook_length_dimension(lam);
      CHECK(mn_character(lam, CycleType::identity(n)) == dim);
      // Standard tableaux are semistandard tableaux of content 1^n.
      CHECK(kostka(lam, column) == dim);
    }
  }
}

TEST_CASE("two-row character values are bounded by the dimension") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto ct = CycleType::from_partition(lam);
      for (int m = 0; 2 * m <= n; ++m) {
        Int v = two_row_char(ct, m);
        Int dim = hook_length_dimension(two_row(n, m));
        CHECK(v <= dim);
        CHECK(-v <= dim);
      }
    }
}

TEST_CASE("column orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    auto shapes = partitions_of(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes) {
        auto x = CycleType::from_partition(a);
        auto y = CycleType::from_partition(b);
        Int sum = 0;
        for (const auto& lam : shapes)
          sum += mn_character(lam, x) * mn_character(lam, y);
        CHECK(sum == (a == b ? factorial(n) / class_size(x) : 0));
      }
  }
}

TEST_CASE("kostka numbers") {
  for (int n = 1; n <= 7; ++n) {
    auto all = partitions_of(n);
    for (const auto& lam : all) {
      CHECK(kostka(lam, lam) == 1);
      for (const auto& mu : all)
        CHECK((kostka(mu, lam) >= 1) == dominates(mu, lam));
    }
  }
  for (int n = 2; n <= 12; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (int m = 0; m <= k; ++m)
        CHECK(kostka(two_row(n, m), two_row(n, k)) == 1);
  CHECK(kostka(Partition({3, 3}), Partition({4, 2})) == 0);
  CHECK(kostka(Partition({3, 1}), Partition({2, 1, 1})) == 2);
  CHECK_THROWS_AS(kostka(Partition({3}), Partition({2})), InvalidArgument);
}

TEST_CASE("decompose_young_module") {
  auto trivial = decompose_young_module(Partition({5}));
  REQUIRE(trivial.constituents.size() == 1);
  CHECK(trivial.constituents[0] == std::pair<Partition, Int>{Partition({5}), 1});

  auto hook = decompose_young_module(Partition({2, 1, 1}));
  std::vector<std::pair<Partition, Int>> expected{{Partition({4}), 1},
                                                  {Partition({3, 1}), 2},
                                                  {Partition({2, 2}), 1},
                                                  {Partition({2, 1, 1}), 1}};
  CHECK(hook.constituents == expected);

  auto two = decompose_young_module(Partition({7, 3}));
  REQUIRE(two.constituents.size() == 4);
  for (int m = 0; m <= 3; ++m)
    CHECK(two.constituents[static_cast<std::size_t>(m)] ==
          std::pair<Partition, Int>{two_row(10, m), 1});

  // Constituent dimensions add up to the number of tabloids n!/prod(lam_i!).
  for (int n = 1; n <= 7; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto dec = decompose_young_module(lam);
      Int total = 0;
      bool has_self = false;
      for (const auto& [mu, mult] : dec.constituents) {
        CHECK(dominates(mu, lam));
        CHECK(mult >= 1);
        has_self = has_self || (mu == lam && mult == 1);
        total += mult * hook_length_dimension(mu);
      }
      CHECK(has_self);
      CHECK(total == factorial(n) / YoungSubgroupSpec::of_shape(lam).order());
    }
}

TEST_CASE("class_sum_eigenvalue") {
  for (const auto& lam : partitions_of(6)) {
    auto ct = CycleType::from_partition(lam);
    CHECK(class_sum_eigenvalue(ct, Partition({6})) == Rational::make(class_size(ct), 1));
  }
  CHECK(class_sum_eigenvalue(CycleType::parse("2+1"), Partition({2, 1})) == Rational::make(0, 1));
  CHECK(class_sum_eigenvalue(CycleType::parse("3"), Partition({2, 1})) == Rational::make(-1, 1));
  // Central character values are algebraic integers, hence integers here.
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& lam : partitions_of(n))
        CHECK(class_sum_eigenvalue(CycleType::from_partition(a), lam).den == 1);
}
