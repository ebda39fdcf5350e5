#include <doctest.h>

#include <set>

#include "pbmotz/combinatorics.hpp"
#include "pbmotz/monoid.hpp"
#include "pbmotz/structure.hpp"

using namespace pbmotz;

TEST_CASE("enumeration counts") {
  CHECK(enumerate(Family::M, 4).size() == 323);
  CHECK(enumerate(Family::PB, 2).size() == 10);
  CHECK(enumerate(Family::S, 3).size() == 6);
  CHECK(enumerate(Family::B, 4).size() == 105);
  CHECK(enumerate(Family::J, 4).size() == 14);
  CHECK(enumerate(Family::O, 4).size() == 70);
  CHECK(enumerate(Family::I, 3).size() == 34);
  CHECK(enumerate(Family::PB, 0).size() == 1);

  CHECK(enumerate(Family::M, 4, 2).size() == 81);  // m(4,2)^2
  CHECK_THROWS_AS(enumerate(Family::B, 4, 1), ParityError);
  CHECK_THROWS_AS(enumerate(Family::J, 5, 2), ParityError);
  CHECK_THROWS_AS(enumerate(Family::PB, 9, {}, 1000), TooLargeError);
}

TEST_CASE("enumeration is ascending and canonical") {
  for (Family f : {Family::PB, Family::M, Family::B, Family::I}) {
    const auto all = enumerate(f, 3);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    const std::set<Diagram> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
  }
}

TEST_CASE("enumeration respects the family predicate") {
  for (const Diagram& d : enumerate(Family::M, 4)) CHECK(family_membership(d).planar);
  for (const Diagram& d : enumerate(Family::B, 4)) CHECK(family_membership(d).brauer);
  for (const Diagram& d : enumerate(Family::O, 4)) CHECK(family_membership(d).order);
  for (const Diagram& d : enumerate(Family::J, 4)) CHECK(family_membership(d).jones);
  for (const Diagram& d : enumerate(Family::S, 4)) {
    CHECK(family_membership(d).permutation);
  }
}

TEST_CASE("green characterizations") {
  const Diagram e1 = eps_k(1, 4), e2 = eps_k(2, 4);
  CHECK_FALSE(green_related(e1, e2, GreenRelation::R));
  CHECK(green_related(e1, e2, GreenRelation::D));

  const Diagram a = Diagram::from_blocks(6, {{1, 3}, {2, -3}, {5, 6}, {-4, -5}});
  const Diagram b = Diagram::from_blocks(6, {{1, 3}, {4, -3}, {5, 6}, {-4, -5}});
  CHECK(green_related(a, b, GreenRelation::D));
  CHECK(green_related(a, b, GreenRelation::J));
  CHECK_FALSE(green_related(a, b, GreenRelation::R));

  const std::vector<int> set_a{1, 3};
  CHECK(green_related(lambda_a(set_a, 5), id_a(set_a, 5), GreenRelation::R));
  CHECK_THROWS_AS(green_related(e1, Diagram::identity(3), GreenRelation::R),
                  DegreeMismatchError);
}

TEST_CASE("green oracle agrees with the characterization on small families") {
  for (auto [f, n] : {std::pair{Family::PB, 3}, {Family::M, 4}, {Family::I, 4},
                      {Family::J, 4}, {Family::B, 4}, {Family::O, 4},
                      {Family::S, 4}}) {
    const GreenOracle oracle(f, n);
    const auto& elements = oracle.elements();
    for (const Diagram& x : elements) {
      for (const Diagram& y : elements) {
        for (GreenRelation rel : {GreenRelation::R, GreenRelation::L,
                                  GreenRelation::H, GreenRelation::D,
                                  GreenRelation::J}) {
          CHECK(green_related(x, y, rel) == oracle.related(x, y, rel));
        }
      }
    }
  }
}

TEST_CASE("projections") {
  CHECK(projections(Family::M, 4, 2).size() == 9);
  CHECK(projections(Family::PB, 3, 1).size() == 6);
  const auto top = projections(Family::M, 5, 5);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == Diagram::identity(5));

  for (Family f : {Family::PB, Family::M, Family::I, Family::B}) {
    const int n = 4;
    for (int r = 0; r <= n; ++r) {
      if (family_has_parity(f) && (n - r) % 2 != 0) continue;
      CHECK(Int(projections(f, n, r).size()) == rclass_count(f, n, r));
    }
  }
}

TEST_CASE("egg boxes") {
  const EggBox m21 = egg_box(Family::M, 2, 1);
  CHECK(m21.rows() == 2);
  CHECK(m21.cols() == 2);
  for (const auto& row : m21.cells) {
    for (const auto& cell : row) CHECK(cell.size() == 1);
  }

  const EggBox pb32 = egg_box(Family::PB, 3, 2);
  CHECK(pb32.rows() == 3);
  CHECK(pb32.cols() == 3);
  std::size_t total = 0;
  for (const auto& row : pb32.cells) {
    for (const auto& cell : row) {
      CHECK(cell.size() == 2);
      total += cell.size();
    }
  }
  CHECK(total == 18);

  const EggBox unit = egg_box(Family::PB, 3, 3);
  CHECK(unit.rows() == 1);
  CHECK(unit.cols() == 1);
  CHECK(unit.cells[0][0].size() == 6);

  // every row and column of an egg box holds exactly one projection
  for (Family f : {Family::PB, Family::M, Family::J}) {
    const int n = 4;
    for (int r = 0; r <= n; ++r) {
      if (family_has_parity(f) && (n - r) % 2 != 0) continue;
      const EggBox box = egg_box(f, n, r);
      for (std::size_t i = 0; i < box.rows(); ++i) {
        std::size_t found = 0;
        for (std::size_t j = 0; j < box.cols(); ++j) {
          for (const Diagram& d : box.cells[i][j]) {
            if (is_projection(d)) ++found;
          }
        }
        CHECK(found == 1);
        CHECK(is_projection(box.row_projection[i]));
      }
      for (std::size_t j = 0; j < box.cols(); ++j) {
        std::size_t found = 0;
        for (std::size_t i = 0; i < box.rows(); ++i) {
          for (const Diagram& d : box.cells[i][j]) {
            if (is_projection(d)) ++found;
          }
        }
        CHECK(found == 1);
        CHECK(is_projection(box.col_projection[j]));
      }
    }
  }
}

TEST_CASE("closure") {
  // the 2n-element generating set of M_4 closes to all 323 elements
  const auto gens = minimal_generating_set(GenTarget::MonoidM, 4);
  CHECK(gens.size() == 8);
  const auto closed = closure(gens);
  CHECK(closed.size() == 323);
  CHECK(closed == enumerate(Family::M, 4));

  // idempotents of PB_3 generate a 56-element subsemigroup
  std::vector<Diagram> idempotents;
  for (const Diagram& d : enumerate(Family::PB, 3)) {
    if (is_idempotent(d)) idempotents.push_back(d);
  }
  CHECK(closure(idempotents).size() == 56);

  const Diagram e = eps_k(2, 3);
  CHECK(closure({e}) == std::vector<Diagram>{e});

  CHECK_THROWS_AS(closure(gens, 100), BoundExceededError);
  try {
    closure(gens, 100);
  } catch (const BoundExceededError& err) {
    CHECK(err.partial_size > 100);
  }
  CHECK_THROWS_AS(closure({Diagram::identity(2), Diagram::identity(3)}),
                  DegreeMismatchError);
}

TEST_CASE("ideals") {
  CHECK(ideal(Family::M, 5, 2).size() == 1966);
  CHECK(ideal(Family::PB, 4, 3).size() == 740);
  CHECK(ideal(Family::M, 4, 4) == enumerate(Family::M, 4));
  for (const Diagram& d : ideal(Family::M, 5, 2)) CHECK(rank_of(d) <= 2);
}

TEST_CASE("d-class generating sets") {
  const auto m31 = dclass_generating_set(Family::M, 3, 1);
  CHECK(m31.size() == 5);
  for (const Diagram& d : m31) CHECK(rank_of(d) == 1);
  const auto closed = closure(m31);
  for (const Diagram& d : enumerate(Family::M, 3, 1)) {
    CHECK(std::binary_search(closed.begin(), closed.end(), d));
  }

  const auto top = dclass_generating_set(Family::M, 4, 4);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == Diagram::identity(4));

  const auto j42 = dclass_generating_set(Family::J, 4, 2);
  CHECK(j42.size() == 3);
  const auto j_closed = closure(j42);
  for (const Diagram& d : enumerate(Family::J, 4, 2)) {
    CHECK(std::binary_search(j_closed.begin(), j_closed.end(), d));
  }

  CHECK_THROWS_AS(dclass_generating_set(Family::PB, 3, 1), FamilyMismatchError);
}

TEST_CASE("ideals of I_n and O_n are generated by one d-class") {
  for (Family f : {Family::I, Family::O}) {
    for (int n = 1; n <= 4; ++n) {
      for (int r = 0; r <= n - 1; ++r) {
        CHECK(closure(enumerate(f, n, r)) == ideal(f, n, r));
      }
    }
  }
}
