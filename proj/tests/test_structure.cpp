#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "pbmotz/combinatorics.hpp"
#include "pbmotz/monoid.hpp"
#include "pbmotz/structure.hpp"

using namespace pbmotz;

TEST_CASE("named generators") {
  // n = 7, A = {1,3,4,6}
  const std::vector<int> a{1, 3, 4, 6};
  CHECK(lambda_a(a, 7) ==
        Diagram::from_blocks(7, {{1, -1}, {3, -2}, {4, -3}, {6, -4}}));
  CHECK(rho_a(a, 7) ==
        Diagram::from_blocks(7, {{1, -1}, {2, -3}, {3, -4}, {4, -6}}));
  CHECK(star(lambda_a(a, 7)) == rho_a(a, 7));

  std::vector<int> full(5);
  std::iota(full.begin(), full.end(), 1);
  CHECK(id_a(full, 5) == Diagram::identity(5));

  CHECK(rank_of(tau_ij(2, 5, 6)) == 4);
  CHECK(is_projection(tau_ij(2, 5, 6)));
  CHECK(rank_of(mu_k(2, 6)) == 3);
  CHECK(is_projection(mu_k(2, 6)));
  CHECK(is_projection(eps_k(3, 5)));
  CHECK(rank_of(eps_k(3, 5)) == 4);

  CHECK(sigma_ij(1, 2, 2) == Diagram::from_blocks(2, {{1, -2}, {2, -1}}));
  CHECK(beta_shift(4) == Diagram::from_blocks(4, {{1, -2}, {2, -3}, {3, -4}}));
  CHECK(alpha_j(2, 4) ==
        Diagram::from_blocks(4, {{1, -1}, {3, -2}, {4, -4}}));
  CHECK(family_membership(alpha_j(2, 4)).order);
  CHECK(family_membership(beta_shift(4)).order);

  CHECK_THROWS_AS(mu_k(5, 6), OutOfRangeError);
  CHECK_THROWS_AS(sigma_ij(1, 9, 4), OutOfRangeError);

  GeneratorParams params;
  params.j = 2;
  CHECK(generator(GeneratorKind::TauAdjJ, params, 5) == tau_ij(2, 3, 5));
  CHECK(generator(parse_generator_kind("beta"), {}, 4) == beta_shift(4));
}

TEST_CASE("lambda and rho composition identities") {
  for (int n = 1; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> a;
      for (int p = 1; p <= n; ++p) {
        if (mask >> (p - 1) & 1) a.push_back(p);
      }
      std::vector<int> prefix(a.size());
      std::iota(prefix.begin(), prefix.end(), 1);
      CHECK(lambda_a(a, n) * rho_a(a, n) == id_a(a, n));
      CHECK(rho_a(a, n) * lambda_a(a, n) == id_a(prefix, n));
      CHECK(star(lambda_a(a, n)) == rho_a(a, n));
      CHECK(is_projection(id_a(a, n)));
    }
  }
}

TEST_CASE("normal form of the degree-8 example") {
  const Diagram a = Diagram::from_blocks(
      8, {{1, 2}, {4, 7}, {3, -4}, {5, -1}, {-2, -3}, {-5, -6}, {-7, -8}});
  const NormalForm nf = normal_form(a);
  CHECK(nf.beta == Diagram::from_blocks(8, {{1, 2}, {4, 7}, {3, -3}, {5, -5}}));
  CHECK(nf.lam == Diagram::from_blocks(8, {{3, -1}, {5, -2}}));
  CHECK(nf.gam == Diagram::from_blocks(8, {{1, -2}, {2, -1}}));
  CHECK(nf.rho == Diagram::from_blocks(8, {{1, -1}, {2, -4}}));
  CHECK(nf.delta == Diagram::from_blocks(
                        8, {{1, -1}, {4, -4}, {-2, -3}, {-5, -6}, {-7, -8}}));
  CHECK(nf.beta * nf.lam * nf.gam * nf.rho * nf.delta == a);
  CHECK(is_idempotent(nf.beta));
  CHECK(is_idempotent(nf.delta));
}

TEST_CASE("normal form recomposition") {
  const NormalForm id_nf = normal_form(Diagram::identity(4));
  CHECK(id_nf.beta == Diagram::identity(4));
  CHECK(id_nf.lam == Diagram::identity(4));
  CHECK(id_nf.gam == Diagram::identity(4));
  CHECK(id_nf.rho == Diagram::identity(4));
  CHECK(id_nf.delta == Diagram::identity(4));

  for (const Diagram& d : enumerate(Family::PB, 3)) {
    const NormalForm nf = normal_form(d);
    CHECK(nf.beta * nf.lam * nf.gam * nf.rho * nf.delta == d);
    const int r = rank_of(d);
    for (const Diagram* factor : {&nf.beta, &nf.lam, &nf.gam, &nf.rho, &nf.delta}) {
      CHECK(rank_of(*factor) == r);
    }
  }
  for (const Diagram& d : enumerate(Family::M, 4)) {
    const NormalForm nf = normal_form(d);
    CHECK(nf.beta * nf.lam * nf.gam * nf.rho * nf.delta == d);
    std::vector<int> prefix(rank_of(d));
    std::iota(prefix.begin(), prefix.end(), 1);
    CHECK(nf.gam == id_a(prefix, 4));
    CHECK(is_planar(nf.beta));
    CHECK(is_planar(nf.delta));
  }
}

TEST_CASE("sparse and cosparse") {
  CHECK(is_cosparse({2, 4}, 4));
  CHECK_FALSE(is_cosparse({1}, 4));
  CHECK(is_sparse({1, 3}, 4));
  CHECK_FALSE(is_sparse({2, 3}, 4));
  CHECK(is_sparse({}, 4));

  int cosparse_count = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<int> a;
    for (int p = 1; p <= 4; ++p) {
      if (mask >> (p - 1) & 1) a.push_back(p);
    }
    if (is_cosparse(a, 4)) ++cosparse_count;
  }
  CHECK(cosparse_count == 8);
}

TEST_CASE("nesting depth") {
  // degree-12 projection with depths 0,0,0,1,1,2,2 on its upper blocks
  const Diagram a = Diagram::from_blocks(
      12, {{3, 6}, {4, 5}, {7, 9}, {11, 12}, {2, 10},
           {-3, -6}, {-4, -5}, {-7, -9}, {-11, -12}, {-2, -10}});
  CHECK(nesting_depth(a, Side::Upper, {1}) == 0);
  CHECK(nesting_depth(a, Side::Upper, {2, 10}) == 0);
  CHECK(nesting_depth(a, Side::Upper, {11, 12}) == 0);
  CHECK(nesting_depth(a, Side::Upper, {3, 6}) == 1);
  CHECK(nesting_depth(a, Side::Upper, {7, 9}) == 1);
  CHECK(nesting_depth(a, Side::Upper, {4, 5}) == 2);
  CHECK(nesting_depth(a, Side::Upper, {8}) == 2);
  CHECK(nesting_depth(a, Side::Lower, {4, 5}) == 2);

  const Diagram m7 = Diagram::from_blocks(
      7, {{1, -1}, {3, 7}, {4, 5}, {-3, -7}, {-4, -5}});
  CHECK(nesting_depth(m7, Side::Upper, {4, 5}) == 1);
  CHECK(nesting_depth(m7, Side::Upper, {6}) == 1);
  CHECK(nesting_depth(m7, Side::Upper, {2}) == 0);
  CHECK(nesting_depth(m7, Side::Upper, {3, 7}) == 0);
  CHECK(has_unnested_singleton(m7, Side::Upper));

  const Diagram hooked = Diagram::from_blocks(3, {{1, 3}, {-1, -3}});
  CHECK_FALSE(has_unnested_singleton(hooked, Side::Upper));

  CHECK_THROWS_AS(nesting_depth(m7, Side::Upper, {1}), NotANontransversalBlockError);
  CHECK_THROWS_AS(nesting_depth(m7, Side::Upper, {4, 6}), NotANontransversalBlockError);
}

TEST_CASE("membership in the subsemigroup generated by a D-class") {
  // rank-1 element of PB_5 with upper and lower singletons, r = 2
  const Diagram withsingles =
      Diagram::from_blocks(5, {{1, -2}, {2, 3}, {-4, -5}});
  CHECK(in_ideal_generated_by_dr(withsingles, Family::PB, 2));

  // hook-over-singleton projection in M_3 is not in <D_1>
  const Diagram nested = Diagram::from_blocks(3, {{1, 3}, {-1, -3}});
  CHECK_FALSE(in_ideal_generated_by_dr(nested, Family::M, 1));

  // anything of rank r is trivially a member
  for (const Diagram& d : enumerate(Family::M, 4, 2)) {
    CHECK(in_ideal_generated_by_dr(d, Family::M, 2));
  }

  CHECK_THROWS_AS(in_ideal_generated_by_dr(nested, Family::M, 2), TheoremRangeError);

  // cross-check against explicit closures at degree 4
  for (Family f : {Family::PB, Family::M}) {
    for (int r = 0; r <= 2; ++r) {
      const auto generated = closure(enumerate(f, 4, r));
      const std::set<Diagram> members(generated.begin(), generated.end());
      for (const Diagram& d : ideal(f, 4, r)) {
        CHECK(in_ideal_generated_by_dr(d, f, r) == (members.count(d) > 0));
      }
    }
  }
}

TEST_CASE("membership in idempotent-generated subsemigroups") {
  // lambda_{1,3} rho_{1,2} in M_4 has cosparse domain and is not idempotent
  const Diagram awkward = lambda_a({1, 3}, 4) * rho_a({1, 2}, 4);
  CHECK_FALSE(in_idempotent_generated(awkward, IdempotentScope::MWhole));

  CHECK(in_idempotent_generated(id_a({2, 4}, 4), IdempotentScope::MWhole));
  CHECK(in_idempotent_generated(id_a({1}, 4), IdempotentScope::MWhole));

  // every rank-1 element of PB_3 is a product of idempotents
  for (const Diagram& d : ideal(Family::PB, 3, 1)) {
    CHECK(in_idempotent_generated(d, IdempotentScope::PbWhole));
  }
  CHECK(in_idempotent_generated(Diagram::identity(3), IdempotentScope::PbWhole));
  CHECK(in_idempotent_generated(eps_k(2, 3), IdempotentScope::PbWhole));
  CHECK_FALSE(in_idempotent_generated(sigma_ij(1, 2, 3), IdempotentScope::PbWhole));

  CHECK_THROWS_AS(in_idempotent_generated(awkward, IdempotentScope::MIdeal, 3),
                  TheoremRangeError);
  CHECK(in_idempotent_generated(id_a({2}, 4), IdempotentScope::MIdeal, 1));
  CHECK_FALSE(in_idempotent_generated(lambda_a({2, 4}, 4) * rho_a({1, 3}, 4),
                                      IdempotentScope::MIdeal, 2));
}

TEST_CASE("minimal generating sets") {
  const auto pb41 = minimal_generating_set(GenTarget::IdealPb, 4, 1);
  CHECK(pb41.size() == 19);
  CHECK(closure(pb41).size() == 356);

  const auto em4 = minimal_generating_set(GenTarget::EMonoidM, 4);
  CHECK(em4.size() == 10);
  for (const Diagram& d : em4) CHECK(is_projection(d));

  const auto m3 = minimal_generating_set(GenTarget::MonoidM, 3);
  CHECK(m3.size() == 6);
  const auto closed = closure(m3);
  CHECK(closed.size() == 51);
  CHECK(closed == enumerate(Family::M, 3));

  // sizes match the rank formulas
  for (int n = 2; n <= 5; ++n) {
    for (int r = 0; r <= n - 2; ++r) {
      CHECK(Int(minimal_generating_set(GenTarget::IdealPb, n, r).size()) ==
            rank_of_ideal(Family::PB, n, r).rank);
    }
    for (int r = 0; r <= n - 1; ++r) {
      CHECK(Int(minimal_generating_set(GenTarget::IdealM, n, r).size()) ==
            rank_of_ideal(Family::M, n, r).rank);
    }
    CHECK(Int(minimal_generating_set(GenTarget::EMonoidM, n).size()) ==
          rank_of_idempotent_generated(Family::M, n));
    CHECK(minimal_generating_set(GenTarget::MonoidM, n).size() == 2 * n);
  }

  CHECK_THROWS_AS(minimal_generating_set(GenTarget::IdealPb, 4, 3), TheoremRangeError);
  CHECK_THROWS_AS(minimal_generating_set(GenTarget::EMonoidM, 1), TheoremRangeError);
}

TEST_CASE("projections without unnested singletons are counted by mprime") {
  for (int n = 0; n <= 7; ++n) {
    for (int r = 0; r <= n; ++r) {
      std::size_t count = 0;
      for (const Diagram& p : projections(Family::M, n, r)) {
        if (!has_unnested_singleton(p, Side::Upper)) ++count;
      }
      CHECK(Int(count) == riordan_mprime(n, r));
    }
  }
}

TEST_CASE("closure of the idempotent-generated subsemigroup of M_4") {
  std::vector<Diagram> idempotents;
  for (const Diagram& d : enumerate(Family::M, 4)) {
    if (is_idempotent(d)) idempotents.push_back(d);
  }
  const auto generated = closure(idempotents);
  const std::set<Diagram> members(generated.begin(), generated.end());
  for (const Diagram& d : enumerate(Family::M, 4)) {
    CHECK(in_idempotent_generated(d, IdempotentScope::MWhole) ==
          (members.count(d) > 0));
  }
  // and the e-generated subsemigroup of the ideal I_2(M_4)
  std::vector<Diagram> ideal_idempotents;
  for (const Diagram& d : ideal(Family::M, 4, 2)) {
    if (is_idempotent(d)) ideal_idempotents.push_back(d);
  }
  const auto sub = closure(ideal_idempotents);
  const std::set<Diagram> sub_members(sub.begin(), sub.end());
  for (const Diagram& d : ideal(Family::M, 4, 2)) {
    CHECK(in_idempotent_generated(d, IdempotentScope::MIdeal, 2) ==
          (sub_members.count(d) > 0));
  }
}
