#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pbmotz/diagram.hpp"
#include "pbmotz/monoid.hpp"

using namespace pbmotz;

namespace {

// the two degree-6 diagrams used throughout: alpha is non-planar, beta planar
Diagram alpha6() {
  return Diagram::from_blocks(6, {{1, 3}, {2, -3}, {5, 6}, {-4, -5}});
}
Diagram beta6() {
  return Diagram::from_blocks(6, {{1, 3}, {4, -3}, {5, 6}, {-4, -5}});
}

Diagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<int32_t> mate(2 * n, -1);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int v = 0; v < 2 * n; ++v) {
    if (mate[v] >= 0) continue;
    std::vector<int> free;
    for (int w = v + 1; w < 2 * n; ++w) {
      if (mate[w] < 0) free.push_back(w);
    }
    if (free.empty() || coin(rng) == 0) {
      mate[v] = v;
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
      const int w = free[pick(rng)];
      mate[v] = w;
      mate[w] = v;
    }
  }
  return Diagram::from_mate(n, std::move(mate));
}

}  // namespace

TEST_CASE("diagram construction and round trips") {
  const Diagram a = alpha6();
  CHECK(a.degree() == 6);
  CHECK(a.to_text() == "{1,3},{2,3'},{5,6},{4',5'}");
  CHECK(Diagram::parse_text(6, a.to_text()) == a);
  CHECK(Diagram::from_json(a.to_json()) == a);
  CHECK(Diagram::parse(6, a.to_json().dump()) == a);
  CHECK(Diagram::parse(6, " {1, 3} , {2, 3'}, {5,6},{4',5'} ") == a);

  const Diagram singletons = Diagram::from_blocks(3, {});
  CHECK(rank_of(singletons) == 0);
  CHECK(singletons.to_text().empty());
  CHECK(Diagram::parse_text(3, "") == singletons);

  const Diagram empty = Diagram::from_blocks(0, {});
  CHECK(empty == Diagram());
  CHECK(empty == Diagram::identity(0));

  CHECK_THROWS_AS(Diagram::from_blocks(6, {{7}}), OutOfRangeError);
  CHECK_THROWS_AS(Diagram::from_blocks(6, {{0}}), OutOfRangeError);
  CHECK_THROWS_AS(Diagram::from_blocks(6, {{-7}}), OutOfRangeError);
  CHECK_THROWS_AS(Diagram::from_blocks(6, {{1, 2}, {2, 3}}), DuplicatePointError);
  CHECK_THROWS_AS(Diagram::from_blocks(6, {{1, 2, 3}}), OversizedBlockError);
}

TEST_CASE("parser rejects malformed text without crashing") {
  for (const char* bad : {"{1,3", "1,3}", "{a,b}", "{1,,3}", "{1}{2}", "{}{",
                          "{1,2},{", "{-1}", "x", "{12''}", "{5}", "{1,1}"}) {
    CHECK_THROWS_AS(Diagram::parse(4, bad), Error);
  }
  // random printable garbage either parses or throws an Error subclass
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(0, 24);
  const std::string alphabet = "0123456789{}',- x";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) s += alphabet[pick(rng)];
    try {
      (void)Diagram::parse(5, s);
    } catch (const Error&) {
      // expected for most inputs
    }
  }
}

TEST_CASE("product of the two degree-12 diagrams") {
  const Diagram a = Diagram::from_blocks(
      12, {{2, -2}, {12, -11}, {1, 3}, {6, 8}, {10, 11}, {5, 9},
           {-4, -5}, {-8, -9}, {-3, -6}, {-7, -10}});
  const Diagram b = Diagram::from_blocks(
      12, {{4, -7}, {5, -4}, {6, -5}, {2, 3}, {8, 9}, {10, 12},
           {-1, -3}, {-8, -9}, {-11, -12}});
  const Diagram expected = Diagram::from_blocks(
      12, {{2, -5}, {1, 3}, {6, 8}, {5, 9}, {10, 11},
           {-1, -3}, {-4, -7}, {-8, -9}, {-11, -12}});
  const ProductResult pr = multiply(a, b);
  CHECK(pr.product == expected);
  CHECK(pr.loops == 1);
  CHECK(pr.paths == 2);
}

TEST_CASE("identity and degenerate products") {
  std::mt19937_64 rng(7);
  for (int n : {0, 1, 2, 5}) {
    const Diagram one = Diagram::identity(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Diagram d = random_diagram(n, rng);
      const ProductResult left = multiply(one, d);
      CHECK(left.product == d);
      CHECK(left.loops == 0);
      CHECK(left.paths == 0);
      const ProductResult right = multiply(d, one);
      CHECK(right.product == d);
      CHECK(right.loops == 0);
      CHECK(right.paths == 0);
    }
  }

  // parallel middle edges close into a loop; an isolated middle vertex is a path
  const Diagram tau = Diagram::from_blocks(2, {{1, 2}, {-1, -2}});
  const ProductResult tt = multiply(tau, tau);
  CHECK(tt.product == tau);
  CHECK(tt.loops == 1);
  CHECK(tt.paths == 0);

  const Diagram eps = Diagram::from_blocks(2, {{2, -2}});
  const ProductResult ee = multiply(eps, eps);
  CHECK(ee.product == eps);
  CHECK(ee.loops == 0);
  CHECK(ee.paths == 1);

  CHECK_THROWS_AS(multiply(tau, Diagram::identity(3)), DegreeMismatchError);
}

TEST_CASE("star") {
  const Diagram a = alpha6();
  const Diagram expected =
      Diagram::from_blocks(6, {{-1, -3}, {3, -2}, {-5, -6}, {4, 5}});
  CHECK(star(a) == expected);
  CHECK(star(star(a)) == a);
  CHECK(star(Diagram::identity(4)) == Diagram::identity(4));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Diagram x = random_diagram(5, rng), y = random_diagram(5, rng);
    CHECK(star(x * y) == star(y) * star(x));
    CHECK(x * star(x) * x == x);
    CHECK(is_projection(x * star(x)));
    CHECK(is_projection(star(x) * x));
    CHECK(rank_of(x * star(x)) == rank_of(x));
  }
}

TEST_CASE("stats") {
  const Diagram eps = Diagram::from_blocks(
      8, {{4, -6}, {7, -5}, {8, -8}, {-1, -2}, {-3, -4}});
  const DiagramStats s = stats(eps);
  CHECK(s.rank == 3);
  CHECK(s.dom == std::vector<int>{4, 7, 8});
  CHECK(s.codom == std::vector<int>{5, 6, 8});
  CHECK(s.ker_pairs.empty());
  CHECK(s.coker_pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  const DiagramStats id_stats = stats(Diagram::identity(4));
  CHECK(id_stats.rank == 4);
  CHECK(id_stats.dom == std::vector<int>{1, 2, 3, 4});
  CHECK(id_stats.codom == id_stats.dom);
  CHECK(id_stats.ker_pairs.empty());
  CHECK(id_stats.coker_pairs.empty());

  const DiagramStats sa = stats(alpha6());
  CHECK(sa.rank == 1);
  CHECK(sa.dom == std::vector<int>{2});
  CHECK(sa.codom == std::vector<int>{3});
}

TEST_CASE("containments under multiplication") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram x = random_diagram(6, rng), y = random_diagram(6, rng);
    const Diagram p = x * y;
    const DiagramStats sx = stats(x), sy = stats(y), sp = stats(p);
    CHECK(sp.rank <= std::min(sx.rank, sy.rank));
    CHECK(std::includes(sx.dom.begin(), sx.dom.end(), sp.dom.begin(), sp.dom.end()));
    CHECK(std::includes(sy.codom.begin(), sy.codom.end(), sp.codom.begin(),
                        sp.codom.end()));
    CHECK(std::includes(sp.ker_pairs.begin(), sp.ker_pairs.end(),
                        sx.ker_pairs.begin(), sx.ker_pairs.end()));
    CHECK(std::includes(sp.coker_pairs.begin(), sp.coker_pairs.end(),
                        sy.coker_pairs.begin(), sy.coker_pairs.end()));
  }
}

TEST_CASE("family membership") {
  CHECK_FALSE(family_membership(alpha6()).planar);
  CHECK(family_membership(beta6()).planar);

  const FamilyFlags id_flags = family_membership(Diagram::identity(5));
  CHECK(id_flags.brauer);
  CHECK(id_flags.sym_inverse);
  CHECK(id_flags.planar);
  CHECK(id_flags.jones);
  CHECK(id_flags.order);
  CHECK(id_flags.permutation);

  const Diagram swap2 = Diagram::from_blocks(2, {{1, -2}, {2, -1}});
  const FamilyFlags swap_flags = family_membership(swap2);
  CHECK(swap_flags.permutation);
  CHECK_FALSE(swap_flags.planar);
}

TEST_CASE("family flags closed under product and star") {
  // exhaustive at degree 3
  const auto all3 = enumerate(Family::PB, 3);
  for (const Diagram& x : all3) {
    for (const Diagram& y : all3) {
      const FamilyFlags fx = family_membership(x), fy = family_membership(y);
      const FamilyFlags fp = family_membership(x * y);
      if (fx.brauer && fy.brauer) CHECK(fp.brauer);
      if (fx.sym_inverse && fy.sym_inverse) CHECK(fp.sym_inverse);
      if (fx.planar && fy.planar) CHECK(fp.planar);
      if (fx.jones && fy.jones) CHECK(fp.jones);
      if (fx.order && fy.order) CHECK(fp.order);
      if (fx.permutation && fy.permutation) CHECK(fp.permutation);
    }
  }
  // randomized at degree 6, within each family
  std::mt19937_64 rng(5);
  for (Family f : {Family::B, Family::M, Family::I, Family::J, Family::O}) {
    const auto all = enumerate(f, 6);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const Diagram &x = all[pick(rng)], &y = all[pick(rng)];
      const FamilyFlags flags = family_membership(x * y);
      const FamilyFlags fs = family_membership(star(x));
      switch (f) {
        case Family::B: CHECK(flags.brauer); CHECK(fs.brauer); break;
        case Family::M: CHECK(flags.planar); CHECK(fs.planar); break;
        case Family::I: CHECK(flags.sym_inverse); CHECK(fs.sym_inverse); break;
        case Family::J: CHECK(flags.jones); CHECK(fs.jones); break;
        case Family::O: CHECK(flags.order); CHECK(fs.order); break;
        default: break;
      }
    }
  }
}

TEST_CASE("idempotents and projections") {
  const Diagram big = Diagram::from_blocks(
      20, {{1, -7}, {8, -8}, {20, -17}, {2, 7}, {3, 4}, {5, 6}, {9, 12},
           {13, 18}, {14, 17}, {15, 16}, {-1, -4}, {-2, -3}, {-9, -16},
           {-10, -11}, {-12, -15}, {-13, -14}, {-18, -20}});
  CHECK(is_planar(big));
  CHECK(is_idempotent(big));

  const Diagram tau = Diagram::from_blocks(5, {{2, 4}, {-2, -4}, {1, -1}, {3, -3}, {5, -5}});
  CHECK(is_projection(tau));
  CHECK(rank_of(tau) == 3);

  const Diagram swap2 = Diagram::from_blocks(2, {{1, -2}, {2, -1}});
  CHECK_FALSE(is_idempotent(swap2));
}

TEST_CASE("associativity, exhaustive at degree <= 2 and sampled at 6") {
  for (int n : {0, 1, 2}) {
    const auto all = enumerate(Family::PB, n);
    for (const Diagram& x : all) {
      for (const Diagram& y : all) {
        for (const Diagram& z : all) {
          CHECK((x * y) * z == x * (y * z));
        }
      }
    }
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Diagram x = random_diagram(6, rng), y = random_diagram(6, rng),
                  z = random_diagram(6, rng);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("floating-count cocycle, exhaustive at degree 3") {
  const auto all = enumerate(Family::PB, 3);
  for (const Diagram& x : all) {
    for (const Diagram& y : all) {
      const ProductResult xy = multiply(x, y);
      for (const Diagram& z : all) {
        const ProductResult yz = multiply(y, z);
        const ProductResult xy_z = multiply(xy.product, z);
        const ProductResult x_yz = multiply(x, yz.product);
        CHECK(xy.loops + xy_z.loops == x_yz.loops + yz.loops);
        CHECK(xy.paths + xy_z.paths == x_yz.paths + yz.paths);
      }
    }
  }
}

TEST_CASE("unfold") {
  const Diagram m6 = Diagram::from_blocks(6, {{2, -3}, {3, 6}, {4, 5}, {-1, -2}, {-4, -6}});
  const Diagram expected = Diagram::from_blocks(
      12, {{3, 6}, {4, 5}, {7, 9}, {11, 12}, {2, 10},
           {-3, -6}, {-4, -5}, {-7, -9}, {-11, -12}, {-2, -10}});
  CHECK(unfold(m6) == expected);
  CHECK(rank_of(unfold(m6)) == 0);
  CHECK(is_projection(unfold(m6)));

  CHECK(unfold(Diagram::identity(1)) ==
        Diagram::from_blocks(2, {{1, 2}, {-1, -2}}));

  // all of M_3 unfolds to 51 distinct rank-0 projections of M_6
  std::set<Diagram> images;
  for (const Diagram& d : enumerate(Family::M, 3)) {
    const Diagram u = unfold(d);
    CHECK(is_projection(u));
    CHECK(rank_of(u) == 0);
    CHECK(is_planar(u));
    images.insert(u);
  }
  CHECK(images.size() == 51);
}
