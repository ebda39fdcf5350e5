#include "pbmotz/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "pbmotz/algebra.hpp"
#include "pbmotz/combinatorics.hpp"
#include "pbmotz/diagram.hpp"
#include "pbmotz/monoid.hpp"
#include "pbmotz/reference_tables.hpp"
#include "pbmotz/structure.hpp"

namespace pbmotz {

bool VerificationReport::pass() const { return fail_count() == 0; }

std::size_t VerificationReport::fail_count() const {
  std::size_t fails = 0;
  for (const Claim& c : claims) {
    if (!c.pass) ++fails;
  }
  return fails;
}

void VerificationReport::add(std::string id, std::string expected,
                             std::string computed) {
  Claim c;
  c.id = std::move(id);
  c.pass = expected == computed;
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  claims.push_back(std::move(c));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const Claim& c : claims) {
    cs.push_back({{"id", c.id},
                  {"expected", c.expected},
                  {"computed", c.computed},
                  {"pass", c.pass}});
  }
  return {{"suite", suite}, {"claims", cs}, {"pass", pass()}};
}

void VerificationReport::print(std::ostream& out, bool verbose) const {
  for (const Claim& c : claims) {
    if (c.pass && verbose) {
      out << "ok   " << suite << ": " << c.id << " = " << c.computed << "\n";
    } else if (!c.pass) {
      out << "FAIL " << suite << ": " << c.id << "\n"
          << "  - " << c.expected << "\n"
          << "  + " << c.computed << "\n";
    }
  }
  out << suite << ": " << (claims.size() - fail_count()) << "/" << claims.size()
      << " claims pass\n";
}

namespace {

std::string diagram_set_summary(const std::vector<Diagram>& got,
                                const std::vector<Diagram>& want) {
  if (got == want) return "equal (" + std::to_string(want.size()) + " elements)";
  std::ostringstream os;
  os << "differs: got " << got.size() << " elements, want " << want.size();
  return os.str();
}

std::vector<Diagram> idempotents_of(const std::vector<Diagram>& elements) {
  std::vector<Diagram> out;
  for (const Diagram& d : elements) {
    if (is_idempotent(d)) out.push_back(d);
  }
  return out;
}

}  // namespace

VerificationReport verify_tables() {
  VerificationReport report;
  report.suite = "tables";

  auto check_triangle = [&report](const std::string& id,
                                  const std::vector<std::vector<long long>>& ref,
                                  const std::function<Int(long, long)>& value) {
    std::size_t total = 0;
    std::ostringstream bad;
    for (std::size_t n = 0; n < ref.size(); ++n) {
      for (std::size_t r = 0; r < ref[n].size(); ++r) {
        ++total;
        if (value(n, r) != Int(ref[n][r])) {
          bad << " (n=" << n << ",r=" << r << ": expected " << ref[n][r]
              << ", got " << value(n, r).str() << ")";
        }
      }
    }
    const std::string want = std::to_string(total) + " entries exact";
    report.add(id, want, bad.str().empty() ? want : "mismatches:" + bad.str());
  };

  check_triangle("m(n,r), n <= 7", reference::kMotzkinM,
                 [](long n, long r) { return motzkin_m(n, r); });
  check_triangle("m'(n,r), n <= 7", reference::kRiordanMPrime,
                 [](long n, long r) { return riordan_mprime(n, r); });
  check_triangle("|I_r(PB_n)|, n <= 7", reference::kIdealSizePb,
                 [](long n, long r) { return ideal_size(Family::PB, n, r); });
  check_triangle("|I_r(M_n)|, n <= 7", reference::kIdealSizeM,
                 [](long n, long r) { return ideal_size(Family::M, n, r); });
  check_triangle("rank(I_r(PB_n)), n <= 10", reference::kRankIdealPb,
                 [](long n, long r) { return rank_of_ideal(Family::PB, n, r).rank; });
  check_triangle("rank(I_r(M_n)), n <= 10", reference::kRankIdealM,
                 [](long n, long r) { return rank_of_ideal(Family::M, n, r).rank; });

  auto check_row = [&report](const std::string& id,
                             const std::vector<long long>& ref,
                             const std::function<Int(long)>& value) {
    std::ostringstream bad;
    for (std::size_t n = 0; n < ref.size(); ++n) {
      if (value(n) != Int(ref[n])) {
        bad << " (n=" << n << ": expected " << ref[n] << ", got "
            << value(n).str() << ")";
      }
    }
    const std::string want = std::to_string(ref.size()) + " entries exact";
    report.add(id, want, bad.str().empty() ? want : "mismatches:" + bad.str());
  };

  check_row("rank of idempotent-generated part of PB_n, n <= 20",
            reference::kRankEPb,
            [](long n) { return rank_of_idempotent_generated(Family::PB, n); });
  check_row("rank of idempotent-generated part of M_n, n <= 20",
            reference::kRankEM,
            [](long n) { return rank_of_idempotent_generated(Family::M, n); });

  // idrank agrees with rank wherever the ideal is idempotent-generated
  std::ostringstream bad;
  for (long n = 0; n <= 10; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (Family f : {Family::PB, Family::M}) {
        const IdealRank ir = rank_of_ideal(f, n, r);
        const bool consistent = ir.idempotent_generated
                                    ? (ir.idrank && *ir.idrank == ir.rank)
                                    : !ir.idrank;
        if (!consistent) bad << " (" << family_name(f) << " n=" << n << " r=" << r << ")";
      }
    }
  }
  report.add("idrank present iff idempotent-generated, and equal to rank",
             "consistent", bad.str().empty() ? "consistent" : "violations:" + bad.str());
  return report;
}

VerificationReport verify_green(int pb_max, int m_max) {
  VerificationReport report;
  report.suite = "green";
  const GreenRelation rels[] = {GreenRelation::R, GreenRelation::L,
                                GreenRelation::H, GreenRelation::D,
                                GreenRelation::J};
  auto run_family = [&](Family f, int n) {
    const GreenOracle oracle(f, n);
    const auto& elements = oracle.elements();
    std::size_t checks = 0, disagreements = 0;
    for (const Diagram& a : elements) {
      for (const Diagram& b : elements) {
        for (GreenRelation rel : rels) {
          ++checks;
          if (green_related(a, b, rel) != oracle.related(a, b, rel)) {
            ++disagreements;
          }
        }
      }
    }
    std::ostringstream id;
    id << "characterization vs ideal oracle on " << family_name(f) << "_" << n
       << " (" << checks << " pair-relation checks)";
    report.add(id.str(), "0 disagreements",
               std::to_string(disagreements) + " disagreements");
  };
  run_family(Family::PB, pb_max);
  run_family(Family::M, m_max);
  return report;
}

VerificationReport verify_enumeration(int pb_max, int other_max) {
  VerificationReport report;
  report.suite = "enumeration";
  const Family families[] = {Family::PB, Family::B, Family::M, Family::I,
                             Family::J,  Family::O, Family::S};
  for (Family f : families) {
    const int max_n = f == Family::PB ? pb_max : other_max;
    for (int n = 0; n <= max_n; ++n) {
      std::ostringstream bad;
      Int total = 0;
      for (int r = 0; r <= n; ++r) {
        if (family_has_parity(f) && (n - r) % 2 != 0) continue;
        const Int want_d = dclass_size(f, n, r);
        const Int want_p = rclass_count(f, n, r);
        const auto dclass = enumerate(f, n, r);
        const auto projs = projections(f, n, r);
        total += Int(dclass.size());
        if (Int(dclass.size()) != want_d) {
          bad << " |D_" << r << "|=" << dclass.size() << " (want " << want_d.str() << ")";
        }
        if (Int(projs.size()) != want_p) {
          bad << " |P(D_" << r << ")|=" << projs.size() << " (want " << want_p.str() << ")";
        }
      }
      if (total != monoid_size(f, n)) {
        bad << " monoid total " << total.str() << " (want "
            << monoid_size(f, n).str() << ")";
      }
      std::ostringstream id;
      id << family_name(f) << "_" << n << " sizes vs formulas";
      report.add(id.str(), "all match",
                 bad.str().empty() ? "all match" : "mismatch:" + bad.str());
    }
  }
  return report;
}

VerificationReport verify_closure(int max_n, int max_n_d) {
  VerificationReport report;
  report.suite = "closure";

  // a) minimal generating set of I_r(PB_n) closes to the ideal, r <= n-2
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 0; r <= n - 2; ++r) {
      const auto got = closure(minimal_generating_set(GenTarget::IdealPb, n, r));
      const auto want = ideal(Family::PB, n, r);
      std::ostringstream id;
      id << "a) <gens(I_" << r << "(PB_" << n << "))> = I_" << r << "(PB_" << n << ")";
      report.add(id.str(), "equal (" + std::to_string(want.size()) + " elements)",
                 diagram_set_summary(got, want));
    }
  }

  // b) minimal generating set of I_r(M_n) closes to the ideal, 1 <= r <= n-1
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 1; r <= n - 1; ++r) {
      const auto got = closure(minimal_generating_set(GenTarget::IdealM, n, r));
      const auto want = ideal(Family::M, n, r);
      std::ostringstream id;
      id << "b) <gens(I_" << r << "(M_" << n << "))> = I_" << r << "(M_" << n << ")";
      report.add(id.str(), "equal (" + std::to_string(want.size()) + " elements)",
                 diagram_set_summary(got, want));
    }
  }

  // c) the 2n-element set generates M_n
  for (int n = 1; n <= max_n; ++n) {
    const auto gens = minimal_generating_set(GenTarget::MonoidM, n);
    const auto got = closure(gens);
    const auto want = enumerate(Family::M, n);
    std::ostringstream id;
    id << "c) " << gens.size() << "-element set generates M_" << n;
    report.add(id.str(), "equal (" + std::to_string(want.size()) + " elements)",
               diagram_set_summary(got, want));
  }

  // d) closure of all idempotents of PB_n
  for (int n = 0; n <= max_n_d; ++n) {
    const auto all = enumerate(Family::PB, n);
    const auto got = closure(idempotents_of(all));
    std::vector<Diagram> want;
    for (const Diagram& d : all) {
      if (rank_of(d) <= n - 2 || is_idempotent(d)) want.push_back(d);
    }
    std::ostringstream id;
    id << "d) <E(PB_" << n << ")> = E(D_n u D_{n-1}) u I_{n-2}";
    report.add(id.str(), "equal (" + std::to_string(want.size()) + " elements)",
               diagram_set_summary(got, want));
  }

  // e) closure of all idempotents of M_n vs the cosparse characterization,
  //    and the (3n-2)-element projection set generates the same subsemigroup
  for (int n = 0; n <= max_n; ++n) {
    const auto all = enumerate(Family::M, n);
    const auto got = closure(idempotents_of(all));
    std::vector<Diagram> want;
    for (const Diagram& d : all) {
      if (in_idempotent_generated(d, IdempotentScope::MWhole)) want.push_back(d);
    }
    std::ostringstream id;
    id << "e) <E(M_" << n << ")> = cosparse characterization set";
    report.add(id.str(), "equal (" + std::to_string(want.size()) + " elements)",
               diagram_set_summary(got, want));
    if (n >= 2) {
      const auto small = closure(minimal_generating_set(GenTarget::EMonoidM, n));
      std::ostringstream id2;
      id2 << "e) the " << 3 * n - 2 << "-projection set also generates <E(M_" << n
          << ")>";
      report.add(id2.str(), "equal (" + std::to_string(want.size()) + " elements)",
                 diagram_set_summary(small, want));
    }
  }

  // f) a D-class of I_n / O_n generates the whole ideal below it
  for (Family f : {Family::I, Family::O}) {
    for (int n = 1; n <= max_n; ++n) {
      for (int r = 0; r <= n - 1; ++r) {
        const auto got = closure(enumerate(f, n, r));
        const auto want = ideal(f, n, r);
        std::ostringstream id;
        id << "f) <D_" << r << "(" << family_name(f) << "_" << n << ")> = I_" << r;
        report.add(id.str(), "equal (" + std::to_string(want.size()) + " elements)",
                   diagram_set_summary(got, want));
      }
    }
  }
  return report;
}

VerificationReport verify_membership(int m_max, int pb_max) {
  VerificationReport report;
  report.suite = "membership";

  // <D_r> membership vs the closed-form predicate, every element of rank <= r
  for (Family f : {Family::M, Family::PB}) {
    const int max_n = f == Family::M ? m_max : pb_max;
    for (int n = 2; n <= max_n; ++n) {
      for (int r = 0; r <= n - 2; ++r) {
        const auto gens = enumerate(f, n, r);
        const auto generated = closure(gens);
        const std::set<Diagram> in_closure(generated.begin(), generated.end());
        std::size_t checked = 0, wrong = 0;
        for (const Diagram& d : ideal(f, n, r)) {
          ++checked;
          if (in_ideal_generated_by_dr(d, f, r) != (in_closure.count(d) > 0)) {
            ++wrong;
          }
        }
        std::ostringstream id;
        id << "<D_" << r << "(" << family_name(f) << "_" << n << ")> predicate ("
           << checked << " elements)";
        report.add(id.str(), "0 disagreements",
                   std::to_string(wrong) + " disagreements");
      }
    }
  }

  // idempotent-generated subsemigroup of PB_n
  for (int n = 2; n <= pb_max; ++n) {
    const auto all = enumerate(Family::PB, n);
    const auto generated = closure(idempotents_of(all));
    const std::set<Diagram> in_gen(generated.begin(), generated.end());
    std::size_t wrong = 0;
    for (const Diagram& d : all) {
      if (in_idempotent_generated(d, IdempotentScope::PbWhole) !=
          (in_gen.count(d) > 0)) {
        ++wrong;
      }
    }
    std::ostringstream id;
    id << "E(PB_" << n << ") predicate (" << all.size() << " elements)";
    report.add(id.str(), "0 disagreements", std::to_string(wrong) + " disagreements");
  }

  // idempotent-generated subsemigroup of M_n and of its ideals
  for (int n = 2; n <= m_max; ++n) {
    const auto all = enumerate(Family::M, n);
    const auto generated = closure(idempotents_of(all));
    const std::set<Diagram> in_gen(generated.begin(), generated.end());
    std::size_t wrong = 0;
    for (const Diagram& d : all) {
      if (in_idempotent_generated(d, IdempotentScope::MWhole) !=
          (in_gen.count(d) > 0)) {
        ++wrong;
      }
    }
    std::ostringstream id;
    id << "E(M_" << n << ") predicate (" << all.size() << " elements)";
    report.add(id.str(), "0 disagreements", std::to_string(wrong) + " disagreements");

    for (int r = 1; r <= n - 2; ++r) {
      const auto elements = ideal(Family::M, n, r);
      const auto sub = closure(idempotents_of(elements));
      const std::set<Diagram> in_sub(sub.begin(), sub.end());
      std::size_t bad = 0;
      for (const Diagram& d : elements) {
        if (in_idempotent_generated(d, IdempotentScope::MIdeal, r) !=
            (in_sub.count(d) > 0)) {
          ++bad;
        }
      }
      std::ostringstream iid;
      iid << "E(I_" << r << "(M_" << n << ")) predicate (" << elements.size()
          << " elements)";
      report.add(iid.str(), "0 disagreements", std::to_string(bad) + " disagreements");
    }
  }
  return report;
}

VerificationReport verify_minimality(int max_n) {
  VerificationReport report;
  report.suite = "minimality";

  auto check_set = [&report](const std::string& label,
                             const std::vector<Diagram>& gens) {
    const auto target = closure(gens);
    std::size_t removable = 0;
    for (std::size_t skip = 0; skip < gens.size(); ++skip) {
      std::vector<Diagram> reduced;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != skip) reduced.push_back(gens[i]);
      }
      if (closure(reduced).size() == target.size()) ++removable;
    }
    report.add(label + " (" + std::to_string(gens.size()) + " generators)",
               "no generator removable",
               removable == 0 ? "no generator removable"
                              : std::to_string(removable) + " removable");
  };

  for (int n = 2; n <= max_n; ++n) {
    for (int r = 0; r <= n - 2; ++r) {
      check_set("gens(I_" + std::to_string(r) + "(PB_" + std::to_string(n) + "))",
                minimal_generating_set(GenTarget::IdealPb, n, r));
    }
    for (int r = 1; r <= n - 1; ++r) {
      check_set("gens(I_" + std::to_string(r) + "(M_" + std::to_string(n) + "))",
                minimal_generating_set(GenTarget::IdealM, n, r));
    }
    check_set("gens(M_" + std::to_string(n) + ")",
              minimal_generating_set(GenTarget::MonoidM, n));
  }
  return report;
}

VerificationReport verify_normal_form(int pb_n, int m_n) {
  VerificationReport report;
  report.suite = "normal-form";

  auto recompose = [](const NormalForm& nf) {
    return nf.beta * nf.lam * nf.gam * nf.rho * nf.delta;
  };

  {
    std::size_t wrong = 0;
    const auto all = enumerate(Family::PB, pb_n);
    for (const Diagram& d : all) {
      const NormalForm nf = normal_form(d);
      const int r = rank_of(d);
      if (recompose(nf) != d || rank_of(nf.beta) != r || rank_of(nf.lam) != r ||
          rank_of(nf.gam) != r || rank_of(nf.rho) != r || rank_of(nf.delta) != r) {
        ++wrong;
      }
    }
    report.add("five-factor recomposition over PB_" + std::to_string(pb_n) + " (" +
                   std::to_string(all.size()) + " elements)",
               "0 failures", std::to_string(wrong) + " failures");
  }
  {
    std::size_t wrong = 0, nonplanar = 0, gamma_bad = 0;
    const auto all = enumerate(Family::M, m_n);
    for (const Diagram& d : all) {
      const NormalForm nf = normal_form(d);
      if (recompose(nf) != d) ++wrong;
      std::vector<int> full(rank_of(d));
      std::iota(full.begin(), full.end(), 1);
      if (nf.gam != id_a(full, d.degree())) ++gamma_bad;
      if (!is_planar(nf.beta) || !is_planar(nf.delta)) ++nonplanar;
    }
    report.add("recomposition over M_" + std::to_string(m_n) + " (" +
                   std::to_string(all.size()) + " elements)",
               "0 failures", std::to_string(wrong) + " failures");
    report.add("planar case: gamma is the identity on {1..r}", "0 exceptions",
               std::to_string(gamma_bad) + " exceptions");
    report.add("planar case: beta and delta are planar", "0 exceptions",
               std::to_string(nonplanar) + " exceptions");
  }
  return report;
}

VerificationReport verify_identities(std::uint64_t seed) {
  VerificationReport report;
  report.suite = "identities";
  std::mt19937_64 rng(seed);

  const auto pb5 = enumerate(Family::PB, 5);
  std::uniform_int_distribution<std::size_t> pick5(0, pb5.size() - 1);

  {
    std::size_t bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Diagram &a = pb5[pick5(rng)], &b = pb5[pick5(rng)], &c = pb5[pick5(rng)];
      const ProductResult ab = multiply(a, b), bc = multiply(b, c);
      const ProductResult ab_c = multiply(ab.product, c), a_bc = multiply(a, bc.product);
      if (ab.loops + ab_c.loops != a_bc.loops + bc.loops ||
          ab.paths + ab_c.paths != a_bc.paths + bc.paths ||
          ab_c.product != a_bc.product) {
        ++bad;
      }
    }
    report.add("twist cocycle + associativity on 1000 random triples in PB_5",
               "0 failures", std::to_string(bad) + " failures");
  }

  const auto m4 = enumerate(Family::M, 4);
  std::uniform_int_distribution<std::size_t> pick4(0, m4.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2);
  auto random_element = [&](int terms) {
    AlgebraElement e(Family::M, 4);
    for (int t = 0; t < terms; ++t) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      e.add_term(m4[pick4(rng)], Polynomial2::monomial(expo(rng), expo(rng), c));
    }
    return e;
  };

  {
    std::size_t bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const AlgebraElement u = random_element(3), v = random_element(3),
                           w = random_element(3);
      if (elem_mul(elem_mul(u, v), w) != elem_mul(u, elem_mul(v, w))) ++bad;
    }
    report.add("star-product associativity on 100 random 3-term elements of M_4",
               "0 failures", std::to_string(bad) + " failures");
  }

  {
    std::size_t bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const AlgebraElement u = random_element(2), v = random_element(2);
      if (elem_mul(u, v).star_element() !=
          elem_mul(v.star_element(), u.star_element())) {
        ++bad;
      }
    }
    report.add("anti-involution (u*v)^* = v^* u^* on 1000 random pairs",
               "0 failures", std::to_string(bad) + " failures");
  }

  {
    // distributivity comes with bilinearity; spot-check anyway
    std::size_t bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const AlgebraElement u = random_element(2), v = random_element(2),
                           w = random_element(2);
      if (elem_mul(u, v + w) != elem_mul(u, v) + elem_mul(u, w)) ++bad;
    }
    report.add("distributivity on 100 random triples", "0 failures",
               std::to_string(bad) + " failures");
  }
  return report;
}

VerificationReport verify_gram(int max_n) {
  VerificationReport report;
  report.suite = "gram";

  {
    const GramMatrix g = gram_matrix(2, 0);
    const Polynomial2 y2 = Polynomial2::monomial(0, 2);
    const Polynomial2 y = Polynomial2::monomial(0, 1);
    const Polynomial2 x = Polynomial2::monomial(1, 0);
    const bool match = g.basis.size() == 2 && g.entries[0][0] == y2 &&
                       g.entries[0][1] == y && g.entries[1][0] == y &&
                       g.entries[1][1] == x;
    report.add("gram(2,0) = [[y^2, y], [y, x]]", "exact",
               match ? "exact" : "differs");
  }
  {
    const GramMatrix g = gram_matrix(1, 0);
    const bool match =
        g.basis.size() == 1 && g.entries[0][0] == Polynomial2::monomial(0, 1);
    report.add("gram(1,0) = [y]", "exact", match ? "exact" : "differs");
  }
  report.check("radical_dim(2,0) at (1,1)", 1, gram_rank_at(2, 0, 1, 1).radical_dim);
  report.check("radical_dim(2,0) at (2,1)", 0, gram_rank_at(2, 0, 2, 1).radical_dim);
  report.check("semisimple(2) at (1,1)", false, semisimple_check(2, 1, 1));

  for (int n = 0; n <= max_n; ++n) {
    report.check("semisimple(" + std::to_string(n) + ") at (2,1)", true,
                 semisimple_check(n, 2, 1));
  }

  for (int n = 0; n <= max_n; ++n) {
    Int total = 0;
    for (int r = 0; r <= n; ++r) {
      const long dim = gram_rank_at(n, r, 2, 1).dim_l;
      total += Int(dim) * Int(dim);
    }
    report.check(
        "sum of dim(L_r)^2 over r at (2,1) = |M_" + std::to_string(n) + "|",
        monoid_size(Family::M, n).str(), total.str());
  }

  // diagnostics at a nondegenerate point
  for (int n = 0; n <= max_n; ++n) {
    report.check("semisimple(" + std::to_string(n) + ") at (3,1)", true,
                 semisimple_check(n, 3, 1));
    Int total = 0;
    for (int r = 0; r <= n; ++r) {
      const long dim = gram_rank_at(n, r, 3, 1).dim_l;
      total += Int(dim) * Int(dim);
    }
    report.check(
        "sum of dim(L_r)^2 over r at (3,1) = |M_" + std::to_string(n) + "|",
        monoid_size(Family::M, n).str(), total.str());
  }

  // cell multiplication congruence, brute force over M_2 and M_3:
  // C_{s,t} C_{u,v} has rank r iff the gram entry (t,u) is nonzero, in which
  // case the product diagram is C_{s,v} and the twist is that entry.
  for (int n = 2; n <= 3; ++n) {
    std::size_t checks = 0, bad = 0;
    for (int r = 0; r <= n; ++r) {
      const GramMatrix g = gram_matrix(n, r);
      const auto& basis = g.basis;
      for (std::size_t s = 0; s < basis.size(); ++s) {
        for (std::size_t t = 0; t < basis.size(); ++t) {
          const Diagram cst = hclass_element(basis[s], basis[t]);
          for (std::size_t u = 0; u < basis.size(); ++u) {
            for (std::size_t v = 0; v < basis.size(); ++v) {
              ++checks;
              const Diagram cuv = hclass_element(basis[u], basis[v]);
              const ProductResult pr = multiply(cst, cuv);
              const Polynomial2& entry = g.entries[t][u];
              if (rank_of(pr.product) == r) {
                const Polynomial2 tw = Polynomial2::monomial(pr.loops, pr.paths);
                if (entry != tw || pr.product != hclass_element(basis[s], basis[v])) {
                  ++bad;
                }
              } else if (!entry.is_zero()) {
                ++bad;
              }
            }
          }
        }
      }
    }
    report.add("cell congruence over M_" + std::to_string(n) + " (" +
                   std::to_string(checks) + " products)",
               "0 violations", std::to_string(bad) + " violations");
  }
  return report;
}

VerificationReport verify_unfold(int m_max, int pb_max) {
  VerificationReport report;
  report.suite = "unfold";
  for (Family f : {Family::M, Family::PB}) {
    const int max_n = f == Family::M ? m_max : pb_max;
    for (int n = 0; n <= max_n; ++n) {
      std::set<Diagram> images;
      const auto all = enumerate(f, n);
      for (const Diagram& d : all) images.insert(unfold(d));
      const auto want = projections(f, 2 * n, 0);
      const bool injective = images.size() == all.size();
      const bool onto = std::equal(images.begin(), images.end(), want.begin(),
                                   want.end());
      std::ostringstream id;
      id << "unfold " << family_name(f) << "_" << n << " -> rank-0 projections of "
         << family_name(f) << "_" << 2 * n;
      report.add(id.str(), "bijective",
                 injective && onto
                     ? "bijective"
                     : injective ? "injective but not onto" : "not injective");
    }
  }
  return report;
}

}  // namespace pbmotz
