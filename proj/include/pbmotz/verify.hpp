#ifndef PBMOTZ_VERIFY_HPP_
#define PBMOTZ_VERIFY_HPP_

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pbmotz {

// One checked claim of a verification suite.
struct Claim {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<Claim> claims;

  bool pass() const;
  std::size_t fail_count() const;
  void add(std::string id, std::string expected, std::string computed);
  // convenience: expected/computed stringified from any streamable values
  template <typename E, typename C>
  void check(const std::string& id, const E& expected, const C& computed);

  nlohmann::json to_json() const;
  // One line per claim when verbose, then a summary line; failures are
  // always printed as a diff (-expected / +computed).
  void print(std::ostream& out, bool verbose) const;
};

template <typename E, typename C>
void VerificationReport::check(const std::string& id, const E& expected,
                               const C& computed) {
  std::ostringstream e, c;
  e << std::boolalpha << expected;
  c << std::boolalpha << computed;
  add(id, e.str(), c.str());
}

// The suites exercise only public library operations.

// Reproduces the embedded count/rank tables from the formulas, bit-exactly.
VerificationReport verify_tables();

// Exhaustive cross-validation of the characterized Green's relations against
// the definitional ideal-based oracle on PB_{pb_max} and M_{m_max}.
VerificationReport verify_green(int pb_max = 3, int m_max = 4);

// |enumerate| and |projections| against the counting formulas.
VerificationReport verify_enumeration(int pb_max = 5, int other_max = 6);

// Generated-subsemigroup identities, by explicit closure:
//   a) minimal generating set of I_r(PB_n) closes to I_r, r <= n-2
//   b) minimal generating set of I_r(M_n) closes to I_r, 1 <= r <= n-1
//   c) the 2n-element set closes to M_n
//   d) closure(E(PB_n)) = E(D_n u D_{n-1}) u I_{n-2}  (n <= max_n_d)
//   e) closure(E(M_n)) = the cosparse characterization set
//   f) closure(D_r(I_n)) = I_r(I_n) and likewise for O_n, r <= n-1
VerificationReport verify_closure(int max_n = 5, int max_n_d = 4);

// Membership predicates against closure membership, every element.
VerificationReport verify_membership(int m_max = 5, int pb_max = 4);

// Removing any one generator from the sets of closure checks a)-c) must
// shrink the closure.
VerificationReport verify_minimality(int max_n = 4);

// Recomposition of the five-factor normal form over all of PB_{pb_n} and
// M_{m_n}; gamma is the identity in the planar case.
VerificationReport verify_normal_form(int pb_n = 4, int m_n = 5);

// Twist cocycle, star-product associativity and the anti-involution, on
// seeded random samples.
VerificationReport verify_identities(std::uint64_t seed = 12345);

// Gram matrices: the pinned 2x2 matrix, radical dimensions, semisimplicity
// at (2,1) with the sum-of-squares identity, and the cell-multiplication
// congruence brute-forced over M_2 and M_3.
VerificationReport verify_gram(int max_n = 5);

// Unfolding is injective with image exactly the rank-0 projections of the
// doubled degree.
VerificationReport verify_unfold(int m_max = 4, int pb_max = 3);

}  // namespace pbmotz

#endif  // PBMOTZ_VERIFY_HPP_
