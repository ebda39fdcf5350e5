#ifndef PBMOTZ_STRUCTURE_HPP_
#define PBMOTZ_STRUCTURE_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "pbmotz/diagram.hpp"
#include "pbmotz/family.hpp"

namespace pbmotz {

// ---------------------------------------------------------------------------
// Named generators
// ---------------------------------------------------------------------------

// lambda_A: the order-preserving partial injection with domain A and
// codomain {1..|A|}; rho_A is its star.
Diagram lambda_a(const std::vector<int>& a, int n);
Diagram rho_a(const std::vector<int>& a, int n);
// id_A: the identity restricted to A.
Diagram id_a(const std::vector<int>& a, int n);
// sigma_ij: the transposition of i and j.
Diagram sigma_ij(int i, int j, int n);
// tau_ij: the rank-(n-2) projection with hooks {i,j} top and bottom.
Diagram tau_ij(int i, int j, int n);
// eps_k: the rank-(n-1) projection omitting k.
Diagram eps_k(int k, int n);
// mu_k: the rank-(n-3) projection with hooks {k,k+2} and singletons {k+1}.
Diagram mu_k(int k, int n);
// alpha_j: the order map collapsing j+1 onto j.
Diagram alpha_j(int j, int n);
// beta: the shift i -> i+1 (domain {1..n-1}, codomain {2..n}).
Diagram beta_shift(int n);

enum class GeneratorKind {
  LambdaA,
  RhoA,
  IdA,
  SigmaIJ,
  TauIJ,
  EpsK,
  TauAdjJ,
  MuK,
  AlphaJ,
  Beta,
};

GeneratorKind parse_generator_kind(std::string_view tag);

struct GeneratorParams {
  std::vector<int> set_a;  // for lambda_A / rho_A / id_A
  int i = 0, j = 0, k = 0;
};

Diagram generator(GeneratorKind kind, const GeneratorParams& p, int n);

// ---------------------------------------------------------------------------
// Normal form
// ---------------------------------------------------------------------------

// The factorization alpha = beta . lambda_{dom} . gamma . rho_{codom} . delta
// with beta, delta idempotents of rank(alpha) carrying the upper and lower
// halves, and gamma the partial permutation with domain and codomain
// {1..r} induced by the transversals.  For planar alpha, gamma is the
// identity on {1..r} and beta, delta are planar.
struct NormalForm {
  Diagram beta, lam, gam, rho, delta;
};

NormalForm normal_form(const Diagram& a);

// ---------------------------------------------------------------------------
// Sparse sets and nesting
// ---------------------------------------------------------------------------

// A is sparse in [n] if it contains no two consecutive integers; cosparse if
// its complement is sparse.
bool is_sparse(const std::vector<int>& a, int n);
bool is_cosparse(const std::vector<int>& a, int n);

enum class Side { Upper, Lower };

// Nesting depth of a non-transversal block (given by its 1-based points,
// unprimed for either side): the longest chain of hooks strictly enclosing
// it.  Throws NotANontransversalBlockError if the points do not form a
// non-transversal block of that side.
int nesting_depth(const Diagram& a, Side side, const std::vector<int>& block);

bool has_unnested_singleton(const Diagram& a, Side side);

// ---------------------------------------------------------------------------
// Membership characterizations
// ---------------------------------------------------------------------------

// Whether alpha lies in the subsemigroup generated by the rank-r D-class of
// PB_n or M_n.  Closed form for rank(alpha) <= r <= n-2; throws
// TheoremRangeError for r > n-2 (use closure there).
bool in_ideal_generated_by_dr(const Diagram& a, Family f, int r);

enum class IdempotentScope { PbWhole, MWhole, MIdeal };

// Whether alpha lies in the idempotent-generated subsemigroup of PB_n, of
// M_n, or of I_r(M_n) (scope MIdeal, 1 <= r <= n-2).
bool in_idempotent_generated(const Diagram& a, IdempotentScope scope,
                             std::optional<int> r = {});

// ---------------------------------------------------------------------------
// Minimal generating sets
// ---------------------------------------------------------------------------

enum class GenTarget {
  IdealPb,   // I_r(PB_n), 0 <= r <= n-2
  IdealM,    // I_r(M_n),  0 <= r <= n-1
  EMonoidM,  // idempotent-generated subsemigroup of M_n, n >= 2
  MonoidM,   // M_n itself
};

// A generating set of minimal size for the target; its size matches
// rank_of_ideal / rank_of_idempotent_generated and its closure equals the
// target set.
std::vector<Diagram> minimal_generating_set(GenTarget target, int n, int r = -1);

}  // namespace pbmotz

#endif  // PBMOTZ_STRUCTURE_HPP_
