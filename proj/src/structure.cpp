#include "pbmotz/structure.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>

#include "pbmotz/errors.hpp"
#include "pbmotz/monoid.hpp"

namespace pbmotz {

namespace {

void check_point(int p, int n, const char* what) {
  if (p < 1 || p > n) {
    throw OutOfRangeError(std::string(what) + " " + std::to_string(p) +
                          " out of range for degree " + std::to_string(n));
  }
}

std::vector<int> sorted_unique(std::vector<int> a, int n) {
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_point(a[i], n, "point");
    if (i > 0 && a[i] == a[i - 1]) throw DuplicatePointError("repeated point");
  }
  return a;
}

}  // namespace

Diagram lambda_a(const std::vector<int>& a, int n) {
  const std::vector<int> dom = sorted_unique(a, n);
  std::vector<std::vector<int>> blocks;
  for (std::size_t t = 0; t < dom.size(); ++t) {
    blocks.push_back({dom[t], -static_cast<int>(t + 1)});
  }
  return Diagram::from_blocks(n, blocks);
}

Diagram rho_a(const std::vector<int>& a, int n) { return star(lambda_a(a, n)); }

Diagram id_a(const std::vector<int>& a, int n) {
  std::vector<std::vector<int>> blocks;
  for (int p : sorted_unique(a, n)) blocks.push_back({p, -p});
  return Diagram::from_blocks(n, blocks);
}

Diagram sigma_ij(int i, int j, int n) {
  check_point(i, n, "i");
  check_point(j, n, "j");
  if (i == j) throw OutOfRangeError("transposition needs i != j");
  std::vector<std::vector<int>> blocks;
  for (int p = 1; p <= n; ++p) {
    const int q = p == i ? j : p == j ? i : p;
    blocks.push_back({p, -q});
  }
  return Diagram::from_blocks(n, blocks);
}

Diagram tau_ij(int i, int j, int n) {
  check_point(i, n, "i");
  check_point(j, n, "j");
  if (i == j) throw OutOfRangeError("hook needs i != j");
  std::vector<std::vector<int>> blocks{{i, j}, {-i, -j}};
  for (int p = 1; p <= n; ++p) {
    if (p != i && p != j) blocks.push_back({p, -p});
  }
  return Diagram::from_blocks(n, blocks);
}

Diagram eps_k(int k, int n) {
  check_point(k, n, "k");
  std::vector<std::vector<int>> blocks;
  for (int p = 1; p <= n; ++p) {
    if (p != k) blocks.push_back({p, -p});
  }
  return Diagram::from_blocks(n, blocks);
}

Diagram mu_k(int k, int n) {
  check_point(k, n, "k");
  check_point(k + 2, n, "k+2");
  std::vector<std::vector<int>> blocks{{k, k + 2}, {-k, -(k + 2)}};
  for (int p = 1; p <= n; ++p) {
    if (p < k || p > k + 2) blocks.push_back({p, -p});
  }
  return Diagram::from_blocks(n, blocks);
}

Diagram alpha_j(int j, int n) {
  check_point(j, n, "j");
  check_point(j + 1, n, "j+1");
  std::vector<std::vector<int>> blocks{{j + 1, -j}};
  for (int p = 1; p <= n; ++p) {
    if (p != j && p != j + 1) blocks.push_back({p, -p});
  }
  return Diagram::from_blocks(n, blocks);
}

Diagram beta_shift(int n) {
  if (n < 0) throw OutOfRangeError("degree must be non-negative");
  std::vector<std::vector<int>> blocks;
  for (int p = 1; p < n; ++p) blocks.push_back({p, -(p + 1)});
  return Diagram::from_blocks(n, blocks);
}

GeneratorKind parse_generator_kind(std::string_view tag) {
  std::string t(tag);
  for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "lambda_a") return GeneratorKind::LambdaA;
  if (t == "rho_a") return GeneratorKind::RhoA;
  if (t == "id_a") return GeneratorKind::IdA;
  if (t == "sigma_ij") return GeneratorKind::SigmaIJ;
  if (t == "tau_ij") return GeneratorKind::TauIJ;
  if (t == "eps_k") return GeneratorKind::EpsK;
  if (t == "tau_adj_j") return GeneratorKind::TauAdjJ;
  if (t == "mu_k") return GeneratorKind::MuK;
  if (t == "alpha_j") return GeneratorKind::AlphaJ;
  if (t == "beta") return GeneratorKind::Beta;
  throw ParseError("unknown generator kind '" + std::string(tag) + "'");
}

Diagram generator(GeneratorKind kind, const GeneratorParams& p, int n) {
  switch (kind) {
    case GeneratorKind::LambdaA: return lambda_a(p.set_a, n);
    case GeneratorKind::RhoA: return rho_a(p.set_a, n);
    case GeneratorKind::IdA: return id_a(p.set_a, n);
    case GeneratorKind::SigmaIJ: return sigma_ij(p.i, p.j, n);
    case GeneratorKind::TauIJ: return tau_ij(p.i, p.j, n);
    case GeneratorKind::EpsK: return eps_k(p.k, n);
    case GeneratorKind::TauAdjJ: return tau_ij(p.j, p.j + 1, n);
    case GeneratorKind::MuK: return mu_k(p.k, n);
    case GeneratorKind::AlphaJ: return alpha_j(p.j, n);
    case GeneratorKind::Beta: return beta_shift(n);
  }
  throw Error("unknown generator kind");
}

NormalForm normal_form(const Diagram& a) {
  const int n = a.degree();
  const DiagramStats s = stats(a);
  const int r = s.rank;

  // beta: upper half of a on top, identity on dom(a) below.
  std::vector<std::vector<int>> beta_blocks;
  for (const auto& [x, y] : s.ker_pairs) beta_blocks.push_back({x, y});
  for (int d : s.dom) beta_blocks.push_back({d, -d});
  // delta: identity on codom(a) on top, lower half of a below.
  std::vector<std::vector<int>> delta_blocks;
  for (const auto& [x, y] : s.coker_pairs) delta_blocks.push_back({-x, -y});
  for (int c : s.codom) delta_blocks.push_back({c, -c});

  // gamma: the transversal-induced permutation of {1..r} as a partial map
  // with domain and codomain exactly {1..r}.
  std::vector<std::vector<int>> gam_blocks;
  for (int u = 0; u < r; ++u) {
    const int top = s.dom[u];                 // u-th domain point, 1-based
    const int image = a.mate(top - 1) - n + 1;  // its codomain point
    const auto it = std::lower_bound(s.codom.begin(), s.codom.end(), image);
    const int v = static_cast<int>(it - s.codom.begin());
    gam_blocks.push_back({u + 1, -(v + 1)});
  }

  NormalForm nf;
  nf.beta = Diagram::from_blocks(n, beta_blocks);
  nf.lam = lambda_a(s.dom, n);
  nf.gam = Diagram::from_blocks(n, gam_blocks);
  nf.rho = rho_a(s.codom, n);
  nf.delta = Diagram::from_blocks(n, delta_blocks);
  return nf;
}

bool is_sparse(const std::vector<int>& a, int n) {
  std::vector<bool> in(n + 2, false);
  for (int p : a) {
    check_point(p, n, "point");
    in[p] = true;
  }
  for (int p = 1; p < n; ++p) {
    if (in[p] && in[p + 1]) return false;
  }
  return true;
}

bool is_cosparse(const std::vector<int>& a, int n) {
  std::vector<bool> in(n + 1, false);
  for (int p : a) {
    check_point(p, n, "point");
    in[p] = true;
  }
  std::vector<int> complement;
  for (int p = 1; p <= n; ++p) {
    if (!in[p]) complement.push_back(p);
  }
  return is_sparse(complement, n);
}

namespace {

// non-transversal blocks of one side, as ascending (min, max) pairs over
// 1..n; singletons have min == max
std::vector<std::pair<int, int>> side_blocks(const Diagram& a, Side side) {
  const int n = a.degree();
  const int base = side == Side::Upper ? 0 : n;
  std::vector<std::pair<int, int>> out;
  for (int v = base; v < base + n; ++v) {
    const int w = a.mate(v);
    if (w == v) {
      out.emplace_back(v - base + 1, v - base + 1);
    } else if (w >= base && w < base + n && w > v) {
      out.emplace_back(v - base + 1, w - base + 1);
    }
  }
  return out;
}

int depth_of(const std::pair<int, int>& block,
             const std::vector<std::pair<int, int>>& hooks) {
  int best = 0;
  for (const auto& h : hooks) {
    if (h.first < block.first && block.second < h.second) {
      best = std::max(best, 1 + depth_of(h, hooks));
    }
  }
  return best;
}

}  // namespace

int nesting_depth(const Diagram& a, Side side, const std::vector<int>& block) {
  std::vector<int> b = block;
  std::sort(b.begin(), b.end());
  if (b.empty() || b.size() > 2) {
    throw NotANontransversalBlockError("block must have one or two points");
  }
  const std::pair<int, int> key{b.front(), b.back()};
  const auto blocks = side_blocks(a, side);
  if (std::find(blocks.begin(), blocks.end(), key) == blocks.end()) {
    throw NotANontransversalBlockError(
        "not a non-transversal block of the given side");
  }
  std::vector<std::pair<int, int>> hooks;
  for (const auto& blk : blocks) {
    if (blk.first != blk.second) hooks.push_back(blk);
  }
  return depth_of(key, hooks);
}

bool has_unnested_singleton(const Diagram& a, Side side) {
  const auto blocks = side_blocks(a, side);
  std::vector<std::pair<int, int>> hooks;
  for (const auto& blk : blocks) {
    if (blk.first != blk.second) hooks.push_back(blk);
  }
  for (const auto& blk : blocks) {
    if (blk.first == blk.second && depth_of(blk, hooks) == 0) return true;
  }
  return false;
}

namespace {

// least nesting depth over the singletons of one side; -1 when there is none
int min_singleton_depth(const Diagram& a, Side side) {
  const auto blocks = side_blocks(a, side);
  std::vector<std::pair<int, int>> hooks;
  for (const auto& blk : blocks) {
    if (blk.first != blk.second) hooks.push_back(blk);
  }
  int best = -1;
  for (const auto& blk : blocks) {
    if (blk.first != blk.second) continue;
    const int d = depth_of(blk, hooks);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace

bool in_ideal_generated_by_dr(const Diagram& a, Family f, int r) {
  if (f != Family::PB && f != Family::M) {
    throw FamilyMismatchError("characterized for PB and M only");
  }
  const int n = a.degree();
  if (r > n - 2) {
    throw TheoremRangeError(
        "membership in <D_r> is characterized for r <= n-2 only");
  }
  const int s = rank_of(a);
  if (s > r || r < 0) {
    throw OutOfRangeError("need rank(alpha) <= r");
  }
  if (f == Family::M && !is_planar(a)) {
    throw FamilyMismatchError("diagram is not planar");
  }
  if ((r - s) % 2 == 0) return true;
  if (f == Family::PB) {
    if ((n - r) % 2 == 0) return true;  // I_r = <D_r> at this parity
    return min_singleton_depth(a, Side::Upper) >= 0 &&
           min_singleton_depth(a, Side::Lower) >= 0;
  }
  const int k = (r - s - 1) / 2;
  const int up = min_singleton_depth(a, Side::Upper);
  const int low = min_singleton_depth(a, Side::Lower);
  return up >= 0 && up <= k && low >= 0 && low <= k;
}

bool in_idempotent_generated(const Diagram& a, IdempotentScope scope,
                             std::optional<int> r) {
  const int n = a.degree();
  const DiagramStats s = stats(a);
  switch (scope) {
    case IdempotentScope::PbWhole:
      if (s.rank <= n - 2) return true;
      return is_idempotent(a);  // E(D_n) = {1}, E(D_{n-1}) = {eps_k}
    case IdempotentScope::MWhole:
    case IdempotentScope::MIdeal: {
      if (!is_planar(a)) throw FamilyMismatchError("diagram is not planar");
      if (scope == IdempotentScope::MIdeal) {
        if (!r || *r < 1 || *r > n - 2) {
          throw TheoremRangeError(
              "E(I_r(M_n)) is characterized for 1 <= r <= n-2");
        }
        if (s.rank > *r) return false;
      }
      if (a == id_a(s.dom, n)) return true;
      return !is_cosparse(s.dom, n) && !is_cosparse(s.codom, n);
    }
  }
  throw Error("unknown scope");
}

std::vector<Diagram> minimal_generating_set(GenTarget target, int n, int r) {
  switch (target) {
    case GenTarget::IdealPb: {
      if (r < 0 || r > n - 2) {
        throw TheoremRangeError("I_r(PB_n) generating set needs 0 <= r <= n-2");
      }
      std::vector<Diagram> gens = projections(Family::PB, n, r);
      if (r >= 1 && (n - (r - 1)) % 2 == 0) {
        const auto brauer = projections(Family::B, n, r - 1);
        gens.insert(gens.end(), brauer.begin(), brauer.end());
      }
      return gens;
    }
    case GenTarget::IdealM: {
      if (r < 0 || r > n - 1) {
        throw TheoremRangeError("I_r(M_n) generating set needs 0 <= r <= n-1");
      }
      std::vector<Diagram> gens = dclass_generating_set(Family::M, n, r);
      if (r >= 1) {
        for (const Diagram& p : projections(Family::M, n, r - 1)) {
          if (!has_unnested_singleton(p, Side::Upper)) gens.push_back(p);
        }
      }
      return gens;
    }
    case GenTarget::EMonoidM: {
      if (n < 2) {
        throw TheoremRangeError("the projection generating set needs n >= 2");
      }
      std::vector<Diagram> gens{Diagram::identity(n)};
      for (int k = 1; k <= n; ++k) gens.push_back(eps_k(k, n));
      for (int j = 1; j <= n - 1; ++j) gens.push_back(tau_ij(j, j + 1, n));
      for (int k = 1; k <= n - 2; ++k) gens.push_back(mu_k(k, n));
      return gens;
    }
    case GenTarget::MonoidM: {
      if (n < 0) throw OutOfRangeError("degree must be non-negative");
      std::vector<Diagram> gens{Diagram::identity(n)};
      if (n >= 1) gens.push_back(beta_shift(n));
      for (int j = 1; j <= n - 1; ++j) gens.push_back(alpha_j(j, n));
      for (int j = 1; j <= n - 1; ++j) gens.push_back(tau_ij(j, j + 1, n));
      return gens;
    }
  }
  throw Error("unknown target");
}

}  // namespace pbmotz
