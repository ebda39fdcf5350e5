#ifndef PBMOTZ_MONOID_HPP_
#define PBMOTZ_MONOID_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pbmotz/diagram.hpp"
#include "pbmotz/family.hpp"

namespace pbmotz {

// Enumeration and closure refuse to materialise more elements than this
// unless the caller overrides the guard.
inline constexpr std::size_t kDefaultCardinalityGuard = 5'000'000;

// Streams every diagram of the family of degree n (of rank r when given),
// each exactly once, in ascending canonical-encoding order (lexicographic on
// the mate array).  Stops early if the callback returns false.  Throws
// ParityError for B/J with r != n (mod 2) and TooLargeError when the exact
// cardinality exceeds the guard.
void enumerate_each(Family f, int n, std::optional<int> r,
                    const std::function<bool(const Diagram&)>& yield,
                    std::size_t guard = kDefaultCardinalityGuard);

std::vector<Diagram> enumerate(Family f, int n, std::optional<int> r = {},
                               std::size_t guard = kDefaultCardinalityGuard);

enum class GreenRelation { R, L, H, D, J };

GreenRelation parse_green_relation(std::string_view tag);

// Characterized test: R iff dom and ker agree, L iff codom and coker agree,
// H = R and L, D = J iff ranks agree.  Throws DegreeMismatchError.
bool green_related(const Diagram& a, const Diagram& b, GreenRelation rel);

// Definitional cross-check: compares principal one/two-sided ideals computed
// by exhaustive multiplication over the whole family.  D is composed as
// R then L over all intermediaries.
class GreenOracle {
 public:
  GreenOracle(Family f, int n, std::size_t guard = kDefaultCardinalityGuard);

  bool related(const Diagram& a, const Diagram& b, GreenRelation rel) const;
  const std::vector<Diagram>& elements() const { return elements_; }

 private:
  std::size_t index_of(const Diagram& d) const;

  std::vector<Diagram> elements_;
  std::unordered_map<Diagram, std::size_t, DiagramHash> index_;
  // per element: id of its R-, L-, J-class under ideal equality
  std::vector<std::size_t> rclass_, lclass_, jclass_;
  // set of (rclass, lclass) pairs realised by some element; witnesses D
  std::unordered_set<std::size_t> rl_pairs_;
};

// All projections of rank r, ascending.
std::vector<Diagram> projections(Family f, int n, int r,
                                 std::size_t guard = kDefaultCardinalityGuard);

// The egg-box picture of one D-class: rows are R-classes, columns L-classes,
// cells H-classes.  Every row and column contains exactly one projection.
struct EggBox {
  int rank = 0;
  std::vector<Diagram> row_reps, col_reps;
  std::vector<Diagram> row_projection, col_projection;
  // cells[i][j] lists the H-class R_i cap L_j, ascending
  std::vector<std::vector<std::vector<Diagram>>> cells;
  // true iff the H-class contains an idempotent (i.e. is a group)
  std::vector<std::vector<bool>> idempotent_cell;

  std::size_t rows() const { return row_reps.size(); }
  std::size_t cols() const { return col_reps.size(); }
};

EggBox egg_box(Family f, int n, int r,
               std::size_t guard = kDefaultCardinalityGuard);

// Least multiplication-closed superset of the generators, as an ascending
// vector.  Frontier BFS; products are formed on both sides.  Throws
// BoundExceededError (with the partial size) if the closure grows past the
// bound, DegreeMismatchError if the generators mix degrees.
std::vector<Diagram> closure(const std::vector<Diagram>& generators,
                             std::size_t bound = kDefaultCardinalityGuard);

// The ideal I_r = {rank <= r}, ascending.
std::vector<Diagram> ideal(Family f, int n, int r,
                           std::size_t guard = kDefaultCardinalityGuard);

// For an aperiodic family (M, J, O): a list of exactly |P(D_r)| elements of
// D_r whose closure contains all of D_r.  Built by chaining the projections
// p_1,...,p_k: the element of R_{p_i} cap L_{p_{i+1}} for each i, wrapping
// around.
std::vector<Diagram> dclass_generating_set(Family f, int n, int r);

// The unique element of R_p cap L_q for projections p, q of equal rank in an
// aperiodic family: upper half of p, lower half of q, transversals matched
// in order.
Diagram hclass_element(const Diagram& p, const Diagram& q);

}  // namespace pbmotz

#endif  // PBMOTZ_MONOID_HPP_
