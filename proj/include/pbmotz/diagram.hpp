#ifndef PBMOTZ_DIAGRAM_HPP_
#define PBMOTZ_DIAGRAM_HPP_

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pbmotz/errors.hpp"

namespace pbmotz {

// A Brauer n-diagram: a partition of {1..n, 1'..n'} into blocks of size at
// most 2, stored as an involution ("mate array") on 2n points.  Point v is a
// singleton iff mate(v) == v.  Points 0..n-1 encode the upper vertices 1..n,
// points n..2n-1 the lower vertices 1'..n'.
//
// Diagrams are immutable values; two diagrams are equal iff their degree and
// mate arrays agree, so the representation is canonical.
class Diagram {
 public:
  // The unique element of PB_0 (the empty partition).
  Diagram() = default;

  // The identity diagram {1,1'},...,{n,n'}.
  static Diagram identity(int n);

  // Builds a diagram from explicit blocks.  Points are signed integers:
  // +i for the upper vertex i, -k for the lower vertex k'.  Unlisted points
  // become singletons.  Throws OutOfRangeError, DuplicatePointError or
  // OversizedBlockError on bad input.
  static Diagram from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  // Builds directly from a mate array (validated involution on 2n points).
  static Diagram from_mate(int n, std::vector<int32_t> mate);

  int degree() const { return n_; }
  int mate(int v) const { return mate_[v]; }
  const std::vector<int32_t>& mates() const { return mate_; }

  // Blocks in canonical order (sorted by minimal point under the order
  // 1 < ... < n < 1' < ... < n'), singletons omitted, signed as above.
  std::vector<std::vector<int>> blocks() const;

  // Canonical text form, e.g. "{1,3},{2,3'},{5,6},{4',5'}".  The degree is
  // not part of the text; it travels out of band.  Empty string when every
  // point is a singleton.
  std::string to_text() const;

  // JSON object {"n": n, "blocks": [[1,3],[2,-3],...]} with lower point k'
  // encoded as -k.
  nlohmann::json to_json() const;

  // Parses the canonical text form (n supplied out of band).  Tolerates
  // whitespace; accepts an empty string as the all-singleton diagram.
  static Diagram parse_text(int n, std::string_view text);

  static Diagram from_json(const nlohmann::json& j);

  // Accepts either the text form or the JSON form.
  static Diagram parse(int n, std::string_view input);

  bool operator==(const Diagram&) const = default;
  bool operator<(const Diagram& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return mate_ < other.mate_;
  }

  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<int32_t> mate_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const { return d.hash(); }
};

// Result of a diagram product: the product diagram together with the number
// of floating loops and floating paths of the product graph.  A floating
// component touches only middle-row vertices; it is a loop iff its edge
// count equals its vertex count (parallel edges included), otherwise a path.
// An isolated middle vertex is a path of length 0.
struct ProductResult {
  Diagram product;
  int loops = 0;
  int paths = 0;
};

// Rank, domain/codomain and the nontrivial kernel/cokernel classes of a
// diagram.  dom/codom are ascending subsets of {1..n}; ker_pairs/coker_pairs
// list the size-2 classes (hooks) as ascending pairs, every other class
// being a singleton.
struct DiagramStats {
  int rank = 0;
  std::vector<int> dom, codom;
  std::vector<std::pair<int, int>> ker_pairs, coker_pairs;

  bool operator==(const DiagramStats&) const = default;
};

struct FamilyFlags {
  bool partial_brauer = true;
  bool brauer = false;
  bool sym_inverse = false;
  bool planar = false;  // Motzkin
  bool jones = false;
  bool order = false;
  bool permutation = false;
};

// Multiplies two diagrams via connectivity in the 3n-vertex product graph
// and classifies its floating components.  Throws DegreeMismatchError.
ProductResult multiply(const Diagram& a, const Diagram& b);

// Product diagram only.
inline Diagram operator*(const Diagram& a, const Diagram& b) {
  return multiply(a, b).product;
}

// The involution: upper and lower rows swapped.
Diagram star(const Diagram& a);

DiagramStats stats(const Diagram& a);
int rank_of(const Diagram& a);

FamilyFlags family_membership(const Diagram& a);
bool is_planar(const Diagram& a);

bool is_idempotent(const Diagram& a);
// x is a projection iff x = x^2 = x*.
bool is_projection(const Diagram& a);

// Unfolds a degree-n diagram into a rank-0 projection of degree 2n: the
// boundary points are relabelled 1..2n in the order 1,...,n,n',...,1', every
// block becomes an upper block of the image, and the lower half mirrors the
// upper half.  Injective; surjective onto rank-0 projections (planar input
// gives planar output).
Diagram unfold(const Diagram& a);

}  // namespace pbmotz

#endif  // PBMOTZ_DIAGRAM_HPP_
