#ifndef PBMOTZ_COMBINATORICS_HPP_
#define PBMOTZ_COMBINATORICS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "pbmotz/bigint.hpp"
#include "pbmotz/family.hpp"

namespace pbmotz {

Int binomial(long n, long k);
Int factorial(long n);
// k!! with the conventions (-1)!! = 1 and k!! = 0 for even k >= 0.
Int double_factorial(long k);

// a(m): partitions of an m-set into blocks of size <= 2 (OEIS A000085);
// a(0) = a(1) = 1, a(m) = a(m-1) + (m-1) a(m-2).  |PB_n| = a(2n).
Int a_seq(long m);

// m(n,r): number of R-classes of D_r(M_n) (OEIS A064189); m(n) = m(n,0) is
// the Motzkin number.  Out-of-range (n,r) gives 0.
Int motzkin_m(long n, long r);

// m'(n,r): projections of D_r(M_n) with no unnested singleton block (OEIS
// A097609); m'(n) = m'(n,0) is the Riordan number.
Int riordan_mprime(long n, long r);

// Number of R-classes (equivalently L-classes, equivalently projections)
// contained in D_r of the family.  Throws ParityError for B/J with
// r != n (mod 2).
Int rclass_count(Family f, long n, long r);

// Size of an H-class inside D_r: r! for PB/B/I/S, 1 for M/J/O.
Int hclass_size(Family f, long r);

Int dclass_size(Family f, long n, long r);
Int ideal_size(Family f, long n, long r);
Int monoid_size(Family f, long n);

struct IdealRank {
  Int rank;
  std::optional<Int> idrank;  // present iff idempotent_generated
  bool idempotent_generated = false;
};

// rank (and idempotent rank when defined) of the ideal I_r of PB_n or M_n.
IdealRank rank_of_ideal(Family f, long n, long r);

// rank = idrank of the idempotent-generated subsemigroup: of PB_n or M_n
// when r is absent, of I_r(M_n) when r is given (family must then be M,
// 0 <= r <= n-2).  Throws TheoremRangeError outside these ranges.
Int rank_of_idempotent_generated(Family f, long n, std::optional<long> r = {});

// Number of standard Young tableaux of shape lambda (hook length formula).
// lambda must be a weakly decreasing sequence of positive integers.
Int standard_tableaux_count(const std::vector<long>& lambda);

// Dimension of the cell module of the twisted partial Brauer algebra indexed
// by a partition lambda of r <= n: C(n,r) * a(n-r) * f^lambda.
Int cell_dim_pb(long n, long r, const std::vector<long>& lambda);

// ---------------------------------------------------------------------------
// Count tables
// ---------------------------------------------------------------------------

enum class CountKind { A, M, MPrime, RClass, DClassSize, IdealSize, Rank, IdRank };

CountKind parse_count_kind(std::string_view tag);
std::string_view count_kind_name(CountKind kind);

struct CountTable {
  CountKind kind = CountKind::A;
  std::optional<Family> family;  // set for the family-dependent kinds
  struct Entry {
    long n;
    std::optional<long> r;  // absent for the a sequence
    Int value;
  };
  std::vector<Entry> entries;  // ascending in (n, r)
};

// Tabulates one counting kind for all 0 <= n <= max_n (and all valid r).
// Parity-empty cells and idrank cells of non-idempotent-generated ideals are
// omitted.  Family-dependent kinds require a family.
CountTable build_count_table(CountKind kind, std::optional<Family> family,
                             long max_n);

// Single-cell lookup with the same conventions.
Int count_value(CountKind kind, std::optional<Family> family, long n,
                std::optional<long> r);

}  // namespace pbmotz

#endif  // PBMOTZ_COMBINATORICS_HPP_
