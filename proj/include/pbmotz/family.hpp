#ifndef PBMOTZ_FAMILY_HPP_
#define PBMOTZ_FAMILY_HPP_

#include <string>
#include <string_view>

namespace pbmotz {

// The seven diagram families handled by this library.  PB is the partial
// Brauer monoid; the others are its submonoids:
//
//   B  - Brauer (all blocks of size 2)
//   M  - Motzkin (planar)
//   I  - symmetric inverse / rook (no hooks)
//   J  - Jones / Temperley-Lieb (B and planar)
//   O  - order-preserving partial injections (I and planar)
//   S  - symmetric group (B and I)
enum class Family { PB, B, M, I, J, O, S };

std::string_view family_name(Family f);

// Accepts the short tags "pb", "b", "m", "i", "j", "o", "s" (any case).
Family parse_family(std::string_view tag);

// M, J, O have trivial H-classes.
bool family_is_aperiodic(Family f);

// B and J only have elements of rank congruent to n mod 2.
bool family_has_parity(Family f);

// M, J, O consist of planar diagrams.
bool family_is_planar(Family f);

}  // namespace pbmotz

#endif  // PBMOTZ_FAMILY_HPP_
