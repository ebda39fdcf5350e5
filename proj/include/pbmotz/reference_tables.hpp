#ifndef PBMOTZ_REFERENCE_TABLES_HPP_
#define PBMOTZ_REFERENCE_TABLES_HPP_

#include <cstddef>
#include <vector>

namespace pbmotz::reference {

// Embedded expected values for the verification suites.  Row index is n,
// column index r; -1 marks cells outside the triangle.

// m(n,r) for n <= 7 (triangle of OEIS A064189; column 0 is A001006).
extern const std::vector<std::vector<long long>> kMotzkinM;

// m'(n,r) for n <= 7 (triangle of OEIS A097609; column 0 is A005043).
extern const std::vector<std::vector<long long>> kRiordanMPrime;

// |I_r(PB_n)| for n <= 7 (diagonal is |PB_n| = OEIS A066223).
extern const std::vector<std::vector<long long>> kIdealSizePb;

// |I_r(M_n)| for n <= 7 (diagonal is |M_n| = m(2n)).
extern const std::vector<std::vector<long long>> kIdealSizeM;

// rank(I_r(PB_n)) for n <= 10; equals idrank for r <= n-2.
extern const std::vector<std::vector<long long>> kRankIdealPb;

// rank(I_r(M_n)) for n <= 10; equals idrank of the idempotent-generated
// subsemigroup of I_r for r <= n-2.
extern const std::vector<std::vector<long long>> kRankIdealM;

// rank = idrank of the idempotent-generated subsemigroups of PB_n and M_n
// for n <= 20 (the PB row is OEIS A000124 from n = 2 on).
extern const std::vector<long long> kRankEPb;
extern const std::vector<long long> kRankEM;

}  // namespace pbmotz::reference

#endif  // PBMOTZ_REFERENCE_TABLES_HPP_
