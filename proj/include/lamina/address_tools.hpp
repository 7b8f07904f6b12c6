#pragma once

#include <optional>

#include "lamina/checkers.hpp"

namespace lamina {

// Default ceiling on the final address entry for witness searches.
inline constexpr long kMaxAdmissiblePeriod = 24;

// Smallest-numerator periodic angle of period = last entry whose kneading equals
// kneading_from_address(addr); empty when no witness exists (inadmissible).
std::optional<Angle> admissibility_witness(const InternalAddress& addr);
bool is_admissible(const InternalAddress& addr);

// Address extension check: prefix->m admissible implies prefix->jm admissible
// for all j >= 2; and for 0 < r < m, admissibility of prefix->(jm+r) is constant
// over j >= 2. Checked for j up to j_max. The stronger claim extends the second
// clause to j = 1; its truth value at each j is reported.
CheckReport check_corollary_I(const InternalAddress& prefix, long j_max);

}  // namespace lamina
