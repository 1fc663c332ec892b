#pragma once

#include <cstdint>

namespace stanley {

/// C(a, b) with the zero convention: 0 whenever a < 0, b < 0 or b > a.
/// Throws std::overflow_error if the value does not fit in int64.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// a + b and a - b with overflow checks (std::overflow_error).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace stanley
