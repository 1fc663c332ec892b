#include "stanley/binomial.hpp"

#include <stdexcept>

namespace stanley {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in addition");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in subtraction");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in product");
  return out;
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  // Exact at every step: result * (a - i) is divisible by i + 1.
  __extension__ using Wide = __int128;
  Wide result = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    result = result * (a - i) / (i + 1);
    if (result > INT64_MAX) throw std::overflow_error("binomial coefficient exceeds int64");
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace stanley
