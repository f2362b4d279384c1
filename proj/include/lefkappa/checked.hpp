#pragma once

#include <cstdint>

namespace lefkappa::checked {

// 64-bit integer arithmetic that throws Error(Overflow) instead of wrapping.
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);

}  // namespace lefkappa::checked
