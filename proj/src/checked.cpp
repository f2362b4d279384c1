#include "lefkappa/checked.hpp"

#include <limits>
#include <string>

#include "lefkappa/error.hpp"

namespace lefkappa::checked {

namespace {

[[noreturn]] void overflow(const char* op, std::int64_t a, std::int64_t b) {
  throw Error(ErrorCode::Overflow, std::string(op) + " of " +
                                       std::to_string(a) + " and " +
                                       std::to_string(b) +
                                       " exceeds 64-bit range");
}

}  // namespace

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("sum", a, b);
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("difference", a, b);
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("product", a, b);
  return r;
}

std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) overflow("negation", a, 0);
  return -a;
}

}  // namespace lefkappa::checked
