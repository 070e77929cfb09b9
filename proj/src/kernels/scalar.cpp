#include <cassert>

#include "turaev/kernels.hpp"

namespace turaev::kernels {
namespace {

[[maybe_unused]] bool add_overflows(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  return __builtin_add_overflow(a, b, &r);
}

[[maybe_unused]] bool mul_overflows(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  return __builtin_mul_overflow(a, b, &r);
}

void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  assert(dst.size() == src.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    assert(!add_overflows(dst[i], src[i]));
    dst[i] += src[i];
  }
}

void sub_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  assert(dst.size() == src.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    assert(!add_overflows(dst[i], -src[i]));
    dst[i] -= src[i];
  }
}

void scaled_add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                     std::int64_t factor) {
  assert(dst.size() == src.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    assert(!mul_overflows(factor, src[i]));
    assert(!add_overflows(dst[i], factor * src[i]));
    dst[i] += factor * src[i];
  }
}

bool div_binomial(std::span<const std::int64_t> num, std::size_t step,
                  std::span<std::int64_t> quot) {
  assert(step >= 1 && num.size() > step);
  assert(quot.size() == num.size() - step);
  const std::size_t qn = quot.size();
  // q[j] = num[j + step] + q[j + step], read from the top down.
  for (std::size_t j = qn; j-- > 0;) {
    const std::int64_t above = j + step < qn ? quot[j + step] : 0;
    assert(!add_overflows(num[j + step], above));
    quot[j] = num[j + step] + above;
  }
  // The low `step` coefficients are the remainder: num[i] + q[i] must vanish.
  for (std::size_t i = 0; i < step; ++i) {
    const std::int64_t q = i < qn ? quot[i] : 0;
    if (num[i] + q != 0) return false;
  }
  return true;
}

constexpr KernelTable kScalar{Isa::scalar, add_into, sub_into, scaled_add_into, div_binomial};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace turaev::kernels
