#include "turaev/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

#include <algorithm>
#include <cstring>

namespace turaev::kernels {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const std::int64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::int64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Low 64 bits of a 64x64 product; AVX2 has no vpmullq.
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(dst.data() + i, _mm256_add_epi64(load(dst.data() + i), load(src.data() + i)));
  }
  for (; i < n; ++i) dst[i] += src[i];
}

void sub_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(dst.data() + i, _mm256_sub_epi64(load(dst.data() + i), load(src.data() + i)));
  }
  for (; i < n; ++i) dst[i] -= src[i];
}

void scaled_add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                     std::int64_t factor) {
  if (factor == 0) return;
  if (factor == 1) return add_into(dst, src);
  if (factor == -1) return sub_into(dst, src);
  const std::size_t n = dst.size();
  const __m256i f = _mm256_set1_epi64x(factor);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i prod = mullo_epi64(f, load(src.data() + i));
    store(dst.data() + i, _mm256_add_epi64(load(dst.data() + i), prod));
  }
  for (; i < n; ++i) dst[i] += factor * src[i];
}

bool div_binomial(std::span<const std::int64_t> num, std::size_t step,
                  std::span<std::int64_t> quot) {
  const std::size_t qn = quot.size();
  // Top band: nothing above, q[j] = num[j + step].
  const std::size_t band = qn > step ? qn - step : 0;
  std::memcpy(quot.data() + band, num.data() + band + step,
              (qn - band) * sizeof(std::int64_t));

  // Below the band q[j] = num[j + step] + q[j + step]. A block of four lanes
  // only reads rows at least `step` above itself, so step >= 4 is safe.
  std::size_t top = band;
  if (step >= kLanes) {
    while (top >= kLanes) {
      const std::size_t j = top - kLanes;
      store(quot.data() + j,
            _mm256_add_epi64(load(num.data() + j + step), load(quot.data() + j + step)));
      top = j;
    }
  }
  while (top-- > 0) quot[top] = num[top + step] + quot[top + step];

  const std::size_t checked = std::min(step, qn);
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= checked; i += kLanes) {
    acc = _mm256_or_si256(acc, _mm256_add_epi64(load(num.data() + i), load(quot.data() + i)));
  }
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; i < checked; ++i) {
    if (num[i] + quot[i] != 0) return false;
  }
  for (i = checked; i < step; ++i) {
    if (num[i] != 0) return false;
  }
  return true;
}

constexpr KernelTable kAvx2{Isa::avx2, add_into, sub_into, scaled_add_into, div_binomial};

}  // namespace

const KernelTable* avx2_table() noexcept { return &kAvx2; }

}  // namespace turaev::kernels

#else

namespace turaev::kernels {
const KernelTable* avx2_table() noexcept { return nullptr; }
}  // namespace turaev::kernels

#endif
