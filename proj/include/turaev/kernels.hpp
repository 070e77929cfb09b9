#pragma once

// Integer inner-loop kernels used by the Laurent-polynomial arithmetic.
//
// Each kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The active table is chosen once at runtime from CPUID; set
// TURAEV_ISA=scalar in the environment to force the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace turaev::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  // dst[i] += src[i]
  void (*add_into)(std::span<std::int64_t> dst, std::span<const std::int64_t> src);

  // dst[i] -= src[i]
  void (*sub_into)(std::span<std::int64_t> dst, std::span<const std::int64_t> src);

  // dst[i] += factor * src[i]
  void (*scaled_add_into)(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                          std::int64_t factor);

  // Divides num (dense, ascending, num.size() == degree + 1) by t^step - 1.
  // quot must have num.size() - step entries. Returns false when the
  // remainder is nonzero; quot is then unspecified.
  bool (*div_binomial)(std::span<const std::int64_t> num, std::size_t step,
                       std::span<std::int64_t> quot);
};

const KernelTable& scalar_table() noexcept;

// nullptr when the variant was not compiled in for this target.
const KernelTable* avx2_table() noexcept;

bool cpu_supports(Isa isa) noexcept;

// Table for the best ISA supported by this CPU (or forced via TURAEV_ISA).
const KernelTable& active() noexcept;

}  // namespace turaev::kernels
