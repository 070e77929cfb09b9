#include <cstdlib>
#include <string_view>

#include "turaev/kernels.hpp"

namespace turaev::kernels {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("TURAEV_ISA")) {
    if (std::string_view(forced) == "scalar") return scalar_table();
  }
  if (cpu_supports(Isa::avx2)) return *avx2_table();
  return scalar_table();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace turaev::kernels
