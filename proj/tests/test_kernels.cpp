#include <random>
#include <vector>

#include "doctest.h"
#include "turaev/kernels.hpp"

namespace k = turaev::kernels;

namespace {

std::vector<std::int64_t> random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t lim) {
  std::uniform_int_distribution<std::int64_t> d(-lim, lim);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("dispatch picks a supported table") {
    const auto& t = k::active();
    CHECK(k::cpu_supports(t.isa));
    CHECK(k::cpu_supports(k::Isa::scalar));
    CHECK(k::isa_name(k::Isa::scalar) == "scalar");
  }

  TEST_CASE("avx2 matches scalar on random inputs") {
    const k::KernelTable* simd = k::avx2_table();
    if (simd == nullptr || !k::cpu_supports(k::Isa::avx2)) {
      MESSAGE("AVX2 unavailable; equivalence test skipped");
      return;
    }
    const auto& ref = k::scalar_table();
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = static_cast<std::size_t>(trial % 71);
      const auto src = random_vec(rng, n, 1LL << 40);
      const auto base = random_vec(rng, n, 1LL << 40);
      const std::int64_t factor = std::uniform_int_distribution<std::int64_t>(-5000, 5000)(rng);

      auto a = base, b = base;
      ref.add_into(a, src);
      simd->add_into(b, src);
      CHECK(a == b);

      a = base, b = base;
      ref.sub_into(a, src);
      simd->sub_into(b, src);
      CHECK(a == b);

      a = base, b = base;
      ref.scaled_add_into(a, src, factor);
      simd->scaled_add_into(b, src, factor);
      CHECK(a == b);
    }
  }

  TEST_CASE("binomial division agrees and detects remainders") {
    std::mt19937_64 rng(7);
    std::vector<const k::KernelTable*> tables{&k::scalar_table()};
    if (k::avx2_table() != nullptr && k::cpu_supports(k::Isa::avx2)) tables.push_back(k::avx2_table());
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t step = 1 + static_cast<std::size_t>(trial % 17);
      const std::size_t qlen = 1 + static_cast<std::size_t>(trial % 53);
      const auto q = random_vec(rng, qlen, 1000);
      // num = q * (t^step - 1)
      std::vector<std::int64_t> num(qlen + step, 0);
      for (std::size_t i = 0; i < qlen; ++i) {
        num[i] -= q[i];
        num[i + step] += q[i];
      }
      for (const auto* t : tables) {
        CAPTURE(k::isa_name(t->isa));
        std::vector<std::int64_t> out(qlen);
        CHECK(t->div_binomial(num, step, out));
        CHECK(out == q);
        auto bad = num;
        bad[static_cast<std::size_t>(trial) % step] += 1;
        CHECK_FALSE(t->div_binomial(bad, step, out));
      }
    }
  }
}
