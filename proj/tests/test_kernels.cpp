#include <starsys/kernels.hpp>
#include <starsys/rng.hpp>

#include "support.hpp"

using namespace starsys;
using namespace starsys::kernels;

TEST_CASE("parallel matmul is bit-identical to the serial reference") {
  Rng rng(Seed{11, 0});
  for (const auto [m, k, n] : {std::tuple{1, 1, 1}, {3, 5, 2}, {17, 9, 23}, {64, 64, 64},
                               {100, 7, 90}, {0, 4, 3}, {4, 0, 3}}) {
    const CMat a = gaussian(m, k, rng);
    const CMat b = gaussian(k, n, rng);
    CHECK(matmul_serial(a, b) == matmul_parallel(a, b));
  }
}

TEST_CASE("parallel kron is bit-identical to the serial reference") {
  Rng rng(Seed{12, 0});
  for (const auto [m, n, p, q] : {std::tuple{1, 1, 1, 1}, {2, 3, 4, 5}, {6, 6, 6, 6}, {8, 1, 1, 8}}) {
    const CMat a = gaussian(m, n, rng);
    const CMat b = gaussian(p, q, rng);
    CHECK(kron_serial(a, b) == kron_parallel(a, b));
  }
}

TEST_CASE("kron small example") {
  const CMat a = CMat::from_rows({{1, 2}, {3, 4}});
  const CMat b = CMat::from_rows({{0, {0, 1}}});
  const CMat expected = CMat::from_rows({{0, {0, 1}, 0, {0, 2}}, {0, {0, 3}, 0, {0, 4}}});
  CHECK(kron_serial(a, b) == expected);
}

TEST_CASE("kron mixed product property") {
  Rng rng(Seed{13, 0});
  const CMat a = gaussian(2, 3, rng), c = gaussian(3, 2, rng);
  const CMat b = gaussian(3, 2, rng), d = gaussian(2, 4, rng);
  CHECK(test::near(kron_parallel(a, b) * kron_parallel(c, d), kron_parallel(a * c, b * d), 1e-13));
}

TEST_CASE("matmul matches a hand computed product") {
  const CMat a = CMat::from_rows({{{1, 1}, 2}, {0, {0, -1}}});
  const CMat b = CMat::from_rows({{1, 0}, {{0, 1}, 1}});
  CHECK(matmul_parallel(a, b) == CMat::from_rows({{{1, 3}, 2}, {1, {0, -1}}}));
  CHECK(max_threads() >= 1);
}
