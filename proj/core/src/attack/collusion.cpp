#include "ppcc/attack/collusion.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "ppcc/common/error.hpp"

namespace ppcc::attack {

namespace {

mpz_class binom(long n, long k) {
  mpz_class r;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void check(long n, long m, long lambda) {
  if (n < 1 || m < 0 || m > n || lambda < 0 || lambda > n) {
    throw Error(Errc::invalid_parameters, "need 0 <= m <= n, 0 <= lambda <= n");
  }
}

}  // namespace

double collusion_pdf(long n, long m, long lambda, long x) {
  check(n, m, lambda);
  if (x < 0 || x > lambda) throw Error(Errc::invalid_parameters, "need 0 <= x <= lambda");
  mpq_class p(binom(m, x) * binom(n - m, lambda - x), binom(n, lambda));
  p.canonicalize();
  return p.get_d();
}

double collusion_tail(long n, long m, long lambda, long x) {
  check(n, m, lambda);
  mpq_class acc = 0;
  const mpz_class total = binom(n, lambda);
  for (long k = std::max(0L, x); k <= lambda; ++k) acc += mpq_class(binom(m, k) * binom(n - m, lambda - k), total);
  return acc.get_d();
}

double collusion_monte_carlo(long n, long m, long lambda, long trials, Rng& rng) {
  check(n, m, lambda);
  if (trials < 1) throw Error(Errc::invalid_parameters, "need at least one trial");
  // ESUs [0, m) are malicious; draw lambda distinct ones by partial shuffle.
  std::vector<long> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0L);
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    bool all = true;
    for (long i = 0; i < lambda; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(i, n - 1));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      if (pool[static_cast<std::size_t>(i)] >= m) all = false;
    }
    if (all) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace ppcc::attack
