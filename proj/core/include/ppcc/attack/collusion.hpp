#pragma once

#include "ppcc/common/rng.hpp"

namespace ppcc::attack {

/// Probability that exactly x of lambda proxies, drawn without replacement
/// from n ESUs of which m are malicious, are malicious:
/// C(m, x) C(n - m, lambda - x) / C(n, lambda). Throws invalid_parameters.
double collusion_pdf(long n, long m, long lambda, long x);

/// P(at least x malicious proxies).
double collusion_tail(long n, long m, long lambda, long x);

/// Fraction of trials in which every one of lambda sampled proxies is
/// malicious.
double collusion_monte_carlo(long n, long m, long lambda, long trials, Rng& rng);

}  // namespace ppcc::attack
