#include "ppcc/dcc/levels.hpp"

#include <cmath>

#include "ppcc/common/error.hpp"

namespace ppcc::dcc {

void LevelLayout::validate(unsigned plaintext_bits, unsigned margin) const {
  if (levels < 1 || bits < 1) throw Error(Errc::invalid_argument, "layout needs at least one level and bit");
  if (plaintext_bits != 0 && total_bits() + margin > plaintext_bits) {
    throw Error(Errc::invalid_argument, "level packing exceeds the plaintext space");
  }
}

int level_of(double priority, const LevelLayout& layout) {
  if (!(priority >= 0.0 && priority <= 1.0)) throw Error(Errc::invalid_argument, "priority outside [0, 1]");
  int level = static_cast<int>(std::floor(priority * layout.levels)) + 1;
  return level > layout.levels ? layout.levels : level;
}

mpz_class encode_request(std::uint64_t demand_kw, double priority, const LevelLayout& layout) {
  mpz_class p = static_cast<unsigned long>(demand_kw);
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > layout.bits) {
    throw Error(Errc::demand_overflow, "demand does not fit in a level slot");
  }
  const int level = level_of(priority, layout);
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(level - 1) * layout.bits);
  return out;
}

LevelVector decode_total(const mpz_class& total, const LevelLayout& layout) {
  LevelVector out(static_cast<std::size_t>(layout.levels));
  mpz_class rest = total;
  for (auto& slot : out) {
    mpz_fdiv_r_2exp(slot.get_mpz_t(), rest.get_mpz_t(), layout.bits);
    mpz_fdiv_q_2exp(rest.get_mpz_t(), rest.get_mpz_t(), layout.bits);
  }
  return out;
}

Threshold find_threshold(const LevelVector& totals, double capacity_kw) {
  if (!(capacity_kw >= 0.0)) throw Error(Errc::invalid_argument, "capacity must be nonnegative");
  const int levels = static_cast<int>(totals.size());
  double admitted = 0.0;
  for (int l = levels; l >= 1; --l) {
    const double t = totals[static_cast<std::size_t>(l - 1)].get_d();
    if (admitted + t > capacity_kw) return {l + 1, l, capacity_kw - admitted};
    admitted += t;
  }
  return {1, 0, capacity_kw - admitted};
}

double allotment(double demand_kw, int own_level, const LevelVector& totals, const Threshold& th) {
  if (own_level >= th.full_from) return demand_kw;
  if (own_level != th.boundary) return 0.0;
  const double level_total = totals.at(static_cast<std::size_t>(th.boundary - 1)).get_d();
  if (!(level_total > 0.0)) throw Error(Errc::invalid_argument, "boundary level carries no demand");
  return th.slack_kw * demand_kw / level_total;
}

double round_centi_kw(double kw) { return std::nearbyint(kw * 100.0) / 100.0; }

}  // namespace ppcc::dcc
