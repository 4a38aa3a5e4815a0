#include "hypersum/hessenberg.hpp"
#include "hypersum/hypersum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hypersum {

namespace {

const Variable kN{VarTag::n, 0};

// (-1)^(m-1) / (r+2)^rising(m-1)
Rational det_prefactor(long m, long r) {
  Rational f(Integer(1), rising_factorial(r + 2, m - 1));
  return (m - 1) % 2 == 0 ? f : -f;
}

RatPoly g_from_coeffs(long m, long r, const std::vector<Rational> &g) {
  const std::size_t offset = m % 2 == 0 ? 1 : 0;
  std::vector<Rational> cs(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < g.size(); ++j)
    cs[2 * j + offset] = g[j];
  return RatPoly({VarTag::N, r}, std::move(cs));
}

// g[M] holds the g-coefficients of G_M, M = 1 .. size-1 (g[0] unused).
using GTable = std::vector<std::vector<Rational>>;

void extend_g_table(GTable &g, long m_max, long r) {
  if (g.empty()) {
    g.emplace_back();
    g.push_back({Rational(1)});
  }
  for (long big_m = static_cast<long>(g.size()); big_m <= m_max; ++big_m) {
    std::vector<Rational> next;
    if (big_m % 2 == 1) {
      // G_{2h-1} from G_1, G_3, .., G_{2h-3} and G_{2h-2}.
      const long h = (big_m + 1) / 2;
      const Rational inv(Integer(1), Integer(big_m + r));
      next.resize(static_cast<std::size_t>(h));
      for (long j = 0; j <= h - 1; ++j) {
        Rational acc;
        if (j >= 1)
          acc += Rational(big_m) * g[big_m - 1][j - 1];
        for (long k = j + 1; k <= h - 1; ++k)
          acc -= Rational(r) * Rational(binomial(big_m, 2 * k - 1)) * bernoulli(big_m + 1 - 2 * k) *
                 g[2 * k - 1][j];
        next[j] = acc * inv;
      }
    } else {
      // G_{2h} from G_2, G_4, .., G_{2h-2} and G_{2h-1}.
      const long h = big_m / 2;
      const Rational inv(Integer(1), Integer(big_m + r));
      next.resize(static_cast<std::size_t>(h));
      for (long j = 0; j <= h - 1; ++j) {
        Rational acc = Rational(big_m) * g[big_m - 1][j];
        for (long k = j + 1; k <= h - 1; ++k)
          acc -= Rational(r) * Rational(binomial(big_m, 2 * k)) * bernoulli(big_m - 2 * k) * g[2 * k][j];
        next[j] = acc * inv;
      }
    }
    g.push_back(std::move(next));
  }
}

} // namespace

FaulhaberPoly make_faulhaber(long m, RatPoly g_in_N) {
  if (g_in_N.var().tag != VarTag::N)
    throw FrameMismatch("make_faulhaber: polynomial is not in N");
  FaulhaberPoly out;
  out.m = m;
  out.r = g_in_N.var().r;
  const std::size_t offset = m % 2 == 0 ? 1 : 0;
  const std::size_t count = static_cast<std::size_t>((m + 1) / 2);
  for (std::size_t j = 0; j < count; ++j)
    out.g_coeffs.push_back(g_in_N.coeff(2 * j + offset));
  out.poly = std::move(g_in_N);
  return out;
}

FaulhaberPoly faulhaber_det(long m, long r) {
  if (m < 1)
    throw std::domain_error("faulhaber_det: requires m >= 1");
  return make_faulhaber(m, det(build_H(m, r)) * det_prefactor(m, r));
}

FaulhaberPoly faulhaber_rec(long m, long r) {
  if (m < 1)
    throw std::domain_error("faulhaber_rec: requires m >= 1");
  if (r < 0)
    throw std::domain_error("faulhaber_rec: r must be non-negative");
  static std::mutex mutex;
  static std::map<long, GTable> chains;
  static std::uint64_t generation = 0;
  std::lock_guard lock(mutex);
  const std::uint64_t current = BernoulliTable::global().generation();
  if (current != generation) {
    chains.clear();
    generation = current;
  }
  GTable &table = chains[r];
  extend_g_table(table, m, r);
  return make_faulhaber(m, g_from_coeffs(m, r, table[m]));
}

std::string to_string(Prefactor p) { return p == Prefactor::s1 ? "S1" : "S2"; }

Theorem1Form theorem1_forms(long m, long r) {
  if (m < 1)
    throw std::domain_error("theorem1_forms: requires m >= 1");
  if (r < 1)
    throw std::domain_error("theorem1_forms: requires r >= 1");
  const RatPoly g = faulhaber_det(m, r).poly;
  if (m % 2 == 1)
    return {m, r, Prefactor::s1, to_u_form(g)};
  const RatPoly g2 = faulhaber_det(2, r).poly;
  auto [quotient, remainder] = divmod(g, g2);
  if (!remainder.is_zero())
    throw std::logic_error("theorem1_forms: G_m is not divisible by G_2");
  return {m, r, Prefactor::s2, to_u_form(quotient)};
}

FaulhaberR1Poly faulhaber_r1(long m) {
  if (m < 1)
    throw std::domain_error("faulhaber_r1: requires m >= 1");
  const Variable big_n{VarTag::N, 1};
  const RatPoly centered_s1 =
      RatPoly::monomial(big_n, 2) - RatPoly::constant(big_n, Rational(1, 4));
  Rational factor(Integer(1), factorial(m + 1));
  if ((m + 1) % 2 == 1)
    factor = -factor;
  FaulhaberR1Poly out;
  out.m = m;
  out.poly = centered_s1 * det(build_H(m, 1)) * factor;
  const std::size_t offset = m % 2 == 0 ? 1 : 0;
  const std::size_t count = static_cast<std::size_t>((m + 1) / 2 + 1);
  for (std::size_t j = 0; j < count; ++j)
    out.f_coeffs.push_back(out.poly.coeff(2 * j + offset));
  return out;
}

RatPoly coffey_residual(long m, long r, CoffeyParity parity) {
  if (m < 1)
    throw std::domain_error("coffey_residual: requires m >= 1");
  if (r < 0)
    throw std::domain_error("coffey_residual: r must be non-negative");
  RatPoly rhs(kN);
  long exponent = 0;
  if (parity == CoffeyParity::odd) {
    exponent = 2 * m - 1;
    for (long k = 1; k <= m; ++k) {
      Rational w = Rational(binomial(2 * m, 2 * k)) * bernoulli(2 * m - 2 * k);
      rhs += hyper_sum(2 * k, r) * w;
    }
    rhs *= Rational(Integer(1), Integer(2 * m));
  } else {
    exponent = 2 * m;
    for (long k = 1; k <= m + 1; ++k) {
      Rational w = Rational(binomial(2 * m + 1, 2 * k - 1)) * bernoulli(2 * m + 2 - 2 * k);
      rhs += hyper_sum(2 * k - 1, r) * w;
    }
    rhs *= Rational(Integer(1), Integer(2 * m + 1));
  }
  rhs += hyper_sum(exponent, r) * Rational(1, 2);
  return hyper_sum(exponent, r + 1) - rhs;
}

StirlingProductForm stirling_product_form(long m, long r) {
  if (m < 1)
    throw std::domain_error("stirling_product_form: requires m >= 1");
  if (r < 1)
    throw std::domain_error("stirling_product_form: requires r >= 1");
  RatPoly left(kN);
  for (long j = 1; j <= r; ++j)
    left += power_sum_poly(j) * Rational(stirling1_unsigned(r, j));
  return {left, faulhaber_det(m, r).poly};
}

} // namespace hypersum
