#include "hypersum/hypersum.hpp"

#include "hypersum/hessenberg.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hypersum {

namespace {

const Variable kN{VarTag::n, 0};

void require_non_negative(long v, const char *what) {
  if (v < 0)
    throw std::domain_error(std::string(what) + " must be non-negative");
}

} // namespace

std::string to_string(Method m) {
  switch (m) {
  case Method::bruteforce_fit: return "bruteforce-fit";
  case Method::q_form: return "q-form";
  case Method::c_form: return "c-form";
  case Method::coeff_recurrence: return "coeff-recurrence";
  case Method::lemma_chain: return "lemma-chain";
  case Method::determinant: return "determinant";
  }
  return "?";
}

Method method_from_string(const std::string &s) {
  for (Method m : all_methods())
    if (to_string(m) == s)
      return m;
  throw std::invalid_argument("unknown method '" + s + "'");
}

std::span<const Method> all_methods() {
  static constexpr std::array<Method, 6> methods{
      Method::bruteforce_fit, Method::q_form,      Method::c_form,
      Method::coeff_recurrence, Method::lemma_chain, Method::determinant};
  return methods;
}

Integer hyper_sum_bruteforce(long m, long r, long n) {
  require_non_negative(m, "m");
  require_non_negative(r, "r");
  require_non_negative(n, "n");
  if (n == 0)
    return (r == 0 && m == 0) ? 1 : 0;
  std::vector<Integer> values(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    values[i - 1] = p;
  }
  for (long pass = 0; pass < r; ++pass)
    for (std::size_t i = 1; i < values.size(); ++i)
      values[i] += values[i - 1];
  return values.back();
}

Rational s1_closed(long r, long n) {
  require_non_negative(r, "r");
  require_non_negative(n, "n");
  return Rational(binomial(n + r, r + 1));
}

Rational s2_closed(long r, long n) {
  return Rational(2 * n + r, r + 2) * s1_closed(r, n);
}

RatPoly s1_poly(long r) {
  require_non_negative(r, "r");
  const Variable v = kN;
  RatPoly acc = RatPoly::constant(v, Rational(1));
  for (long i = 0; i <= r; ++i)
    acc *= RatPoly::linear(v, Rational(i));
  return acc * Rational(Integer(1), factorial(r + 1));
}

RatPoly power_sum_poly(long m) {
  require_non_negative(m, "m");
  std::vector<Rational> cs(static_cast<std::size_t>(m + 2));
  const Rational inv(Integer(1), Integer(m + 1));
  for (long t = 1; t <= m + 1; ++t) {
    Rational c = Rational(binomial(m + 1, t)) * bernoulli(m + 1 - t) * inv;
    cs[t] = ((m + 1 - t) % 2 == 0) ? c : -c;
  }
  return RatPoly(kN, std::move(cs));
}

RatPoly q_poly(long r, long i) {
  require_non_negative(r, "r");
  if (i < 0 || i > r)
    throw std::domain_error("q_poly: requires 0 <= i <= r");
  std::vector<Rational> cs(static_cast<std::size_t>(r - i + 1));
  for (long j = 0; j <= r - i; ++j)
    cs[j] = Rational(Integer(binomial(i + j, i) * stirling1_unsigned(r + 1, i + j + 1)));
  return RatPoly(kN, std::move(cs));
}

HyperSumPoly hyper_sum_poly_q(long m, long r) {
  require_non_negative(m, "m");
  if (r < 1)
    throw std::domain_error("hyper_sum_poly_q: requires r >= 1");
  RatPoly acc(kN);
  for (long i = 0; i <= r - 1; ++i) {
    RatPoly term = q_poly(r - 1, i) * power_sum_poly(m + i);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  acc *= Rational(Integer(1), factorial(r - 1));
  return {m, r, acc.retagged(kN), Method::q_form};
}

Rational coeff_c(long m, long r, long k) {
  require_non_negative(m, "m");
  if (r < 1)
    throw std::domain_error("coeff_c: requires r >= 1");
  if (k < 1 || k > m + r)
    throw std::domain_error("coeff_c: requires 1 <= k <= m + r");
  Rational acc;
  for (long i = 0; i <= r - 1; ++i) {
    for (long j = 0; j <= k - 1; ++j) {
      Integer s = stirling1_unsigned(r, i + j + 1);
      if (s == 0)
        continue;
      Rational b = bernoulli_or_zero(m + i + j + 1 - k);
      if (b.is_zero())
        continue;
      Integer bin = binomial(i + j, i) * binomial(m + i + 1, k - j);
      if (bin == 0)
        continue;
      Rational term = Rational(bin * s, Integer(m + i + 1)) * b;
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
  }
  acc *= Rational(Integer(1), factorial(r - 1));
  return ((m + 1 - k) % 2 == 0) ? acc : -acc;
}

HyperSumPoly hyper_sum_poly_c(long m, long r) {
  if (r < 1)
    throw std::domain_error("hyper_sum_poly_c: requires r >= 1");
  std::vector<Rational> cs(static_cast<std::size_t>(m + r + 1));
  for (long k = 1; k <= m + r; ++k)
    cs[k] = coeff_c(m, r, k);
  return {m, r, RatPoly(kN, std::move(cs)), Method::c_form};
}

std::vector<Rational> coeff_recurrence_step(std::span<const Rational> c_m_r,
                                            std::span<const Rational> c_m1_r, long r) {
  if (r < 1)
    throw std::domain_error("coeff_recurrence_step: requires r >= 1");
  if (c_m1_r.size() != c_m_r.size() + 1)
    throw std::invalid_argument("coeff_recurrence_step: S_{m+1}^(r) must have one more coefficient");
  const std::size_t len = c_m_r.size() + 1;
  const Rational inv_r(Integer(1), Integer(r));
  std::vector<Rational> out(len);
  // Index t holds the coefficient of n^(t+1).
  for (std::size_t t = 0; t < len; ++t) {
    Rational same = t < c_m_r.size() ? c_m_r[t] : Rational();
    Rational lower = t >= 1 ? c_m_r[t - 1] : Rational();
    out[t] = same + (lower - c_m1_r[t]) * inv_r;
  }
  return out;
}

namespace {

std::vector<Rational> coefficients_from_n1(const RatPoly &p, std::size_t count) {
  std::vector<Rational> out(count);
  for (std::size_t t = 0; t < count; ++t)
    out[t] = p.coeff(t + 1);
  return out;
}

} // namespace

HyperSumPoly hyper_sum_poly_chain(long m, long r) {
  require_non_negative(m, "m");
  if (r < 1)
    throw std::domain_error("hyper_sum_poly_chain: requires r >= 1");
  // layer[i] holds the coefficients of S_{m+i}^(level).
  std::vector<std::vector<Rational>> layer;
  for (long i = 0; i < r; ++i)
    layer.push_back(coefficients_from_n1(power_sum_poly(m + i), static_cast<std::size_t>(m + i + 1)));
  for (long level = 1; level < r; ++level) {
    std::vector<std::vector<Rational>> next;
    for (std::size_t i = 0; i + 1 < layer.size(); ++i)
      next.push_back(coeff_recurrence_step(layer[i], layer[i + 1], level));
    layer = std::move(next);
  }
  std::vector<Rational> cs{Rational()};
  cs.insert(cs.end(), layer.front().begin(), layer.front().end());
  return {m, r, RatPoly(kN, std::move(cs)), Method::coeff_recurrence};
}

std::vector<HyperSumPoly> lemma_recurrence_family(long m_max, long r) {
  require_non_negative(r, "r");
  std::vector<HyperSumPoly> family;
  if (m_max < 1)
    return family;
  const Variable v = kN;
  const RatPoly centered = RatPoly::linear(v, Rational(r, 2));
  family.push_back({1, r, s1_poly(r), Method::lemma_chain});
  for (long m = 2; m <= m_max; ++m) {
    RatPoly acc = centered * family[m - 2].poly * Rational(m);
    for (long k = 1; k <= m - 2; ++k) {
      Rational w = Rational(r) * Rational(binomial(m, k)) * bernoulli(m - k);
      if (!w.is_zero())
        acc -= family[k - 1].poly * w;
    }
    acc *= Rational(Integer(1), Integer(m + r));
    family.push_back({m, r, std::move(acc), Method::lemma_chain});
  }
  return family;
}

HyperSumPoly hyper_sum_det(long m, long r) {
  if (m < 1)
    throw std::domain_error("hyper_sum_det: requires m >= 1");
  require_non_negative(r, "r");
  const FaulhaberPoly g = faulhaber_det(m, r);
  return {m, r, s1_poly(r) * N_to_n(g.poly), Method::determinant};
}

HyperSumPoly hyper_sum_fit(long m, long r) {
  require_non_negative(m, "m");
  require_non_negative(r, "r");
  const long degree = m + r;
  const Variable v = kN;
  // Newton forward differences at n = 0..degree: p(n) = sum_k D^k f(0) C(n, k).
  std::vector<Rational> diffs;
  for (long n = 0; n <= degree; ++n)
    diffs.emplace_back(hyper_sum_bruteforce(m, r, n));
  RatPoly acc(v);
  RatPoly falling = RatPoly::constant(v, Rational(1));
  for (long k = 0; k <= degree; ++k) {
    acc += falling * (diffs[0] * Rational(Integer(1), factorial(k)));
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
    falling *= RatPoly::linear(v, Rational(-k));
  }
  return {m, r, std::move(acc), Method::bruteforce_fit};
}

HyperSumPoly hyper_sum_poly(Method method, long m, long r) {
  require_non_negative(m, "m");
  require_non_negative(r, "r");
  if (r == 0 && (method == Method::q_form || method == Method::c_form ||
                 method == Method::coeff_recurrence))
    return {m, 0, RatPoly::monomial(kN, static_cast<std::size_t>(m)), method};
  switch (method) {
  case Method::bruteforce_fit: return hyper_sum_fit(m, r);
  case Method::q_form: return hyper_sum_poly_q(m, r);
  case Method::c_form: return hyper_sum_poly_c(m, r);
  case Method::coeff_recurrence: return hyper_sum_poly_chain(m, r);
  case Method::lemma_chain: {
    if (m == 0)
      throw std::domain_error("lemma-chain route requires m >= 1");
    auto family = lemma_recurrence_family(m, r);
    return family.back();
  }
  case Method::determinant: return hyper_sum_det(m, r);
  }
  throw std::logic_error("hyper_sum_poly: unhandled method");
}

RatPoly hyper_sum(long m, long r) {
  static std::mutex mutex;
  static std::map<std::pair<long, long>, RatPoly> cache;
  static std::uint64_t generation = 0;
  const std::uint64_t current = BernoulliTable::global().generation();
  {
    std::lock_guard lock(mutex);
    if (generation != current) {
      cache.clear();
      generation = current;
    }
    auto it = cache.find({m, r});
    if (it != cache.end())
      return it->second;
  }
  RatPoly p = m == 0 ? hyper_sum_poly(Method::q_form, 0, r).poly : hyper_sum_det(m, r).poly;
  std::lock_guard lock(mutex);
  if (generation == current)
    cache.emplace(std::make_pair(m, r), p);
  return p;
}

} // namespace hypersum
