#include "oracles.hpp"

#include "hypersum/hypersum.hpp"

#include <doctest.h>

using namespace hypersum;
using R = Rational;

namespace {
const Variable vn{VarTag::n, 0};

RatPoly binomial_poly(long shift, long k) {
  RatPoly acc = RatPoly::constant(vn, R(1));
  for (long i = 0; i < k; ++i)
    acc *= RatPoly::linear(vn, R(shift - i));
  return acc * R(Integer(1), oracle::factorial(k));
}
} // namespace

TEST_CASE("brute force") {
  CHECK(hyper_sum_bruteforce(1, 2, 3) == 10);
  CHECK(hyper_sum_bruteforce(3, 1, 3) == 36);
  CHECK(hyper_sum_bruteforce(0, 0, 0) == 1);
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; n <= 6; ++n) {
      Integer p = 1;
      for (long i = 0; i < m; ++i)
        p *= n;
      if (n > 0 || m > 0)
        CHECK(hyper_sum_bruteforce(m, 0, n) == p);
    }
  for (long m = 0; m <= 6; ++m)
    for (long r = 0; r <= 5; ++r)
      for (long n = 0; n <= 10; ++n)
        CHECK(hyper_sum_bruteforce(m, r, n) == oracle::hyper_sum(m, r, n));
}

TEST_CASE("closed forms for m = 1, 2") {
  CHECK(s1_closed(2, 3) == R(10));
  CHECK(s1_closed(4, 0) == R(0));
  CHECK(s1_closed(1, 4) == R(10));
  CHECK(s2_closed(1, 3) == R(14));
  CHECK(s2_closed(2, 3) == R(20));
  CHECK(s2_closed(3, 0) == R(0));
  for (long r = 0; r <= 6; ++r)
    for (long n = 0; n <= 10; ++n) {
      CHECK(s1_closed(r, n) == R(oracle::hyper_sum(1, r, n)));
      CHECK(s2_closed(r, n) == R(oracle::hyper_sum(2, r, n)));
      CHECK(s1_poly(r)(R(n)) == s1_closed(r, n));
    }
}

TEST_CASE("power sums") {
  CHECK(power_sum_poly(0) == RatPoly::monomial(vn, 1));
  CHECK(power_sum_poly(1) == RatPoly(vn, {R(0), R(1, 2), R(1, 2)}));
  CHECK(power_sum_poly(3) == RatPoly(vn, {R(0), R(0), R(1, 4), R(1, 2), R(1, 4)}));
}

TEST_CASE("q polynomials") {
  CHECK(q_poly(0, 0) == RatPoly::constant(vn, R(1)));
  for (long r = 0; r <= 5; ++r)
    CHECK(q_poly(r, r) == RatPoly::constant(vn, R(1)));
  CHECK(q_poly(2, 0) == RatPoly(vn, {R(2), R(3), R(1)}));
  // q_{r,i}(n) counts permutations with the n+1 smallest elements in distinct cycles.
  for (int r = 0; r <= 3; ++r)
    for (int i = 0; i <= r; ++i)
      for (int n = 0; n + r + 1 <= 8; ++n)
        CHECK(q_poly(r, i)(R(n)) == R(oracle::count_permutations(r + n + 1, i + n + 1, n + 1)));
}

TEST_CASE("q route") {
  for (long m = 0; m <= 6; ++m)
    CHECK(hyper_sum_poly_q(m, 1).poly == power_sum_poly(m));
  CHECK(hyper_sum_poly_q(1, 2).poly(R(3)) == R(10));
  CHECK(hyper_sum_poly_q(2, 2).poly(R(3)) == R(20));
}

TEST_CASE("c coefficients") {
  for (long m = 0; m <= 8; ++m) {
    CHECK(coeff_c(m, 1, m + 1) == R(1, m + 1));
    for (long r = 1; r <= 5; ++r)
      CHECK(coeff_c(m, r, m + r) == R(oracle::factorial(m), oracle::factorial(m + r)));
  }
}

TEST_CASE("coefficient recurrence step") {
  const RatPoly s11 = power_sum_poly(1), s21 = power_sum_poly(2);
  auto tail = [](const RatPoly &p) {
    std::vector<R> out(p.coeffs().begin() + 1, p.coeffs().end());
    return out;
  };
  const auto a = tail(s11), b = tail(s21);
  const auto next = coeff_recurrence_step(a, b, 1);
  std::vector<R> full{R(0)};
  full.insert(full.end(), next.begin(), next.end());
  CHECK(RatPoly(vn, full)(R(3)) == R(10));
}

TEST_CASE("lemma family") {
  for (long r = 0; r <= 5; ++r) {
    const auto fam = lemma_recurrence_family(4, r);
    REQUIRE(fam.size() == 4);
    for (long n = 1; n <= 10; ++n)
      CHECK(fam[1].poly(R(n)) == s2_closed(r, n));
  }
  CHECK(lemma_recurrence_family(3, 2)[2].poly(R(2)) == R(10));
  const auto zero = lemma_recurrence_family(6, 0);
  for (long m = 1; m <= 6; ++m)
    CHECK(zero[m - 1].poly == RatPoly::monomial(vn, static_cast<std::size_t>(m)));
}

TEST_CASE("determinant route closed forms") {
  for (long r = 1; r <= 5; ++r) {
    const RatPoly expected =
        binomial_poly(r, r + 1) * RatPoly(vn, {R(r * (r - 1)), R(6 * r), R(6)}) * R(1, (r + 2) * (r + 3));
    CHECK(hyper_sum_det(3, r).poly == expected);
  }
  const RatPoly c8 = binomial_poly(7, 8);
  CHECK(hyper_sum_det(5, 7).poly ==
        c8 * N_to_n(RatPoly({VarTag::N, 7}, {R(693), R(0), R(-280), R(0), R(16)})) * R(1, 1584));
  CHECK(hyper_sum_det(6, 7).poly ==
        c8 * N_to_n(RatPoly({VarTag::N, 7}, {R(0), R(6419), R(0), R(-1176), R(0), R(48)})) *
            R(1, 10296));
}

TEST_CASE("every route matches brute force and each other") {
  for (long m = 1; m <= 10; ++m)
    for (long r = 1; r <= 6; ++r) {
      const RatPoly ref = hyper_sum_poly(Method::determinant, m, r).poly;
      for (Method method : all_methods()) {
        CAPTURE(m);
        CAPTURE(r);
        CAPTURE(to_string(method));
        CHECK(hyper_sum_poly(method, m, r).poly == ref);
      }
      for (long n = 0; n <= 15; ++n)
        CHECK(ref(R(n)) == R(oracle::hyper_sum(m, r, n)));
      CHECK(ref.degree() == static_cast<std::size_t>(m + r));
      CHECK(ref.leading() == R(oracle::factorial(m), oracle::factorial(m + r)));
      CHECK(ref.coeff(0) == R(0));
    }
}

TEST_CASE("method names round trip") {
  for (Method m : all_methods())
    CHECK(method_from_string(to_string(m)) == m);
  CHECK_THROWS(method_from_string("nope"));
}

TEST_CASE("argument checks") {
  CHECK_THROWS(hyper_sum_bruteforce(-1, 0, 0));
  CHECK_THROWS(hyper_sum_det(0, 2));
  CHECK_THROWS(q_poly(2, 3));
}

TEST_CASE("memoized hyper_sum is call-order independent") {
  const RatPoly a = hyper_sum(7, 3);
  (void)hyper_sum(2, 5);
  CHECK(hyper_sum(7, 3) == a);
  CHECK(a == hyper_sum_fit(7, 3).poly);
}
