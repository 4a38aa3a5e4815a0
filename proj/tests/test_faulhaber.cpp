#include "oracles.hpp"

#include "hypersum/hypersum.hpp"

#include <doctest.h>

using namespace hypersum;
using R = Rational;

namespace {
const Variable vn{VarTag::n, 0};
RatPoly in_N(long r, std::vector<R> cs) { return RatPoly({VarTag::N, r}, std::move(cs)); }
} // namespace

TEST_CASE("G_5^(7) and G_6^(7)") {
  const RatPoly g5 = in_N(7, {R(7, 16), R(0), R(-35, 198), R(0), R(1, 99)});
  const RatPoly g6 = in_N(7, {R(0), R(6419, 10296), R(0), R(-49, 429), R(0), R(2, 429)});
  CHECK(faulhaber_det(5, 7).poly == g5);
  CHECK(faulhaber_rec(5, 7).poly == g5);
  CHECK(faulhaber_det(6, 7).poly == g6);
  CHECK(faulhaber_rec(6, 7).poly == g6);
  CHECK(faulhaber_det(5, 7).g_coeffs == std::vector<R>{R(7, 16), R(-35, 198), R(1, 99)});
  CHECK(faulhaber_det(6, 7).g_coeffs == std::vector<R>{R(6419, 10296), R(-49, 429), R(2, 429)});
}

TEST_CASE("low orders") {
  for (long r = 0; r <= 8; ++r) {
    CHECK(faulhaber_det(1, r).poly == RatPoly::constant({VarTag::N, r}, R(1)));
    CHECK(faulhaber_rec(2, r).poly == RatPoly::monomial({VarTag::N, r}, 1, R(2, r + 2)));
  }
}

TEST_CASE("G-form reproduces the hyper-sum and has the predicted shape") {
  for (long r = 1; r <= 6; ++r)
    for (long m = 1; m <= 12; ++m) {
      CAPTURE(m);
      CAPTURE(r);
      const FaulhaberPoly g = faulhaber_det(m, r);
      CHECK(faulhaber_rec(m, r).poly == g.poly);
      for (long n = 1; n <= 8; ++n)
        CHECK(s1_closed(r, n) * g.poly(R(n) + R(r, 2)) == R(oracle::hyper_sum(m, r, n)));
      CHECK(parity(g.poly) == (m % 2 ? Parity::even : Parity::odd));
      long nonzero = 0;
      for (const auto &c : g.poly.coeffs())
        nonzero += c.is_zero() ? 0 : 1;
      CHECK(nonzero == (m + 1) / 2);
      for (std::size_t j = 1; j < g.g_coeffs.size(); ++j)
        CHECK(g.g_coeffs[j].sign() == -g.g_coeffs[j - 1].sign());
      CHECK(g.poly.leading() ==
            R(oracle::factorial(r + 1) * oracle::factorial(m), oracle::factorial(m + r)));
    }
}

TEST_CASE("r = 0 collapses to N^(m-1)") {
  for (long m = 1; m <= 8; ++m)
    CHECK(faulhaber_rec(m, 0).poly == RatPoly::monomial({VarTag::N, 0}, static_cast<std::size_t>(m - 1)));
}

TEST_CASE("u-forms") {
  for (long r = 1; r <= 5; ++r)
    for (long m = 1; m <= 9; ++m) {
      const Theorem1Form t = theorem1_forms(m, r);
      CHECK(t.prefactor == (m % 2 ? Prefactor::s1 : Prefactor::s2));
      CHECK(t.f_in_u.degree() == static_cast<std::size_t>((m + 1) / 2 - 1));
      for (long n = 1; n <= 6; ++n) {
        const R pre = m % 2 ? s1_closed(r, n) : s2_closed(r, n);
        CHECK(pre * t.f_in_u(R(n * (n + r))) == R(oracle::hyper_sum(m, r, n)));
      }
    }
}

TEST_CASE("power sums in N = n + 1/2") {
  CHECK(faulhaber_r1(1).poly == in_N(1, {R(-1, 8), R(0), R(1, 2)}));
  CHECK(faulhaber_r1(7).poly ==
        in_N(1, {R(17, 2048), R(0), R(-31, 384), R(0), R(49, 192), R(0), R(-7, 24), R(0), R(1, 8)}));
  CHECK(faulhaber_r1(8).poly == in_N(1, {R(0), R(127, 3840), R(0), R(-31, 144), R(0), R(49, 120),
                                         R(0), R(-1, 3), R(0), R(1, 9)}));
  for (long m = 1; m <= 10; ++m) {
    CHECK(faulhaber_r1(m).poly == n_to_N(power_sum_poly(m), 1));
    CHECK(faulhaber_r1(m).poly(R(3, 2)) == R(1));
    CHECK(faulhaber_r1(m).poly(R(5, 2)) == R(1) + R(Integer(Integer(1) << static_cast<unsigned>(m))));
  }
}

TEST_CASE("half-step identities") {
  for (long m = 1; m <= 5; ++m)
    for (long r = 0; r <= 4; ++r) {
      CHECK(coffey_residual(m, r, CoffeyParity::odd).is_zero());
      CHECK(coffey_residual(m, r, CoffeyParity::even).is_zero());
    }
  const RatPoly lhs = hyper_sum(5, 4) - hyper_sum(5, 3) * R(1, 2);
  CHECK(lhs(R(1)) == R(1, 2));
  RatPoly front = RatPoly(vn, {R(3), R(2)}) * R(1, 240);
  for (long i = 0; i <= 3; ++i)
    front *= RatPoly::linear(vn, R(i));
  const RatPoly u(vn, {R(0), R(3), R(1)});
  const RatPoly bracket = u * u * R(5, 126) + u * R(10, 63) + RatPoly::constant(vn, R(-17, 63));
  CHECK((lhs - front * bracket).is_zero());
}

TEST_CASE("stirling product form") {
  for (long r = 1; r <= 5; ++r)
    for (long m = 1; m <= 7; ++m) {
      const StirlingProductForm f = stirling_product_form(m, r);
      for (long n = 0; n <= 6; ++n)
        CHECK(f.left(R(n)) * f.right(R(n) + R(r, 2)) ==
              R(Integer(oracle::factorial(r) * oracle::hyper_sum(m, r, n))));
    }
  CHECK(stirling_product_form(3, 1).left == power_sum_poly(1));
  const StirlingProductForm two = stirling_product_form(2, 2);
  CHECK(two.left == power_sum_poly(1) + power_sum_poly(2));
  CHECK(two.left(R(3)) * two.right(R(4)) == R(40));
}

TEST_CASE("g_{9,j} relations") {
  const long r = 10;
  auto g = [&](long mm, std::size_t j) { return faulhaber_rec(mm, r).g_coeffs.at(j); };
  CHECK(g(9, 2) == R(9, 19) * g(8, 1) + R(42, 19) * g(5, 2) - R(60, 19) * g(7, 2));
  CHECK(g(9, 4) == R(9, 19) * g(8, 3));
}

TEST_CASE("faulhaber_rec caches follow a Bernoulli override") {
  const RatPoly clean = faulhaber_rec(6, 3).poly;
  {
    ScopedBernoulliOverride fault(4, R(1, 30));
    CHECK(faulhaber_rec(6, 3).poly != clean);
    CHECK(hyper_sum(6, 3) != hyper_sum_fit(6, 3).poly);
  }
  CHECK(faulhaber_rec(6, 3).poly == clean);
  CHECK(hyper_sum(6, 3) == hyper_sum_fit(6, 3).poly);
}
