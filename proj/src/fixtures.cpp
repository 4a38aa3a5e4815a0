// Worked examples reproduced as exact-equality fixtures.

#include "hypersum/hessenberg.hpp"
#include "hypersum/verify.hpp"

#include <functional>

namespace hypersum {

namespace {

const Variable kN{VarTag::n, 0};

RatPoly in_N(long r, std::vector<Rational> coeffs) { return RatPoly({VarTag::N, r}, std::move(coeffs)); }

RatPoly in_n(std::vector<Rational> coeffs) { return RatPoly(kN, std::move(coeffs)); }

RatPoly binomial_poly(long shift, long k) {
  // C(n + shift, k) = (n+shift)(n+shift-1)...(n+shift-k+1)/k!
  RatPoly acc = RatPoly::constant(kN, Rational(1));
  for (long i = 0; i < k; ++i)
    acc *= RatPoly::linear(kN, Rational(shift - i));
  return acc * Rational(Integer(1), factorial(k));
}

class FixtureSet {
public:
  void poly(const std::string &name, const RatPoly &actual, const RatPoly &expected) {
    add(name, [&] {
      return std::make_pair(actual == expected,
                            Json{{"actual", to_json(actual)}, {"expected", to_json(expected)}});
    });
  }

  void value(const std::string &name, const Rational &actual, const Rational &expected) {
    add(name, [&] {
      return std::make_pair(actual == expected,
                            Json{{"actual", to_json(actual)}, {"expected", to_json(expected)}});
    });
  }

  void add(const std::string &name, const std::function<std::pair<bool, Json>()> &check) {
    FixtureResult f;
    f.name = name;
    try {
      auto [ok, detail] = check();
      f.pass = ok;
      if (!ok)
        f.detail = std::move(detail);
    } catch (const std::exception &e) {
      f.pass = false;
      f.detail = Json{{"exception", e.what()}};
    }
    results.push_back(std::move(f));
  }

  std::vector<FixtureResult> results;
};

using R = Rational;

void matrix_fixture(FixtureSet &fs, const std::string &name, long m, long r,
                    const std::vector<std::vector<RatPoly>> &rows) {
  fs.add(name, [&] {
    const PolyHessenberg h = build_H(m, r);
    bool ok = h.order() == rows.size();
    Json entries = Json::array();
    for (std::size_t i = 0; ok && i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        entries.push_back(to_json(h.at(i, j)));
        ok = ok && h.at(i, j) == rows[i][j];
      }
    return std::make_pair(ok, Json{{"entries", entries}});
  });
}

} // namespace

VerifyReport golden_fixtures() {
  FixtureSet fs;
  const RatPoly g57 = in_N(7, {R(7, 16), R(0), R(-35, 198), R(0), R(1, 99)});
  const RatPoly g67 = in_N(7, {R(0), R(6419, 10296), R(0), R(-49, 429), R(0), R(2, 429)});

  fs.poly("G_5^(7) by determinant", faulhaber_det(5, 7).poly, g57);
  fs.poly("G_5^(7) by recurrence", faulhaber_rec(5, 7).poly, g57);
  fs.poly("G_6^(7) by determinant", faulhaber_det(6, 7).poly, g67);
  fs.poly("G_6^(7) by recurrence", faulhaber_rec(6, 7).poly, g67);

  {
    const Variable v{VarTag::N, 7};
    auto c = [&](Rational x) { return RatPoly::constant(v, std::move(x)); };
    auto d = [&](long k) { return RatPoly::monomial(v, 1, R(-k)); };
    const RatPoly z(v);
    std::vector<std::vector<RatPoly>> h57{{d(2), c(9), z, z},
                                          {c(R(7, 2)), d(3), c(10), z},
                                          {z, c(7), d(4), c(11)},
                                          {c(R(-7, 6)), z, c(R(35, 3)), d(5)}};
    matrix_fixture(fs, "H_5^(7) entries", 5, 7, h57);
    std::vector<std::vector<RatPoly>> h67{{d(2), c(9), z, z, z},
                                          {c(R(7, 2)), d(3), c(10), z, z},
                                          {z, c(7), d(4), c(11), z},
                                          {c(R(-7, 6)), z, c(R(35, 3)), d(5), c(12)},
                                          {z, c(R(-7, 2)), z, c(R(35, 2)), d(6)}};
    matrix_fixture(fs, "H_6^(7) entries", 6, 7, h67);
    fs.value("9^rising(4) = 11880", R(rising_factorial(9, 4)), R(11880));
    fs.poly("det H_5^(7) = 11880 G_5^(7)", det(build_H(5, 7)), g57 * R(11880));
  }

  {
    // S_5^(7) = (1/1584) C(n+7,8) [16 N^4 - 280 N^2 + 693], N = n + 7/2
    const RatPoly c8 = binomial_poly(7, 8);
    const RatPoly b5 = N_to_n(in_N(7, {R(693), R(0), R(-280), R(0), R(16)}));
    const RatPoly b6 = N_to_n(in_N(7, {R(0), R(6419), R(0), R(-1176), R(0), R(48)}));
    const RatPoly s57 = c8 * b5 * R(1, 1584);
    const RatPoly s67 = c8 * b6 * R(1, 10296);
    fs.poly("S_5^(7) factored display (determinant)", hyper_sum_det(5, 7).poly, s57);
    fs.poly("S_5^(7) factored display (brute-force fit)", hyper_sum_fit(5, 7).poly, s57);
    fs.poly("S_6^(7) factored display (determinant)", hyper_sum_det(6, 7).poly, s67);
    fs.poly("S_6^(7) factored display (brute-force fit)", hyper_sum_fit(6, 7).poly, s67);
  }

  for (long r = 1; r <= 5; ++r) {
    // C(n+r, r+1) (6n^2 + 6rn + r(r-1)) / ((r+2)(r+3))
    const RatPoly expected = binomial_poly(r, r + 1) * in_n({R(r * (r - 1)), R(6 * r), R(6)}) *
                             R(1, (r + 2) * (r + 3));
    fs.poly("S_3^(" + std::to_string(r) + ") closed form", hyper_sum_det(3, r).poly, expected);
  }
  {
    const RatPoly t = binomial_poly(1, 2);
    fs.poly("S_3(n) = C(n+1,2)^2", hyper_sum_det(3, 1).poly, t * t);
  }

  fs.poly("S_7 in N = n + 1/2", faulhaber_r1(7).poly,
          in_N(1, {R(17, 2048), R(0), R(-31, 384), R(0), R(49, 192), R(0), R(-7, 24), R(0), R(1, 8)}));
  fs.poly("S_8 in N = n + 1/2", faulhaber_r1(8).poly,
          in_N(1, {R(0), R(127, 3840), R(0), R(-31, 144), R(0), R(49, 120), R(0), R(-1, 3), R(0),
                   R(1, 9)}));

  {
    // S_5^(4) - 1/2 S_5^(3) in two published forms.
    const RatPoly lhs = hyper_sum(5, 4) - hyper_sum(5, 3) * R(1, 2);
    RatPoly front = in_n({R(3), R(2)}) * R(1, 240);
    for (long i = 0; i <= 3; ++i)
      front *= RatPoly::linear(kN, R(i));
    const RatPoly centered = N_to_n(in_N(3, {R(-859, 2016), R(0), R(-5, 252), R(0), R(5, 126)}));
    fs.poly("S_5^(4) - S_5^(3)/2, centered form", lhs, front * centered);
    const RatPoly u = in_n({R(0), R(3), R(1)}); // n(n+3)
    const RatPoly in_u = u * u * R(5, 126) + u * R(10, 63) + RatPoly::constant(kN, R(-17, 63));
    fs.poly("S_5^(4) - S_5^(3)/2, n(n+3) form", lhs, front * in_u);
    fs.poly("S_5^(4) - S_5^(3)/2 via odd half-step residual", coffey_residual(3, 3, CoffeyParity::odd),
            RatPoly(kN));
  }

  for (long m = 1; m <= 8; ++m) {
    Rational c(rising_factorial(2, m - 1));
    if ((m - 1) % 2 == 1)
      c = -c;
    fs.poly("det H_" + std::to_string(m) + "^(0) closed form", det(build_H(m, 0)),
            RatPoly::monomial({VarTag::N, 0}, static_cast<std::size_t>(m - 1), c));
  }

  {
    // The g_{9,j} relations for m = 5; the displayed constants have
    // denominator 2m-1+r = 19, i.e. r = 10.
    const long r = 10;
    auto g = [&](long big_m, long j) { return faulhaber_det(big_m, r).g_coeffs.at(j); };
    fs.value("g_{9,0} relation (r=10)", g(9, 0),
             R(3, 19) * g(1, 0) - R(20, 19) * g(3, 0) + R(42, 19) * g(5, 0) - R(60, 19) * g(7, 0));
    fs.value("g_{9,1} relation (r=10)", g(9, 1),
             R(9, 19) * g(8, 0) - R(20, 19) * g(3, 1) + R(42, 19) * g(5, 1) - R(60, 19) * g(7, 1));
    fs.value("g_{9,2} relation (r=10)", g(9, 2),
             R(9, 19) * g(8, 1) + R(42, 19) * g(5, 2) - R(60, 19) * g(7, 2));
    fs.value("g_{9,3} relation (r=10)", g(9, 3), R(9, 19) * g(8, 2) - R(60, 19) * g(7, 3));
    fs.value("g_{9,4} relation (r=10)", g(9, 4), R(9, 19) * g(8, 3));
  }

  for (long r = 0; r <= 6; ++r) {
    fs.poly("G_1^(" + std::to_string(r) + ") = 1", faulhaber_det(1, r).poly,
            RatPoly::constant({VarTag::N, r}, R(1)));
    fs.poly("G_2^(" + std::to_string(r) + ") = 2N/(r+2)", faulhaber_rec(2, r).poly,
            RatPoly::monomial({VarTag::N, r}, 1, R(2, r + 2)));
  }

  for (long r = 0; r <= 6; ++r)
    for (long n = 0; n <= 10; ++n) {
      fs.value("S_1^(" + std::to_string(r) + ")(" + std::to_string(n) + ") = C(n+r, r+1)",
               R(hyper_sum_bruteforce(1, r, n)), s1_closed(r, n));
      fs.value("S_2^(" + std::to_string(r) + ")(" + std::to_string(n) + ") = (2n+r)/(r+2) S_1",
               R(hyper_sum_bruteforce(2, r, n)), s2_closed(r, n));
    }

  for (long m = 0; m <= 8; ++m)
    for (long r = 1; r <= 5; ++r)
      fs.value("c_{" + std::to_string(m) + "," + std::to_string(r) + "}^{m+r} = m!/(m+r)!",
               coeff_c(m, r, m + r), R(factorial(m), factorial(m + r)));

  VerifyReport report;
  report.fixtures = std::move(fs.results);
  return report;
}

} // namespace hypersum
