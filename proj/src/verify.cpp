#include "hypersum/verify.hpp"

#include "hypersum/hessenberg.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hypersum {

bool VerifyReport::pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellResult &c) { return c.pass(); }) &&
         std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureResult &f) { return f.pass; });
}

std::size_t VerifyReport::failure_count() const {
  std::size_t n = 0;
  for (const auto &c : cells)
    n += c.failures.size();
  for (const auto &f : fixtures)
    n += f.pass ? 0 : 1;
  return n;
}

std::size_t VerifyReport::check_count() const {
  std::size_t n = fixtures.size();
  for (const auto &c : cells)
    n += c.checks;
  return n;
}

namespace {

const Variable kN{VarTag::n, 0};

bool route_defined(Method method, long m, long r) {
  switch (method) {
  case Method::bruteforce_fit: return true;
  case Method::q_form:
  case Method::c_form:
  case Method::coeff_recurrence: return r >= 1;
  case Method::lemma_chain:
  case Method::determinant: return m >= 1;
  }
  return false;
}

class CellChecker {
public:
  CellChecker(long m, long r, long n_max) : n_max_(n_max) {
    result_.m = m;
    result_.r = r;
  }

  CellResult take() { return std::move(result_); }

  /// Runs `body`, converting an escaping exception into a failure.
  template <class F> void guarded(const std::string &check, F &&body) {
    try {
      body();
    } catch (const std::exception &e) {
      ++result_.checks;
      fail({check, "", "", std::nullopt, std::nullopt, Json{{"exception", e.what()}}});
    }
  }

  void same_poly(const std::string &check, const std::string &name_a, const RatPoly &a,
                 const std::string &name_b, const RatPoly &b) {
    ++result_.checks;
    if (a == b)
      return;
    std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    std::optional<long> index;
    for (std::size_t k = 0; k < len; ++k)
      if (a.coeff(k) != b.coeff(k)) {
        index = static_cast<long>(k);
        break;
      }
    fail({check, name_a, name_b, std::nullopt, index,
          Json{{name_a.empty() ? "lhs" : name_a, to_json(a)},
               {name_b.empty() ? "rhs" : name_b, to_json(b)}}});
  }

  void same_value(const std::string &check, const std::string &name_a, const Rational &a,
                  const std::string &name_b, const Rational &b, std::optional<long> n) {
    ++result_.checks;
    if (a == b)
      return;
    fail({check, name_a, name_b, n, std::nullopt,
          Json{{name_a.empty() ? "lhs" : name_a, to_json(a)},
               {name_b.empty() ? "rhs" : name_b, to_json(b)}}});
  }

  void holds(const std::string &check, bool ok, Json detail) {
    ++result_.checks;
    if (!ok)
      fail({check, "", "", std::nullopt, std::nullopt, std::move(detail)});
  }

  long n_max() const { return n_max_; }

private:
  void fail(CellFailure f) { result_.failures.push_back(std::move(f)); }

  long n_max_;
  CellResult result_;
};

void check_routes(CellChecker &c, long m, long r, std::span<const Method> methods) {
  std::vector<HyperSumPoly> routes;
  for (Method method : methods) {
    if (!route_defined(method, m, r))
      continue;
    c.guarded("route:" + to_string(method), [&] { routes.push_back(hyper_sum_poly(method, m, r)); });
  }
  std::vector<std::pair<std::string, RatPoly>> named;
  if (r == 0)
    named.emplace_back("definition", RatPoly::monomial(kN, static_cast<std::size_t>(m)));
  for (const auto &h : routes)
    named.emplace_back(to_string(h.method), h.poly);
  if (named.empty())
    return;

  for (std::size_t i = 1; i < named.size(); ++i)
    c.same_poly("route-agreement", named[0].first, named[0].second, named[i].first,
                named[i].second);

  std::vector<Rational> brute;
  for (long n = 0; n <= c.n_max(); ++n)
    brute.emplace_back(hyper_sum_bruteforce(m, r, n));
  for (const auto &[name, poly] : named)
    for (long n = 0; n <= c.n_max(); ++n)
      c.same_value("bruteforce-value", name, poly(Rational(n)), "bruteforce", brute[n], n);

  // Leading coefficient m!/(m+r)! (1 for r = 0) and zero constant term.
  const Rational lead(factorial(m), factorial(m + r));
  for (const auto &[name, poly] : named) {
    c.same_value("leading-coefficient", name, poly.coeff(static_cast<std::size_t>(m + r)),
                 "m!/(m+r)!", lead, std::nullopt);
    c.holds("degree", poly.degree() == std::optional<std::size_t>(m + r),
            Json{{"route", name}, {"poly", to_json(poly)}});
    if (r >= 1)
      c.same_value("constant-term", name, poly.coeff(0), "zero", Rational(), std::nullopt);
  }
}

void check_faulhaber_structure(CellChecker &c, long m, long r) {
  if (m < 1)
    return;
  FaulhaberPoly by_det = faulhaber_det(m, r);
  FaulhaberPoly by_rec = faulhaber_rec(m, r);
  c.same_poly("faulhaber-det-vs-rec", "determinant", by_det.poly, "recurrence", by_rec.poly);
  const RatPoly &g = by_det.poly;
  if (r == 0) {
    c.same_poly("faulhaber-r0", "determinant", g, "N^(m-1)",
                RatPoly::monomial({VarTag::N, 0}, static_cast<std::size_t>(m - 1)));
    return;
  }
  const Parity want = m % 2 == 1 ? Parity::even : Parity::odd;
  c.holds("faulhaber-parity", parity(g) == want,
          Json{{"expected", to_string(want)}, {"poly", to_json(g)}});
  std::size_t nonzero = 0;
  bool alternating = true;
  for (std::size_t j = 0; j < by_det.g_coeffs.size(); ++j) {
    const Rational &gj = by_det.g_coeffs[j];
    if (!gj.is_zero())
      ++nonzero;
    // g_j has sign (-1)^(top - j), top = number of coefficients - 1.
    const std::size_t top = by_det.g_coeffs.size() - 1;
    const int want_sign = (top - j) % 2 == 0 ? 1 : -1;
    if (gj.sign() != want_sign)
      alternating = false;
  }
  c.holds("faulhaber-nonzero-count", nonzero == static_cast<std::size_t>((m + 1) / 2),
          Json{{"expected", (m + 1) / 2}, {"actual", nonzero}, {"poly", to_json(g)}});
  c.holds("faulhaber-sign-alternation", alternating, Json{{"poly", to_json(g)}});
  // S = S_1 G with S_1 leading 1/(r+1)! and S leading m!/(m+r)!.
  c.same_value("faulhaber-leading", "G", g.leading(), "(r+1)! m!/(m+r)!",
               Rational(factorial(r + 1) * factorial(m), factorial(m + r)), std::nullopt);
}

void check_identities(CellChecker &c, long m, long r) {
  const RatPoly s = hyper_sum(m, r);
  const Variable v = kN;

  // S_m^(r+1) = ((n+r)/r) S_m^(r) - (1/r) S_{m+1}^(r)
  if (r >= 1) {
    c.guarded("r-recurrence", [&] {
      RatPoly rhs = (RatPoly::linear(v, Rational(r)) * s - hyper_sum(m + 1, r)) *
                    Rational(Integer(1), Integer(r));
      c.same_poly("r-recurrence", "S_m^(r+1)", hyper_sum(m, r + 1), "rhs", rhs);
    });
  }

  if (m >= 2) {
    // (m+r) S_m = m N_r S_{m-1} - r sum_{k=1}^{m-2} C(m,k) B_{m-k} S_k
    c.guarded("m-recurrence", [&] {
      RatPoly rhs = RatPoly::linear(v, Rational(r, 2)) * hyper_sum(m - 1, r) * Rational(m);
      for (long k = 1; k <= m - 2; ++k)
        rhs -= hyper_sum(k, r) * (Rational(r) * Rational(binomial(m, k)) * bernoulli(m - k));
      c.same_poly("m-recurrence", "(m+r) S_m", s * Rational(m + r), "rhs", rhs);
    });
    // m S_{m-1}^(r+1) = S_m + (m/2) S_{m-1} + sum_{k=1}^{m-2} C(m,k) B_{m-k} S_k
    c.guarded("m-recurrence-expanded", [&] {
      RatPoly rhs = s + hyper_sum(m - 1, r) * Rational(m, 2);
      for (long k = 1; k <= m - 2; ++k)
        rhs += hyper_sum(k, r) * (Rational(binomial(m, k)) * bernoulli(m - k));
      c.same_poly("m-recurrence-expanded", "m S_{m-1}^(r+1)", hyper_sum(m - 1, r + 1) * Rational(m), "rhs", rhs);
    });
  }

  // sum_{j=1}^{n} j S_m^(r-1)(j) = (n+1) S_m^(r)(n) - S_m^(r+1)(n)
  if (r >= 1) {
    c.guarded("weighted-prefix-sum", [&] {
      const RatPoly next = hyper_sum(m, r + 1);
      Rational lhs;
      for (long n = 1; n <= c.n_max(); ++n) {
        lhs += Rational(n) * Rational(hyper_sum_bruteforce(m, r - 1, n));
        Rational rhs = Rational(n + 1) * s(Rational(n)) - next(Rational(n));
        c.same_value("weighted-prefix-sum", "sum j S_m^(r-1)(j)", lhs, "(n+1) S_m^(r) - S_m^(r+1)", rhs, n);
      }
    });
  }

  if (m >= 1) {
    c.guarded("half-step", [&] {
      const bool odd = m % 2 == 1;
      const long half = odd ? (m + 1) / 2 : m / 2;
      RatPoly res = coffey_residual(half, r, odd ? CoffeyParity::odd : CoffeyParity::even);
      c.same_poly(odd ? "half-step-odd" : "half-step-even", "residual", res, "zero", RatPoly(v));
    });
  }

  if (r >= 1) {
    // c_{m,r}^1 = (-1)^m/(r-1)! sum_{i=0}^{r-1} [r, i+1] B_{m+i}
    c.guarded("c1-reduced", [&] {
      Rational reduced;
      for (long i = 0; i <= r - 1; ++i)
        reduced += Rational(stirling1_unsigned(r, i + 1)) * bernoulli(m + i);
      reduced *= Rational(Integer(1), factorial(r - 1));
      if (m % 2 == 1)
        reduced = -reduced;
      c.same_value("c1-reduced", "c_{m,r}^1", coeff_c(m, r, 1), "reduced", reduced, std::nullopt);
    });
    c.guarded("c-leading", [&] {
      c.same_value("c-leading", "c_{m,r}^{m+r}", coeff_c(m, r, m + r), "m!/(m+r)!",
                   Rational(factorial(m), factorial(m + r)), std::nullopt);
    });
  }

  if (r >= 1 && m == 1) {
    // q_{r',i}(n) = [r'+n+1, i+n+1]_{n+1}; one row per r' at m = 1.
    c.guarded("q-vs-r-stirling", [&] {
      const long rp = r;
      for (long i = 0; i <= rp; ++i) {
        const RatPoly q = q_poly(rp, i);
        for (long n = 0; n <= std::min<long>(c.n_max(), 8); ++n)
          c.same_value("q-vs-r-stirling", "q_{r,i}(n)", q(Rational(n)), "[r+n+1,i+n+1]_{n+1}",
                       Rational(r_stirling1(rp + n + 1, i + n + 1, n + 1)), n);
      }
    });
  }

  if (r == 0 && m >= 1) {
    c.guarded("det-H-r0", [&] {
      Rational coeff(rising_factorial(2, m - 1));
      if ((m - 1) % 2 == 1)
        coeff = -coeff;
      c.same_poly("det-H-r0", "det H_m^(0)", det(build_H(m, 0)), "closed form",
                  RatPoly::monomial({VarTag::N, 0}, static_cast<std::size_t>(m - 1), coeff));
    });
  }

  if (r >= 1 && m >= 1) {
    c.guarded("stirling-product", [&] {
      auto form = stirling_product_form(m, r);
      c.same_poly("stirling-product", "left*right", form.left * N_to_n(form.right), "r! S_m^(r)",
                  s * Rational(factorial(r)));
    });
    c.guarded("u-form", [&] {
      Theorem1Form t = theorem1_forms(m, r);
      const RatPoly pre = t.prefactor == Prefactor::s1 ? s1_poly(r) : hyper_sum(2, r);
      c.holds("u-form-degree", t.f_in_u.degree() == std::optional<std::size_t>((m + 1) / 2 - 1),
              Json{{"F", to_json(t.f_in_u)}});
      c.same_poly("u-form", "prefactor*F(n(n+r))", pre * N_to_n(from_u_form(t.f_in_u)),
                  "S_m^(r)", s);
    });
  }

  if (r == 1 && m >= 1) {
    c.guarded("faulhaber-r1", [&] {
      c.same_poly("faulhaber-r1", "r1-determinant", faulhaber_r1(m).poly, "Bernoulli formula in N",
                  n_to_N(power_sum_poly(m), 1));
    });
  }
}

} // namespace

CellResult check_cell(long m, long r, long n_max, std::span<const Method> methods) {
  CellChecker c(m, r, n_max);
  c.guarded("routes", [&] { check_routes(c, m, r, methods); });
  c.guarded("faulhaber-structure", [&] { check_faulhaber_structure(c, m, r); });
  c.guarded("identities", [&] { check_identities(c, m, r); });
  return c.take();
}

VerifyReport run_grid(long m_max, long r_max, long n_max, std::span<const Method> methods) {
  if (m_max < 1 || r_max < 1 || n_max < 1)
    throw std::invalid_argument("run_grid: bounds must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.m_max = m_max;
  report.r_max = r_max;
  report.n_max = n_max;
  report.methods.assign(methods.begin(), methods.end());
  for (long m = 0; m <= m_max; ++m)
    for (long r = 0; r <= r_max; ++r)
      report.cells.push_back(check_cell(m, r, n_max, methods));
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport run_all(const GridBounds &bounds, std::span<const Method> methods) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report = run_grid(bounds.m_max, bounds.r_max, bounds.n_max, methods);
  report.fixtures = golden_fixtures().fixtures;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const VerifyReport &report, bool include_timing) {
  Json methods = Json::array();
  for (Method m : report.methods)
    methods.push_back(to_string(m));
  Json cells = Json::array();
  for (const auto &cell : report.cells) {
    Json failures = Json::array();
    for (const auto &f : cell.failures) {
      Json jf{{"check", f.check}, {"method_a", f.method_a}, {"method_b", f.method_b}};
      jf["n"] = f.n ? Json(*f.n) : Json(nullptr);
      jf["coeff_index"] = f.coeff_index ? Json(*f.coeff_index) : Json(nullptr);
      jf["detail"] = f.detail;
      failures.push_back(std::move(jf));
    }
    cells.push_back(Json{{"m", cell.m},
                         {"r", cell.r},
                         {"status", cell.pass() ? "pass" : "fail"},
                         {"checks", cell.checks},
                         {"failures", std::move(failures)}});
  }
  Json fixtures = Json::array();
  for (const auto &f : report.fixtures)
    fixtures.push_back(Json{{"name", f.name}, {"status", f.pass ? "pass" : "fail"}, {"detail", f.detail}});
  Json out{{"status", report.pass() ? "pass" : "fail"},
           {"grid", Json{{"m_max", report.m_max}, {"r_max", report.r_max}, {"n_max", report.n_max}}},
           {"methods", std::move(methods)},
           {"checks", report.check_count()},
           {"failures", report.failure_count()},
           {"cells", std::move(cells)},
           {"fixtures", std::move(fixtures)}};
  if (include_timing)
    out["wall_ms"] = report.wall_ms;
  return out;
}

std::string summary_table(const VerifyReport &report) {
  std::ostringstream os;
  os << "grid m<=" << report.m_max << " r<=" << report.r_max << " n<=" << report.n_max << " ("
     << report.cells.size() << " cells, " << report.fixtures.size() << " fixtures)\n";
  if (!report.cells.empty()) {
    os << "  m\\r";
    for (long r = 0; r <= report.r_max; ++r)
      os << std::setw(6) << r;
    os << "\n";
    for (long m = 0; m <= report.m_max; ++m) {
      os << std::setw(5) << m;
      for (long r = 0; r <= report.r_max; ++r) {
        const auto &cell = report.cells[static_cast<std::size_t>(m * (report.r_max + 1) + r)];
        os << std::setw(6) << (cell.pass() ? "ok" : "FAIL");
      }
      os << "\n";
    }
  }
  for (const auto &cell : report.cells)
    for (const auto &f : cell.failures) {
      os << "FAIL cell (m=" << cell.m << ", r=" << cell.r << ") " << f.check;
      if (!f.method_a.empty())
        os << " [" << f.method_a << " vs " << f.method_b << "]";
      if (f.n)
        os << " at n=" << *f.n;
      if (f.coeff_index)
        os << " first differing coefficient n^" << *f.coeff_index;
      os << "\n";
    }
  std::size_t fixtures_ok = 0;
  for (const auto &f : report.fixtures) {
    if (f.pass)
      ++fixtures_ok;
    else
      os << "FAIL fixture " << f.name << "\n";
  }
  os << "fixtures: " << fixtures_ok << "/" << report.fixtures.size() << " pass\n";
  os << (report.pass() ? "PASS" : "FAIL") << ": " << report.check_count() << " checks, "
     << report.failure_count() << " failures, " << std::fixed << std::setprecision(1)
     << report.wall_ms << " ms\n";
  return os.str();
}

} // namespace hypersum
