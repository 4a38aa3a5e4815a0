#include "hypersum/cli.hpp"

#include "hypersum/hessenberg.hpp"
#include "hypersum/hypersum.hpp"
#include "hypersum/serialize.hpp"
#include "hypersum/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hypersum::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalArgs {
  long m = 0, r = 0, n = 0;
  std::string method = "auto";
  std::string format = "text";
};

struct PolyArgs {
  long m = 0, r = 0;
  std::string var = "n";
  std::string format = "text";
  bool factored = false;
};

struct DetArgs {
  long m = 1, r = 0;
  std::optional<long> at;
  std::string format = "text";
};

struct VerifyArgs {
  GridBounds bounds;
  std::string format = "text";
  std::vector<std::string> methods;
  bool inject_fault = false;
};

struct TableArgs {
  long max_m = 5, max_r = 3, n = 0;
  std::string format = "text";
};

Method route_for_flag(const std::string &flag) {
  if (flag == "det") return Method::determinant;
  if (flag == "q") return Method::q_form;
  if (flag == "c") return Method::c_form;
  if (flag == "lemma") return Method::lemma_chain;
  if (flag == "chain") return Method::coeff_recurrence;
  if (flag == "fit") return Method::bruteforce_fit;
  return method_from_string(flag);
}

// --- eval ------------------------------------------------------------------

int cmd_eval(const EvalArgs &a, std::ostream &out) {
  Rational value;
  if (a.method == "bruteforce") {
    value = Rational(hyper_sum_bruteforce(a.m, a.r, a.n));
  } else if (a.method == "auto") {
    value = hyper_sum(a.m, a.r)(Rational(a.n));
    if (a.n <= 20) {
      Rational brute(hyper_sum_bruteforce(a.m, a.r, a.n));
      if (brute != value)
        throw MismatchError("determinant route gives " + value.str() + " but brute force gives " +
                            brute.str());
    }
  } else {
    const Method route = route_for_flag(a.method);
    if ((route == Method::determinant || route == Method::lemma_chain) && a.m < 1)
      throw UsageError("--method " + a.method + " requires --m >= 1");
    value = hyper_sum_poly(route, a.m, a.r).poly(Rational(a.n));
  }
  if (a.format == "json")
    out << Json{{"m", a.m}, {"r", a.r}, {"n", a.n}, {"method", a.method}, {"value", to_json(value)}}.dump()
        << "\n";
  else
    out << value.str() << "\n";
  return kExitOk;
}

// --- poly ------------------------------------------------------------------

std::string binomial_text(long r) {
  return "binom(n+" + std::to_string(r) + "," + std::to_string(r + 1) + ")";
}

int cmd_poly(const PolyArgs &a, std::ostream &out) {
  if (a.var == "u") {
    if (a.r < 1 || a.m < 1)
      throw UsageError("--var u requires --m >= 1 and --r >= 1");
    const Theorem1Form t = theorem1_forms(a.m, a.r);
    const std::string pre = t.prefactor == Prefactor::s1 ? "1" : "2";
    if (a.format == "json") {
      Json j = to_json(t.f_in_u);
      j["prefactor"] = to_string(t.prefactor);
      out << j.dump() << "\n";
    } else if (a.format == "latex") {
      out << "S_{" << a.m << "}^{(" << a.r << ")}(n) = S_{" << pre << "}^{(" << a.r
          << ")}(n) \\left[" << to_latex(t.f_in_u) << "\\right], \\quad u = n(n+" << a.r << ")\n";
    } else {
      out << "S_" << pre << "^(" << a.r << ")(n) * [" << to_text(t.f_in_u) << "], u = n(n+" << a.r
          << ")\n";
    }
    return kExitOk;
  }

  if (a.factored) {
    if (a.var != "N")
      throw UsageError("--factored applies to --var N");
    if (a.m < 1)
      throw UsageError("--factored requires --m >= 1");
    const FaulhaberPoly g = faulhaber_det(a.m, a.r);
    const ContentSplit split = primitive_part(g.poly);
    if (a.format == "json") {
      out << Json{{"scale", to_json(split.content)},
                  {"binomial", Json{{"n_plus", a.r}, {"k", a.r + 1}}},
                  {"bracket", to_json(split.primitive)}}
                 .dump()
          << "\n";
    } else if (a.format == "latex") {
      out << to_latex(split.content) << " \\binom{n+" << a.r << "}{" << a.r + 1 << "} \\left["
          << to_latex(split.primitive) << "\\right], \\quad N_{" << a.r << "} = n + \\frac{" << a.r
          << "}{2}\n";
    } else {
      out << "(" << split.content.str() << ")*" << binomial_text(a.r) << "*["
          << to_text(split.primitive) << "], N = n + " << Rational(a.r, 2).str() << "\n";
    }
    return kExitOk;
  }

  RatPoly p = hyper_sum(a.m, a.r);
  if (a.var == "N")
    p = n_to_N(p, a.r);
  if (a.format == "json")
    out << to_json(p).dump() << "\n";
  else if (a.format == "latex")
    out << to_latex(p) << "\n";
  else
    out << to_text(p) << "\n";
  return kExitOk;
}

// --- det -------------------------------------------------------------------

template <class T, class F>
void print_matrix(std::ostream &out, const HessenbergMatrix<T> &h, F &&render) {
  const std::size_t k = h.order();
  std::vector<std::vector<std::string>> cells(k, std::vector<std::string>(k));
  std::vector<std::size_t> width(k, 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      cells[i][j] = render(h.at(i, j));
      width[j] = std::max(width[j], cells[i][j].size());
    }
  for (std::size_t i = 0; i < k; ++i) {
    out << "[";
    for (std::size_t j = 0; j < k; ++j)
      out << (j ? "  " : " ") << std::setw(static_cast<int>(width[j])) << cells[i][j];
    out << " ]\n";
  }
}

int cmd_det(const DetArgs &a, std::ostream &out) {
  const PolyHessenberg h = build_H(a.m, a.r);
  if (a.at) {
    const Rational big_n = Rational(*a.at) + Rational(a.r, 2);
    const HessenbergMatrix<Rational> hv = evaluate_at(h, big_n);
    const Rational d = det(hv);
    if (a.format == "json") {
      Json entries = Json::array();
      for (const auto &e : hv.entries())
        entries.push_back(to_json(e));
      out << Json{{"order", hv.order()}, {"r", a.r}, {"n", *a.at}, {"N", to_json(big_n)},
                  {"entries", entries}, {"det", to_json(d)}}
                 .dump()
          << "\n";
    } else {
      out << "H_" << a.m << "^(" << a.r << ") at n = " << *a.at << " (N = " << big_n.str()
          << "), order " << hv.order() << "\n";
      print_matrix(out, hv, [](const Rational &q) { return q.str(); });
      out << "det = " << d.str() << "\n";
    }
    return kExitOk;
  }
  const RatPoly d = det(h);
  if (a.format == "json") {
    Json entries = Json::array();
    for (const auto &e : h.entries())
      entries.push_back(to_json(e));
    out << Json{{"order", h.order()}, {"r", a.r}, {"entries", entries}, {"det", to_json(d)}}.dump()
        << "\n";
  } else {
    out << "H_" << a.m << "^(" << a.r << ")(N), N = n + " << Rational(a.r, 2).str() << ", order "
        << h.order() << "\n";
    print_matrix(out, h, [](const RatPoly &p) { return to_text(p); });
    out << "det = " << to_text(d) << "\n";
  }
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  std::vector<Method> methods;
  for (const auto &name : a.methods)
    methods.push_back(route_for_flag(name));
  if (methods.empty())
    methods.assign(all_methods().begin(), all_methods().end());
  std::optional<ScopedBernoulliOverride> fault;
  if (a.inject_fault)
    fault.emplace(4, Rational(1, 30)); // true value is -1/30
  const VerifyReport report = run_all(a.bounds, methods);
  if (a.format == "json")
    out << to_json(report).dump(2) << "\n";
  else
    out << summary_table(report);
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

// --- table -----------------------------------------------------------------

int cmd_table(const TableArgs &a, std::ostream &out) {
  struct Row {
    long m, r;
    Rational value;
  };
  std::vector<Row> rows;
  for (long m = 1; m <= a.max_m; ++m)
    for (long r = 1; r <= a.max_r; ++r)
      rows.push_back({m, r, hyper_sum(m, r)(Rational(a.n))});
  if (a.format == "csv") {
    out << "m,r,value\n";
    for (const auto &row : rows)
      out << row.m << "," << row.r << "," << row.value.str() << "\n";
  } else if (a.format == "json") {
    Json arr = Json::array();
    for (const auto &row : rows)
      arr.push_back(Json{{"m", row.m}, {"r", row.r}, {"value", to_json(row.value)}});
    out << Json{{"n", a.n}, {"values", arr}}.dump() << "\n";
  } else {
    std::size_t width = 1;
    for (const auto &row : rows)
      width = std::max(width, row.value.str().size());
    out << "S_m^(r)(" << a.n << ")\n" << std::setw(4) << "m\\r";
    for (long r = 1; r <= a.max_r; ++r)
      out << " " << std::setw(static_cast<int>(width)) << r;
    out << "\n";
    for (long m = 1; m <= a.max_m; ++m) {
      out << std::setw(4) << m;
      for (long r = 1; r <= a.max_r; ++r)
        out << " " << std::setw(static_cast<int>(width))
            << rows[static_cast<std::size_t>((m - 1) * a.max_r + (r - 1))].value.str();
      out << "\n";
    }
  }
  return kExitOk;
}

} // namespace

// --- table cache -----------------------------------------------------------

void load_table_cache(const std::string &dir, std::ostream &err) {
  namespace fs = std::filesystem;
  try {
    const fs::path b = fs::path(dir) / "bernoulli.json";
    if (fs::exists(b)) {
      std::ifstream in(b);
      Json j = Json::parse(in);
      std::vector<Rational> values;
      for (const auto &e : j)
        values.push_back(rational_from_json(e));
      if (!BernoulliTable::global().seed(values))
        err << "hypersum: ignoring inconsistent Bernoulli cache " << b << "\n";
    }
    const fs::path s = fs::path(dir) / "stirling.json";
    if (fs::exists(s)) {
      std::ifstream in(s);
      Json j = Json::parse(in);
      std::vector<std::vector<Integer>> rows;
      for (const auto &row : j) {
        std::vector<Integer> out;
        for (const auto &e : row)
          out.emplace_back(e.get<std::string>(), 10);
        rows.push_back(std::move(out));
      }
      if (!StirlingTable::global().seed(rows))
        err << "hypersum: ignoring inconsistent Stirling cache " << s << "\n";
    }
  } catch (const std::exception &e) {
    err << "hypersum: ignoring unreadable table cache in " << dir << ": " << e.what() << "\n";
  }
}

void store_table_cache(const std::string &dir, std::ostream &err) {
  namespace fs = std::filesystem;
  auto write = [&](const fs::path &target, const Json &j) {
    const fs::path tmp = target.string() + ".tmp";
    {
      std::ofstream o(tmp);
      o << j.dump() << "\n";
      if (!o)
        throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
  };
  try {
    fs::create_directories(dir);
    Json b = Json::array();
    for (const auto &q : BernoulliTable::global().snapshot())
      b.push_back(to_json(q));
    write(fs::path(dir) / "bernoulli.json", b);
    Json s = Json::array();
    for (const auto &row : StirlingTable::global().snapshot()) {
      Json jr = Json::array();
      for (const auto &v : row)
        jr.push_back(v.get_str());
      s.push_back(std::move(jr));
    }
    write(fs::path(dir) / "stirling.json", s);
  } catch (const std::exception &e) {
    err << "hypersum: could not store table cache in " << dir << ": " << e.what() << "\n";
  }
}

// --- dispatch --------------------------------------------------------------

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact hyper-sums of powers of integers", "hypersum"};
  app.require_subcommand(1);

  const auto non_neg = CLI::NonNegativeNumber;
  const auto at_least_one = CLI::Range(1L, std::numeric_limits<long>::max());

  EvalArgs eval;
  auto *eval_cmd = app.add_subcommand("eval", "Print S_m^(r)(n) exactly");
  eval_cmd->add_option("--m", eval.m, "Power m")->required()->check(non_neg);
  eval_cmd->add_option("--r", eval.r, "Fold count r")->required()->check(non_neg);
  eval_cmd->add_option("--n", eval.n, "Upper limit n")->required()->check(non_neg);
  eval_cmd->add_option("--method", eval.method, "Route")
      ->check(CLI::IsMember({"auto", "bruteforce", "det", "q", "c", "lemma", "chain", "fit"}));
  eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember({"text", "json"}));

  PolyArgs poly;
  auto *poly_cmd = app.add_subcommand("poly", "Print S_m^(r) as a polynomial");
  poly_cmd->add_option("--m", poly.m)->required()->check(non_neg);
  poly_cmd->add_option("--r", poly.r)->required()->check(non_neg);
  poly_cmd->add_option("--var", poly.var, "n, N = n + r/2, or u = n(n+r)")
      ->check(CLI::IsMember({"n", "N", "u"}));
  poly_cmd->add_option("--format", poly.format)->check(CLI::IsMember({"text", "json", "latex"}));
  poly_cmd->add_flag("--factored", poly.factored, "S_1^(r) times the G-form (with --var N)");

  DetArgs detargs;
  long det_at = 0;
  auto *det_cmd = app.add_subcommand("det", "Print H_m^(r)(N) and its determinant");
  det_cmd->add_option("--m", detargs.m)->required()->check(at_least_one);
  det_cmd->add_option("--r", detargs.r)->required()->check(non_neg);
  auto *at_opt = det_cmd->add_option("--at", det_at, "Substitute a concrete n")->check(non_neg);
  det_cmd->add_option("--format", detargs.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Cross-check every route and identity");
  verify_cmd->add_option("--max-m", verify.bounds.m_max)->check(at_least_one);
  verify_cmd->add_option("--max-r", verify.bounds.r_max)->check(at_least_one);
  verify_cmd->add_option("--max-n", verify.bounds.n_max)->check(at_least_one);
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--methods", verify.methods, "Subset of routes to compare")
      ->check(CLI::IsMember({"fit", "q", "c", "chain", "lemma", "det"}));
  verify_cmd->add_flag("--inject-fault", verify.inject_fault)
      ->group(""); // corrupts B_4 to exercise failure reporting

  TableArgs table;
  auto *table_cmd = app.add_subcommand("table", "Tabulate S_m^(r)(n) for 1 <= m, r");
  table_cmd->add_option("--max-m", table.max_m)->check(at_least_one);
  table_cmd->add_option("--max-r", table.max_r)->check(at_least_one);
  table_cmd->add_option("--n", table.n)->required()->check(non_neg);
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"text", "csv", "json"}));

  std::vector<const char *> argv{"hypersum"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (*at_opt)
    detargs.at = det_at;

  const char *cache_dir = std::getenv("HYPERSUM_CACHE_DIR");
  if (cache_dir && *cache_dir)
    load_table_cache(cache_dir, err);

  int code = kExitOk;
  try {
    if (*eval_cmd)
      code = cmd_eval(eval, out);
    else if (*poly_cmd)
      code = cmd_poly(poly, out);
    else if (*det_cmd)
      code = cmd_det(detargs, out);
    else if (*verify_cmd)
      code = cmd_verify(verify, out);
    else if (*table_cmd)
      code = cmd_table(table, out);
  } catch (const UsageError &e) {
    err << "hypersum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MismatchError &e) {
    err << "hypersum: cross-check mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::domain_error &e) {
    err << "hypersum: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cache_dir && *cache_dir)
    store_table_cache(cache_dir, err);
  return code;
}

} // namespace hypersum::cli
