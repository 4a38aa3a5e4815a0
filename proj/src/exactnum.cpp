#include "hypersum/exactnum.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>

namespace hypersum {

Rational::Rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string &text) {
  auto parse_int = [&](const std::string &s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start)
      throw std::invalid_argument("Rational: malformed number '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational: malformed number '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer())
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.str(); }

Integer binomial(long n, long k) {
  if (n < 0)
    throw std::domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n)
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer rising_factorial(long r, long m) {
  if (r < 0 || m < 0)
    throw std::domain_error("rising_factorial: arguments must be non-negative");
  Integer out = 1;
  for (long i = 0; i < m; ++i)
    out *= r + i;
  return out;
}

Integer factorial(long n) {
  if (n < 0)
    throw std::domain_error("factorial: n must be non-negative");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers: sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1.

void BernoulliTable::grow_locked(long j) {
  for (long k = static_cast<long>(values_.size()); k <= j; ++k) {
    if (k >= 3 && k % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    Rational acc;
    for (long i = 0; i < k; ++i)
      if (!values_[i].is_zero())
        acc += Rational(binomial(k + 1, i)) * values_[i];
    values_.push_back(-acc / Rational(k + 1));
  }
}

Rational BernoulliTable::get(long j) {
  if (j < 0)
    throw std::domain_error("bernoulli: index must be non-negative");
  {
    std::shared_lock lock(mutex_);
    if (!overrides_.empty()) {
      auto it = overrides_.find(j);
      if (it != overrides_.end())
        return it->second;
    }
    if (j < static_cast<long>(values_.size()))
      return values_[j];
  }
  std::unique_lock lock(mutex_);
  grow_locked(j);
  return values_[j];
}

std::vector<Rational> BernoulliTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return values_;
}

bool BernoulliTable::seed(const std::vector<Rational> &values) {
  if (values.empty() || values[0] != Rational(1))
    return false;
  for (long k = 1; k < static_cast<long>(values.size()); ++k) {
    Rational acc;
    for (long i = 0; i <= k; ++i)
      acc += Rational(binomial(k + 1, i)) * values[i];
    if (!acc.is_zero())
      return false;
  }
  std::unique_lock lock(mutex_);
  if (values.size() > values_.size())
    values_ = values;
  return true;
}

void BernoulliTable::set_override(long j, std::optional<Rational> value) {
  std::unique_lock lock(mutex_);
  if (value)
    overrides_[j] = *value;
  else
    overrides_.erase(j);
  ++generation_;
}

std::uint64_t BernoulliTable::generation() const {
  std::shared_lock lock(mutex_);
  return generation_;
}

BernoulliTable &BernoulliTable::global() {
  static BernoulliTable table;
  return table;
}

Rational bernoulli(long j) { return BernoulliTable::global().get(j); }

Rational bernoulli_or_zero(long t) { return t < 0 ? Rational() : bernoulli(t); }

ScopedBernoulliOverride::ScopedBernoulliOverride(long j, Rational value) : index_(j) {
  BernoulliTable::global().set_override(j, std::move(value));
}

ScopedBernoulliOverride::~ScopedBernoulliOverride() {
  BernoulliTable::global().set_override(index_, std::nullopt);
}

// ---------------------------------------------------------------------------
// Stirling numbers of the first kind: [m+1, n] = m [m, n] + [m, n-1].

void StirlingTable::grow_locked(long m) {
  for (long k = static_cast<long>(rows_.size()); k <= m; ++k) {
    const auto &prev = rows_.back();
    std::vector<Integer> row(k + 1);
    for (long n = 1; n <= k; ++n) {
      Integer v = prev[n - 1];
      if (n < k)
        v += (k - 1) * prev[n];
      row[n] = v;
    }
    rows_.push_back(std::move(row));
  }
}

Integer StirlingTable::get(long m, long n) {
  if (m < 0 || n < 0)
    throw std::domain_error("stirling1_unsigned: arguments must be non-negative");
  if (n > m)
    return 0;
  {
    std::shared_lock lock(mutex_);
    if (m < static_cast<long>(rows_.size()))
      return rows_[m][n];
  }
  std::unique_lock lock(mutex_);
  grow_locked(m);
  return rows_[m][n];
}

std::vector<std::vector<Integer>> StirlingTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return rows_;
}

bool StirlingTable::seed(const std::vector<std::vector<Integer>> &rows) {
  if (rows.empty() || rows[0].size() != 1 || rows[0][0] != 1)
    return false;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].size() != k + 1 || rows[k][0] != 0)
      return false;
    for (std::size_t n = 1; n <= k; ++n) {
      Integer expect = rows[k - 1][n - 1];
      if (n < k)
        expect += static_cast<long>(k - 1) * rows[k - 1][n];
      if (rows[k][n] != expect)
        return false;
    }
  }
  std::unique_lock lock(mutex_);
  if (rows.size() > rows_.size())
    rows_ = rows;
  return true;
}

StirlingTable &StirlingTable::global() {
  static StirlingTable table;
  return table;
}

Integer stirling1_unsigned(long m, long n) { return StirlingTable::global().get(m, n); }

Integer r_stirling1(long m, long n, long r) {
  if (r < 0)
    throw std::domain_error("r_stirling1: r must be non-negative");
  if (m < r)
    throw std::domain_error("r_stirling1: requires m >= r");
  if (n < r || n > m)
    return 0;
  // Row [k, r..k]_r for k = r, r+1, ..., m.
  std::vector<Integer> row{Integer(1)};
  for (long k = r; k < m; ++k) {
    std::vector<Integer> next(row.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      Integer v = 0;
      if (i < row.size())
        v += k * row[i];
      if (i > 0)
        v += row[i - 1];
      next[i] = v;
    }
    row = std::move(next);
  }
  return row[n - r];
}

} // namespace hypersum
