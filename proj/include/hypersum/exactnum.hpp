// Exact integers, rationals and the combinatorial number tables used by the
// hyper-sum formulas.
//
// Bernoulli convention: B_1 = -1/2. The Bernoulli-formula expansion of power
// sums used throughout this library is written for that convention; switching
// to B_1 = +1/2 silently produces wrong polynomials.

#ifndef HYPERSUM_EXACTNUM_HPP
#define HYPERSUM_EXACTNUM_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace hypersum {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
  Rational(const Integer &v) : q_(v) {} // NOLINT(google-explicit-constructor)
  Rational(const Integer &num, const Integer &den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p", "-p" or "p/q" in base 10. Throws std::invalid_argument.
  static Rational parse(const std::string &text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  const mpq_class &raw() const { return q_; }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

/// r (r+1) ... (r+m-1); the empty product (m = 0) is 1.
Integer rising_factorial(long r, long m);

Integer factorial(long n);

/// B_j with B_1 = -1/2, memoized.
Rational bernoulli(long j);

/// bernoulli(t) for t >= 0 and 0 for negative t.
Rational bernoulli_or_zero(long t);

/// Unsigned Stirling number of the first kind [m, n]; 0 when n > m.
Integer stirling1_unsigned(long m, long n);

/// r-Stirling number of the first kind [m, n]_r. Requires m >= r
/// (std::domain_error otherwise); 0 for n outside [r, m].
Integer r_stirling1(long m, long n, long r);

/// Memoized B_0, B_1, ... grown on demand. Lookups take a shared lock,
/// growth an exclusive one.
class BernoulliTable {
public:
  Rational get(long j);
  std::vector<Rational> snapshot() const;
  /// Replaces the cached prefix with `values` after checking them against the
  /// defining recurrence. Returns false (and leaves the table untouched) if
  /// they do not satisfy it.
  bool seed(const std::vector<Rational> &values);

  /// Test hook: get(j) returns `value` until cleared. Used to verify that
  /// cross-checks locate a corrupted constant.
  void set_override(long j, std::optional<Rational> value);

  /// Bumped whenever an override changes, so derived caches can tell that
  /// values they computed earlier are stale.
  std::uint64_t generation() const;

  static BernoulliTable &global();

private:
  void grow_locked(long j);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
  std::map<long, Rational> overrides_;
  std::uint64_t generation_ = 0;
};

/// Unsigned first-kind Stirling rows [m, 0..m], memoized.
class StirlingTable {
public:
  Integer get(long m, long n);
  std::vector<std::vector<Integer>> snapshot() const;
  bool seed(const std::vector<std::vector<Integer>> &rows);
  static StirlingTable &global();

private:
  void grow_locked(long m);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

/// RAII guard around BernoulliTable::set_override on the global table.
class ScopedBernoulliOverride {
public:
  ScopedBernoulliOverride(long j, Rational value);
  ~ScopedBernoulliOverride();
  ScopedBernoulliOverride(const ScopedBernoulliOverride &) = delete;
  ScopedBernoulliOverride &operator=(const ScopedBernoulliOverride &) = delete;

private:
  long index_;
};

} // namespace hypersum

#endif
