// Hyper-sums of powers of integers.
//
//   S_m^(0)(n) = n^m,   S_m^(r)(n) = sum_{i=1}^{n} S_m^(r-1)(i)   (r >= 1)
//
// For r >= 1, S_m^(r) is a polynomial in n of degree m + r without constant
// term. This header exposes several independent routes to that polynomial,
// the factorization S_m^(r) = S_1^(r) G_m^(r)(N_r) with N_r = n + r/2, and
// the identities relating neighbouring (m, r) cells.
//
// Conventions:
//  * 0^0 = 1, so S_0^(0)(0) = 1 and S_0^(0)(n) = 1.
//  * Every route returns its polynomial in the n frame; N and u frames are
//    produced by explicit conversion.

#ifndef HYPERSUM_HYPERSUM_HPP
#define HYPERSUM_HYPERSUM_HPP

#include "hypersum/exactnum.hpp"
#include "hypersum/polyring.hpp"

#include <span>
#include <string>
#include <vector>

namespace hypersum {

enum class Method {
  bruteforce_fit,   ///< interpolation through brute-force values
  q_form,           ///< Stirling-weighted combination of power sums
  c_form,           ///< explicit double-sum coefficients
  coeff_recurrence, ///< coefficient recurrence in r, seeded by power sums
  lemma_chain,      ///< recurrence in m, seeded by S_1^(r)
  determinant,      ///< S_1^(r) times the Hessenberg determinant
};

std::string to_string(Method m);
Method method_from_string(const std::string &s);
/// All routes, in a fixed order.
std::span<const Method> all_methods();

struct HyperSumPoly {
  long m = 0;
  long r = 0;
  RatPoly poly;
  Method method = Method::determinant;
};

/// G_m^(r) in N_r. g_coeffs[j] is the coefficient of N^(2j) for odd m and of
/// N^(2j+1) for even m, j = 0 .. ceil(m/2) - 1.
struct FaulhaberPoly {
  long m = 1;
  long r = 0;
  RatPoly poly;
  std::vector<Rational> g_coeffs;
};

/// S_m(n) in N = n + 1/2. f_coeffs[j] is the coefficient of N^(2j) for odd m
/// and of N^(2j+1) for even m.
struct FaulhaberR1Poly {
  long m = 1;
  RatPoly poly;
  std::vector<Rational> f_coeffs;
};

// --- scalar routes ---------------------------------------------------------

/// Iterated prefix sums; the reference oracle.
Integer hyper_sum_bruteforce(long m, long r, long n);

/// C(n + r, r + 1).
Rational s1_closed(long r, long n);
/// (2n + r)/(r + 2) * S_1^(r)(n).
Rational s2_closed(long r, long n);

// --- polynomial routes -----------------------------------------------------

/// S_1^(r)(n) = n (n+1) ... (n+r) / (r+1)! as a polynomial in n.
RatPoly s1_poly(long r);

/// Ordinary power sum S_m(n) by the Bernoulli formula.
RatPoly power_sum_poly(long m);

/// q_{r,i}(n) = sum_{j=0}^{r-i} C(i+j, i) [r+1, i+j+1] n^j; requires 0 <= i <= r.
RatPoly q_poly(long r, long i);

/// S_m^(r) = 1/(r-1)! sum_{i=0}^{r-1} (-1)^i q_{r-1,i}(n) S_{m+i}(n).
/// Note the shifted index: q_{r-1,i} produces the r-fold sum. Requires r >= 1.
HyperSumPoly hyper_sum_poly_q(long m, long r);

/// Coefficient of n^k in S_m^(r); requires r >= 1 and 1 <= k <= m + r.
Rational coeff_c(long m, long r, long k);
HyperSumPoly hyper_sum_poly_c(long m, long r);

/// Given the coefficients (n^1 .. n^(m+r)) of S_m^(r) and (n^1 .. n^(m+r+1))
/// of S_{m+1}^(r), returns the m+r+1 coefficients of S_m^(r+1):
///   c_{m,r+1}^k = c_{m,r}^k + (c_{m,r}^{k-1} - c_{m+1,r}^k) / r.
std::vector<Rational> coeff_recurrence_step(std::span<const Rational> c_m_r,
                                            std::span<const Rational> c_m1_r, long r);
/// Chains coeff_recurrence_step from the r = 1 power sums. Requires r >= 1.
HyperSumPoly hyper_sum_poly_chain(long m, long r);

/// S_1^(r) .. S_{m_max}^(r) by
///   (m+r) S_m = m N_r S_{m-1} - r sum_{k=1}^{m-2} C(m,k) B_{m-k} S_k.
std::vector<HyperSumPoly> lemma_recurrence_family(long m_max, long r);

/// S_1^(r)(n) (-1)^(m-1) / (r+2)^rising(m-1) det H_m^(r)(N_r), expanded in n.
HyperSumPoly hyper_sum_det(long m, long r);

/// Interpolates hyper_sum_bruteforce at n = 0 .. m + r.
HyperSumPoly hyper_sum_fit(long m, long r);

/// Dispatches to the named route. For r = 0 the q/c/recurrence routes are
/// undefined; they fall back to n^m.
HyperSumPoly hyper_sum_poly(Method method, long m, long r);

/// Polynomial S_m^(r) through the determinant route (memoized).
RatPoly hyper_sum(long m, long r);

// --- Faulhaber forms -------------------------------------------------------

/// G_m^(r) from the Hessenberg determinant; G_1 = 1. Requires m >= 1.
FaulhaberPoly faulhaber_det(long m, long r);

/// G_m^(r) from the parity-split coefficient recurrences, seeded with
/// G_1 = 1 and G_2 = 2N/(r+2). Chains are memoized per r.
FaulhaberPoly faulhaber_rec(long m, long r);

/// Fills FaulhaberPoly::g_coeffs from a polynomial in N.
FaulhaberPoly make_faulhaber(long m, RatPoly g_in_N);

enum class Prefactor { s1, s2 };
std::string to_string(Prefactor p);

/// S_m^(r) = S_1^(r) F(u) for odd m and S_2^(r) F(u) for even m,
/// with u = n(n + r) and deg F = ceil(m/2) - 1.
struct Theorem1Form {
  long m = 1;
  long r = 1;
  Prefactor prefactor = Prefactor::s1;
  RatPoly f_in_u;
};
/// Requires r >= 1. Throws std::logic_error if G_m is not divisible by G_2
/// for even m.
Theorem1Form theorem1_forms(long m, long r);

/// S_m(n) = (-1)^(m+1)/(m+1)! (N^2 - 1/4) det(order m-1 matrix), N = n + 1/2.
FaulhaberR1Poly faulhaber_r1(long m);

// --- identities ------------------------------------------------------------

enum class CoffeyParity { odd, even };

/// LHS - RHS of
///   odd:  S_{2m-1}^(r+1) = 1/2 S_{2m-1}^(r) + 1/(2m) sum_{k=1}^{m} C(2m,2k) B_{2m-2k} S_{2k}^(r)
///   even: S_{2m}^(r+1)   = 1/2 S_{2m}^(r) + 1/(2m+1) sum_{k=1}^{m+1} C(2m+1,2k-1) B_{2m+2-2k} S_{2k-1}^(r)
/// as a polynomial in n; zero when the identity holds. Requires m >= 1.
RatPoly coffey_residual(long m, long r, CoffeyParity parity);

/// left = sum_{j=1}^{r} [r, j] S_j(n) (equal to r! S_1^(r)), right = G_m^(r)
/// in N_r, so that left * right = r! S_m^(r)(n). Requires r >= 1.
struct StirlingProductForm {
  RatPoly left;
  RatPoly right;
};
StirlingProductForm stirling_product_form(long m, long r);

} // namespace hypersum

#endif
