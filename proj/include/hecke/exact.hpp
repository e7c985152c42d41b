#ifndef HECKE_EXACT_HPP
#define HECKE_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

// Arbitrary-precision integers and canonical fractions. mpq_class keeps
// fractions in lowest terms with positive denominator, which is exactly
// the invariant we need everywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Monic polynomial with integer coefficients, ascending degree
// (coeffs[deg] == 1).
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a computation cannot certify its own result (e.g. root
// isolation fails to separate dim-many real roots).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct cache_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(unsigned long base, unsigned long e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Int binomial(unsigned long n, long k)
{
    if (k < 0 || static_cast<unsigned long>(k) > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

// Integer square root, plus exact-square detection.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

// (eta^len - conj(eta)^len) / (eta - conj(eta)) for
// eta = (m + i*sqrt(4n - m^2))/2, i.e. the Lucas-type sequence
//   G_1 = 1, G_2 = m, G_{j+1} = m*G_j - n*G_{j-1}.
// Requires m^2 < 4n so that eta is genuinely complex.
Int lucas_term(const Int& m, const Int& n, unsigned long len);

// Newton's identities: turn power sums p_1..p_degree into the monic
// characteristic polynomial x^d - e1 x^{d-1} + e2 x^{d-2} - ...
// Returned ascending degree, coeffs[degree] == 1.
RatPoly newton_power_to_charpoly(const std::vector<Rat>& power_sums,
                                 std::size_t degree);

// Inverse direction: power sums p_1..p_count of the root multiset of a
// monic polynomial (ascending coefficients). Works for count > degree
// via the linear recurrence the polynomial defines.
std::vector<Rat> charpoly_to_power_sums(const RatPoly& monic,
                                        std::size_t count);
std::vector<Int> charpoly_to_power_sums(const IntPoly& monic,
                                        std::size_t count);

// Horner evaluation.
Int eval_poly(const IntPoly& poly, const Int& x);
Rat eval_poly(const RatPoly& poly, const Rat& x);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

} // namespace hecke

#endif
