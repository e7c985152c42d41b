#include "hecke/exact.hpp"

namespace hecke {

Int isqrt(const Int& n)
{
    if (n < 0)
        throw domain_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int lucas_term(const Int& m, const Int& n, unsigned long len)
{
    if (len == 0)
        throw domain_error("lucas_term: len must be >= 1");
    if (m * m >= 4 * n)
        throw domain_error("lucas_term: m^2 >= 4n (eta not complex)");
    if (len == 1)
        return 1;

    // G_1 = 1, G_2 = m, G_{j+1} = m G_j - n G_{j-1}
    Int prev = 1;
    Int cur = m;
    Int next;
    for (unsigned long j = 2; j < len; ++j) {
        next = m * cur - n * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

RatPoly newton_power_to_charpoly(const std::vector<Rat>& power_sums,
                                 std::size_t degree)
{
    if (power_sums.size() < degree)
        throw domain_error("newton_power_to_charpoly: need >= degree power sums");

    // i*e_i = sum_{j=1..i} (-1)^{j-1} e_{i-j} p_j
    std::vector<Rat> e(degree + 1);
    e[0] = 1;
    for (std::size_t i = 1; i <= degree; ++i) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            Rat term = e[i - j] * power_sums[j - 1];
            if (j % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        e[i] = acc / Rat(static_cast<unsigned long>(i));
    }

    // coefficient of x^{d-i} is (-1)^i e_i
    RatPoly coeffs(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) {
        coeffs[degree - i] = (i % 2 == 0) ? e[i] : -e[i];
    }
    return coeffs;
}

namespace {

template <typename T>
std::vector<T> power_sums_impl(const std::vector<T>& monic, std::size_t count)
{
    if (monic.empty() || monic.back() != 1)
        throw domain_error("charpoly_to_power_sums: polynomial must be monic");
    std::size_t d = monic.size() - 1;

    // e_i with Newton sign convention: coeff of x^{d-i} = (-1)^i e_i
    std::vector<T> e(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        e[i] = (i % 2 == 0) ? monic[d - i] : T(-monic[d - i]);

    std::vector<T> p(count + 1);
    p[0] = static_cast<long>(d);
    for (std::size_t i = 1; i <= count; ++i) {
        // p_i = e_1 p_{i-1} - e_2 p_{i-2} + ... + (-1)^{i-2} e_{i-1} p_1
        //       + (-1)^{i-1} i e_i                      (i <= d)
        // p_i = e_1 p_{i-1} - ... + (-1)^{d-1} e_d p_{i-d}   (i > d)
        T acc = 0;
        std::size_t top = std::min(i, d);
        for (std::size_t j = 1; j <= top; ++j) {
            T factor = (j == i) ? T(static_cast<long>(i)) : p[i - j];
            T term = e[j] * factor;
            if (j % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        p[i] = acc;
    }
    return std::vector<T>(p.begin() + 1, p.end());
}

} // namespace

std::vector<Rat> charpoly_to_power_sums(const RatPoly& monic, std::size_t count)
{
    return power_sums_impl<Rat>(monic, count);
}

std::vector<Int> charpoly_to_power_sums(const IntPoly& monic, std::size_t count)
{
    return power_sums_impl<Int>(monic, count);
}

Int eval_poly(const IntPoly& poly, const Int& x)
{
    Int acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rat eval_poly(const RatPoly& poly, const Rat& x)
{
    Rat acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string to_string(const Int& v)
{
    return v.get_str();
}

std::string to_string(const Rat& v)
{
    return v.get_str();
}

} // namespace hecke
