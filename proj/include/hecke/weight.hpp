#ifndef HECKE_WEIGHT_HPP
#define HECKE_WEIGHT_HPP

#include "hecke/exact.hpp"

namespace hecke {

// Weight of a level-1 cusp form space: even, >= 4.
struct Weight {
    long k;

    explicit Weight(long k_) : k(k_)
    {
        if (k < 4 || k % 2 != 0)
            throw domain_error("weight must be even and >= 4");
    }
};

// dim S_k(Gamma(1)) by the classical formula; used by the q-expansion
// oracle and as a cross-check against trace_hecke(k, 1).
inline long dim_cusp_forms_formula(Weight k)
{
    long d = k.k / 12;
    if (k.k % 12 == 2)
        d -= 1;
    return d;
}

} // namespace hecke

#endif
