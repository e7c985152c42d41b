#ifndef HECKE_CLASS_NUMBER_HPP
#define HECKE_CLASS_NUMBER_HPP

#include "hecke/exact.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hecke {

// A reduced positive-definite binary quadratic form ax^2 + bxy + cy^2
// with b^2 - 4ac = -d:  |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
struct QuadForm {
    std::int64_t a, b, c;
    auto operator<=>(const QuadForm&) const = default;
};

// All reduced forms of discriminant -d, sorted lexicographically.
// Rejects d with d % 4 not in {0, 3}.
std::vector<QuadForm> reduced_forms(std::int64_t d);

// Hurwitz class number H(d): each class counts 1, except the class of
// a(x^2 + y^2) which counts 1/2 and the class of a(x^2 + xy + y^2)
// which counts 1/3.  Enumerates forms directly; independent of
// reduced_forms so the two can cross-check each other.
Rat hurwitz_class_number(std::int64_t d);

// Dense table of H(d) for 0 < d <= d_max, d = 0, 3 (mod 4), produced by
// one sweep over all reduced (a, b, c) with 4ac - b^2 <= d_max.
// 6*H(d) is always an integer, so the table stores that.
class HurwitzTable {
public:
    HurwitzTable() = default;
    explicit HurwitzTable(std::int64_t d_max);

    std::int64_t d_max() const { return d_max_; }
    bool contains(std::int64_t d) const { return d >= 1 && d <= d_max_; }

    // H(d) as a rational; rejects invalid residues and d out of range.
    Rat value(std::int64_t d) const;

    // 6*H(d) as a plain integer, 0 for residues 1, 2 (mod 4).
    // No range check; callers on the hot path index directly.
    std::int64_t six_h(std::int64_t d) const { return six_h_[d]; }

    std::map<std::int64_t, Rat> as_map() const;

    // Cache file: "# hurwitz v1 d_max=<N>" header, then "d,num,den" rows.
    void save(const std::string& path) const;
    static HurwitzTable load(const std::string& path);

private:
    std::int64_t d_max_ = 0;
    std::vector<std::int64_t> six_h_;
};

} // namespace hecke

#endif
