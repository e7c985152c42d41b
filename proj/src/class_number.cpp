#include "hecke/class_number.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace hecke {

namespace {

void check_discriminant(std::int64_t d)
{
    if (d <= 0)
        throw domain_error("hurwitz: d must be positive");
    std::int64_t r = d % 4;
    if (r != 0 && r != 3)
        throw domain_error("hurwitz: d must be 0 or 3 (mod 4)");
}

// Weight denominator of a reduced form: 2 for a(x^2+y^2), 3 for
// a(x^2+xy+y^2), 1 otherwise.
int form_weight_den(std::int64_t a, std::int64_t b, std::int64_t c)
{
    if (b == 0 && a == c)
        return 2;
    if (a == b && b == c)
        return 3;
    return 1;
}

} // namespace

std::vector<QuadForm> reduced_forms(std::int64_t d)
{
    check_discriminant(d);
    std::vector<QuadForm> forms;
    // |b| <= a <= c and b^2 - 4ac = -d force 3a^2 <= d.
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = static_cast<std::int64_t>(b) * b + d;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a)
                continue;
            if (b < 0 && (-b == a || a == c))
                continue; // boundary classes take b >= 0
            forms.push_back({a, b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

Rat hurwitz_class_number(std::int64_t d)
{
    check_discriminant(d);
    // Accumulate 6*H(d) so the loop stays in integers.
    std::int64_t six = 0;
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = static_cast<std::int64_t>(b) * b + d;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a)
                continue;
            if (b < 0 && (-b == a || a == c))
                continue;
            six += 6 / form_weight_den(a, b, c);
        }
    }
    Rat h(six, 6);
    h.canonicalize();
    return h;
}

HurwitzTable::HurwitzTable(std::int64_t d_max)
{
    if (d_max < 3)
        throw domain_error("hurwitz_table: d_max must be >= 3");
    d_max_ = d_max;
    six_h_.assign(static_cast<std::size_t>(d_max) + 1, 0);

    // One sweep over reduced triples: every (a, b, c) with |b| <= a <= c,
    // the boundary rule, and 4ac - b^2 <= d_max contributes to exactly
    // one entry.
    for (std::int64_t a = 1; 3 * a * a <= d_max; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t bb = b * b;
            for (std::int64_t c = a; 4 * a * c - bb <= d_max; ++c) {
                std::int64_t d = 4 * a * c - bb;
                if (d <= 0)
                    continue;
                if (b < 0 && (-b == a || a == c))
                    continue;
                six_h_[d] += 6 / form_weight_den(a, b, c);
            }
        }
    }
}

Rat HurwitzTable::value(std::int64_t d) const
{
    check_discriminant(d);
    if (!contains(d))
        throw domain_error("hurwitz_table: d out of range");
    Rat h(six_h_[d], 6);
    h.canonicalize();
    return h;
}

std::map<std::int64_t, Rat> HurwitzTable::as_map() const
{
    std::map<std::int64_t, Rat> m;
    for (std::int64_t d = 3; d <= d_max_; ++d) {
        std::int64_t r = d % 4;
        if (r == 0 || r == 3) {
            Rat h(six_h_[d], 6);
            h.canonicalize();
            m.emplace(d, h);
        }
    }
    return m;
}

void HurwitzTable::save(const std::string& path) const
{
    // write-temp-then-rename so readers never see a partial table
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw cache_error("hurwitz cache: cannot open " + tmp);
        out << "# hurwitz v1 d_max=" << d_max_ << "\n";
        for (std::int64_t d = 3; d <= d_max_; ++d) {
            std::int64_t r = d % 4;
            if (r != 0 && r != 3)
                continue;
            Rat h(six_h_[d], 6);
            h.canonicalize();
            out << d << "," << h.get_num().get_str() << ","
                << h.get_den().get_str() << "\n";
        }
        if (!out)
            throw cache_error("hurwitz cache: write failed on " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw cache_error("hurwitz cache: rename failed for " + path);
}

HurwitzTable HurwitzTable::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw cache_error("hurwitz cache: cannot open " + path);
    std::string header;
    if (!std::getline(in, header))
        throw cache_error("hurwitz cache: empty file " + path);
    std::int64_t d_max = 0;
    if (std::sscanf(header.c_str(), "# hurwitz v1 d_max=%ld", &d_max) != 1)
        throw cache_error("hurwitz cache: bad header in " + path);
    if (d_max < 3)
        throw cache_error("hurwitz cache: bad d_max in " + path);

    HurwitzTable t;
    t.d_max_ = d_max;
    t.six_h_.assign(static_cast<std::size_t>(d_max) + 1, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::int64_t d = 0, num = 0, den = 0;
        if (std::sscanf(line.c_str(), "%ld,%ld,%ld", &d, &num, &den) != 3)
            throw cache_error("hurwitz cache: bad row '" + line + "'");
        if (d < 1 || d > d_max || den <= 0 || 6 % den != 0)
            throw cache_error("hurwitz cache: invalid row '" + line + "'");
        t.six_h_[d] = num * (6 / den);
    }
    return t;
}

} // namespace hecke
