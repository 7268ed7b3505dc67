#pragma once

// Shared parameter catalogs for the test suites: the canonical
// (alpha, m) sweep touches every parameter case of every family.

#include <vector>

#include "ktrans/profile.hpp"

namespace ktest {

using ktrans::Family;

inline const std::vector<double>& alpha_sweep() {
    static const std::vector<double> sweep = {-1.0, 1.0 / 6.0, 0.25, 0.5, 1.0, 2.0};
    return sweep;
}

// Three admissible m values for the family at this alpha, spread over the
// distinct subcases of the domain tables.
inline std::vector<double> admissible_m(Family fam, double alpha) {
    const bool half = alpha == 0.5;
    const bool inner = alpha > 0.0 && alpha < 0.5;
    switch (fam) {
    case Family::TA_S:
    case Family::SA_T1:
        if (half) return {1.5, 2.0, 3.0};
        if (inner) return {-1.0, 0.0, 0.5};
        return {1.5, 2.0, 4.0};
    case Family::SA_S:
    case Family::TA_T:
        if (half) return {0.5, 1.0, 2.0};
        if (inner) return {0.5, 1.0, 2.0};
        return {-1.0, 0.0, 1.0};
    case Family::SA_T2:
        if (half) return {0.5, 1.0, 2.0};
        if (inner) return {0.0, 1.0, 2.0};
        return {0.5, 1.0, 2.0};
    case Family::LA_S:
        if (half) return {0.5, 1.0, 2.0};
        if (inner) return {-1.0, 0.0, 1.0};
        return {1.0, 2.0, 4.0};
    case Family::LA_T:
        if (half) return {0.5, 1.0, 2.0};
        if (inner) return {0.5, 1.0, 2.0};
        return {-1.0, 0.0, 1.0};
    }
    return {};
}

struct ParamCase {
    double alpha;
    double m;
};

inline std::vector<ParamCase> canonical_cases(Family fam) {
    std::vector<ParamCase> out;
    for (double a : alpha_sweep())
        for (double m : admissible_m(fam, a)) out.push_back({a, m});
    return out;
}

// Interior radii of a profile: n points strictly inside, clear of both ends.
inline std::vector<double> interior_radii(const ktrans::Profile& p, int n,
                                          double inset = 0.1, double truncation = 2.0) {
    const auto& dom = p.domain();
    const double hi_eff = dom.hi_unbounded() ? dom.lo + truncation : dom.hi;
    const double w = hi_eff - dom.lo;
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(dom.lo + w * (inset + (1.0 - 2.0 * inset) * i / (n - 1)));
    return out;
}

} // namespace ktest
