#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "ktrans/minkowski.hpp"

namespace ktrans {

// The seven rotational families, keyed by axis causal type, surface causal
// type and chart variant. Short tags match the CLI surface.
enum class Family {
    TA_S,  // timelike axis, spacelike surface, polar chart, f'^2 < 1
    TA_T,  // timelike axis, timelike surface, polar chart, f'^2 > 1
    SA_S,  // spacelike axis, spacelike surface, xz-curve chart, f'^2 > 1
    SA_T1, // spacelike axis, timelike surface, xz-curve chart, f'^2 < 1
    SA_T2, // spacelike axis, timelike surface, xy-curve chart, any f'
    LA_S,  // lightlike axis, spacelike surface, f' > 0
    LA_T,  // lightlike axis, timelike surface, f' < 0
};

// Chart map used by a family.
enum class Chart {
    PolarZ,       // (r cos t, r sin t, f)
    HyperbolicXZ, // (f, r sinh t, r cosh t)
    HyperbolicXY, // (f, r cosh t, r sinh t)
    LightCone,    // (2rt, f + r - rt^2, f - r - rt^2)
};

constexpr std::array<Family, 7> kAllFamilies = {
    Family::TA_S, Family::TA_T, Family::SA_S, Family::SA_T1,
    Family::SA_T2, Family::LA_S, Family::LA_T,
};

std::string_view family_name(Family f);
std::string_view family_description(Family f);
std::optional<Family> parse_family(std::string_view name);

Chart family_chart(Family f);
CausalClass surface_class(Family f);
CausalClass axis_class(Family f);

/// Ambient translation direction of the family, chosen so <N, v> > 0 on the
/// family's domains.
MinkVec3 speed_vector(Family f);

/// True when fprime satisfies the family's (strict) causal condition.
bool causal_condition_holds(Family f, double fprime);

/// Human-readable causal condition, e.g. "f'^2 < 1".
std::string_view causal_condition_text(Family f);

} // namespace ktrans
