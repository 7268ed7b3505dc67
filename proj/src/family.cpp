#include "ktrans/family.hpp"

namespace ktrans {

std::string_view family_name(Family f) {
    switch (f) {
    case Family::TA_S: return "TA-S";
    case Family::TA_T: return "TA-T";
    case Family::SA_S: return "SA-S";
    case Family::SA_T1: return "SA-T1";
    case Family::SA_T2: return "SA-T2";
    case Family::LA_S: return "LA-S";
    case Family::LA_T: return "LA-T";
    }
    return "?";
}

std::string_view family_description(Family f) {
    switch (f) {
    case Family::TA_S: return "timelike axis, spacelike surface";
    case Family::TA_T: return "timelike axis, timelike surface";
    case Family::SA_S: return "spacelike axis, spacelike surface";
    case Family::SA_T1: return "spacelike axis, timelike surface (xz generating curve)";
    case Family::SA_T2: return "spacelike axis, timelike surface (xy generating curve)";
    case Family::LA_S: return "lightlike axis, spacelike surface";
    case Family::LA_T: return "lightlike axis, timelike surface";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

Chart family_chart(Family f) {
    switch (f) {
    case Family::TA_S:
    case Family::TA_T: return Chart::PolarZ;
    case Family::SA_S:
    case Family::SA_T1: return Chart::HyperbolicXZ;
    case Family::SA_T2: return Chart::HyperbolicXY;
    case Family::LA_S:
    case Family::LA_T: return Chart::LightCone;
    }
    return Chart::PolarZ;
}

CausalClass surface_class(Family f) {
    switch (f) {
    case Family::TA_S:
    case Family::SA_S:
    case Family::LA_S: return CausalClass::Spacelike;
    default: return CausalClass::Timelike;
    }
}

CausalClass axis_class(Family f) {
    switch (f) {
    case Family::TA_S:
    case Family::TA_T: return CausalClass::Timelike;
    case Family::SA_S:
    case Family::SA_T1:
    case Family::SA_T2: return CausalClass::Spacelike;
    default: return CausalClass::Lightlike;
    }
}

MinkVec3 speed_vector(Family f) {
    switch (f) {
    case Family::TA_S:
    case Family::TA_T: return {0.0, 0.0, 1.0};
    case Family::SA_S:
    case Family::SA_T1: return {-1.0, 0.0, 0.0};
    case Family::SA_T2: return {1.0, 0.0, 0.0};
    default: return {0.0, -1.0, -1.0};
    }
}

bool causal_condition_holds(Family f, double fprime) {
    const double s = fprime * fprime;
    switch (f) {
    case Family::TA_S:
    case Family::SA_T1: return s < 1.0;
    case Family::TA_T:
    case Family::SA_S: return s > 1.0;
    case Family::SA_T2: return true;
    case Family::LA_S: return fprime > 0.0;
    case Family::LA_T: return fprime < 0.0;
    }
    return false;
}

std::string_view causal_condition_text(Family f) {
    switch (f) {
    case Family::TA_S:
    case Family::SA_T1: return "f'^2 < 1";
    case Family::TA_T:
    case Family::SA_S: return "f'^2 > 1";
    case Family::SA_T2: return "any f'";
    case Family::LA_S: return "f' > 0";
    case Family::LA_T: return "f' < 0";
    }
    return "?";
}

} // namespace ktrans
