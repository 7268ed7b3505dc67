#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"

#include "ktrans/glue.hpp"
#include "ktrans/profile.hpp"
#include "ktrans/validate.hpp"

namespace ktrans {

using json = nlohmann::ordered_json;

std::string_view sign_name(BranchSign s);
BranchSign parse_sign(std::string_view text);

/// Descriptor with stable key order: family, alpha, m, sign, r_ref, domain.
/// The domain's hi is the string "inf" when unbounded.
json profile_to_json(const Profile& p);

/// Reconstructs the profile from (family, alpha, m, sign) and verifies the
/// descriptor's derived fields bit-exactly when present.
Profile profile_from_json(const json& j);

json report_to_json(const ResidualReport& rep);

json glued_to_json(const GluedCurve& curve, const std::vector<GlueDiagnostic>& diagnostics);

} // namespace ktrans
