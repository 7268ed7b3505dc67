#include "ktrans/serialize.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ktrans/errors.hpp"

namespace ktrans {

std::string_view sign_name(BranchSign s) { return s == BranchSign::Plus ? "+" : "-"; }

BranchSign parse_sign(std::string_view text) {
    if (text == "+") return BranchSign::Plus;
    if (text == "-") return BranchSign::Minus;
    throw AdmissibilityError("sign must be '+' or '-'");
}

json profile_to_json(const Profile& p) {
    json j;
    j["family"] = std::string(family_name(p.family()));
    j["alpha"] = p.alpha();
    j["m"] = p.m();
    j["sign"] = std::string(sign_name(p.sign()));
    j["r_ref"] = p.r_ref();
    json dom;
    dom["lo"] = p.domain().lo;
    if (p.domain().hi_unbounded())
        dom["hi"] = "inf";
    else
        dom["hi"] = p.domain().hi;
    j["domain"] = dom;
    return j;
}

Profile profile_from_json(const json& j) {
    const auto fam = parse_family(j.at("family").get<std::string>());
    if (!fam) throw IoError("unknown family tag in descriptor");
    const double alpha = j.at("alpha").get<double>();
    const double m = j.at("m").get<double>();
    const BranchSign sign = parse_sign(j.at("sign").get<std::string>());
    Profile p(*fam, alpha, m, sign);

    if (j.contains("r_ref") && j.at("r_ref").get<double>() != p.r_ref())
        throw IoError("descriptor r_ref does not match its reconstruction");
    if (j.contains("domain")) {
        const json& dom = j.at("domain");
        if (dom.at("lo").get<double>() != p.domain().lo)
            throw IoError("descriptor domain.lo does not match its reconstruction");
        const bool inf_stored = dom.at("hi").is_string();
        if (inf_stored != p.domain().hi_unbounded() ||
            (!inf_stored && dom.at("hi").get<double>() != p.domain().hi))
            throw IoError("descriptor domain.hi does not match its reconstruction");
        if (inf_stored && dom.at("hi").get<std::string>() != "inf")
            throw IoError("descriptor domain.hi must be a number or \"inf\"");
    }
    return p;
}

json report_to_json(const ResidualReport& rep) {
    json j;
    json prof;
    prof["family"] = std::string(family_name(rep.family));
    prof["alpha"] = rep.alpha;
    prof["m"] = rep.m;
    prof["sign"] = std::string(sign_name(rep.sign));
    j["profile"] = prof;
    json grid;
    grid["n_r"] = rep.n_r;
    grid["n_theta"] = rep.n_theta;
    grid["inset"] = rep.inset;
    grid["r_window"] = json::array({rep.r_lo, rep.r_hi});
    grid["theta_window"] = json::array({rep.theta_lo, rep.theta_hi});
    grid["fd_step"] = rep.fd_step == 0.0 ? json("default") : json(rep.fd_step);
    j["grid"] = grid;
    j["sup_residual_analytic"] = rep.sup_analytic;
    j["mean_residual_analytic"] = rep.mean_analytic;
    j["sup_residual_fd"] = rep.sup_fd;
    j["mean_residual_fd"] = rep.mean_fd;
    json worst;
    worst["r"] = rep.worst_r;
    worst["theta"] = rep.worst_theta;
    j["worst_point"] = worst;
    return j;
}

json glued_to_json(const GluedCurve& curve, const std::vector<GlueDiagnostic>& diagnostics) {
    json j;
    j["left"] = profile_to_json(curve.left());
    j["right"] = profile_to_json(curve.right());
    j["r_junction"] = curve.r_junction();
    json dom;
    dom["lo"] = curve.domain().lo;
    if (curve.domain().hi_unbounded())
        dom["hi"] = "inf";
    else
        dom["hi"] = curve.domain().hi;
    j["domain"] = dom;
    json diag = json::array();
    for (const auto& d : diagnostics) {
        json row;
        row["delta"] = d.delta;
        row["f_gap"] = d.f_gap;
        row["fprime_gap"] = d.fprime_gap;
        row["fprime_sq_gap"] = d.fprime_sq_gap;
        diag.push_back(row);
    }
    j["diagnostics"] = diag;
    return j;
}

} // namespace ktrans
