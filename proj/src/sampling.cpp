#include "ktrans/sampling.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ktrans/errors.hpp"
#include "ktrans/format.hpp"
#include "ktrans/surface.hpp"

namespace ktrans {

namespace {

std::pair<double, double> resolve_r_window(const Profile& p,
                                           const std::optional<std::pair<double, double>>& window,
                                           double inset, double infinite_truncation) {
    const Interval& dom = p.domain();
    if (window) {
        const auto [a, b] = *window;
        if (!(a < b) || !dom.contains(a) || !dom.contains(b)) {
            std::ostringstream msg;
            msg << "sampling window [" << a << ", " << b
                << "] must lie strictly inside the maximal domain (" << dom.lo << ", " << dom.hi
                << ")";
            throw DomainError(msg.str());
        }
        return *window;
    }
    if (!(inset > 0.0) || !(inset < 0.5))
        throw DomainError("sampling inset must lie in (0, 0.5)");
    const double hi_eff = dom.hi_unbounded() ? dom.lo + infinite_truncation : dom.hi;
    const double width = hi_eff - dom.lo;
    return {dom.lo + inset * width, hi_eff - inset * width};
}

} // namespace

SampledCurve sample_curve(const Profile& p, const SampleSpec& spec) {
    if (spec.n < 2) throw AdmissibilityError("sampling requires n >= 2");
    const auto [a, b] = resolve_r_window(p, spec.window, spec.inset, spec.infinite_truncation);

    SampledCurve out;
    out.family = p.family();
    out.alpha = p.alpha();
    out.m = p.m();
    out.sign = p.sign();
    CurveTable& t = out.table;
    t.r.reserve(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        const double r = a + (b - a) * i / (spec.n - 1);
        const double fp = p.fprime(r);
        const double fpp = p.fsecond(r);
        t.r.push_back(r);
        t.f.push_back(p.f(r, spec.quad));
        t.fprime.push_back(fp);
        t.fsecond.push_back(fpp);
        t.K.push_back(gauss_curvature_analytic(p.family(), r, fp, fpp));
        ResidualOptions ro;
        ro.fd_step = spec.fd_step;
        t.residual.push_back(residual_at(p, r, 0.0, spec.residual_source, ro));
    }
    return out;
}

void write_curve_csv(std::ostream& out, const CurveTable& t) {
    out << "r,f,fprime,fsecond,K,residual\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << format_shortest(t.r[i]) << ',' << format_shortest(t.f[i]) << ','
            << format_shortest(t.fprime[i]) << ',' << format_shortest(t.fsecond[i]) << ','
            << format_shortest(t.K[i]) << ',' << format_shortest(t.residual[i]) << '\n';
    }
}

CurveTable read_curve_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "r,f,fprime,fsecond,K,residual")
        throw IoError("curve CSV must start with header r,f,fprime,fsecond,K,residual");
    CurveTable t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<double, 6> vals{};
        std::size_t pos = 0;
        for (int k = 0; k < 6; ++k) {
            const std::size_t next = line.find(',', pos);
            const bool last = k == 5;
            if (last != (next == std::string::npos))
                throw IoError("curve CSV row must have exactly 6 fields: " + line);
            vals[k] = parse_double(
                std::string_view(line).substr(pos, last ? std::string::npos : next - pos));
            pos = next + 1;
        }
        t.r.push_back(vals[0]);
        t.f.push_back(vals[1]);
        t.fprime.push_back(vals[2]);
        t.fsecond.push_back(vals[3]);
        t.K.push_back(vals[4]);
        t.residual.push_back(vals[5]);
    }
    return t;
}

SurfaceMesh build_mesh(const Profile& p, const MeshSpec& spec) {
    if (spec.n_r < 2 || spec.n_theta < 2)
        throw AdmissibilityError("mesh requires n_r >= 2 and n_theta >= 2");
    const auto [a, b] = resolve_r_window(p, spec.r_window, spec.inset, spec.infinite_truncation);
    const auto [t0, t1] = spec.theta_window.value_or(default_theta_window(p.family()));
    if (!(t1 > t0)) throw DomainError("theta window must have positive width");

    SurfaceMesh mesh;
    mesh.n_r = spec.n_r;
    mesh.n_theta = spec.n_theta;
    mesh.vertices.reserve(static_cast<std::size_t>(spec.n_r) * spec.n_theta);
    for (int i = 0; i < spec.n_r; ++i) {
        const double r = a + (b - a) * i / (spec.n_r - 1);
        const double fv = p.f(r, spec.quad);
        const double fp = p.fprime(r);
        const double fpp = p.fsecond(r);
        const double K = gauss_curvature_analytic(p.family(), r, fp, fpp);
        const double res = residual_from_values(p.family(), p.alpha(), r, 0.0, fp, fpp);
        for (int j = 0; j < spec.n_theta; ++j) {
            const double theta = t0 + (t1 - t0) * j / (spec.n_theta - 1);
            mesh.vertices.push_back(parametrize(p.family(), fv, r, theta));
            mesh.r.push_back(r);
            mesh.theta.push_back(theta);
            mesh.K.push_back(K);
            mesh.residual.push_back(res);
        }
    }
    for (int i = 0; i + 1 < spec.n_r; ++i)
        for (int j = 0; j + 1 < spec.n_theta; ++j) {
            const int base = i * spec.n_theta + j;
            mesh.quads.push_back(
                {base, base + spec.n_theta, base + spec.n_theta + 1, base + 1});
        }
    return mesh;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
    for (const MinkVec3& v : mesh.vertices)
        out << "v " << format_digits(v.x, 17) << ' ' << format_digits(v.y, 17) << ' '
            << format_digits(v.z, 17) << '\n';
    for (const auto& q : mesh.quads)
        out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
}

void write_mesh_attribute_csv(std::ostream& out, const SurfaceMesh& mesh) {
    out << "index,r,theta,K,residual\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        out << i + 1 << ',' << format_shortest(mesh.r[i]) << ',' << format_shortest(mesh.theta[i])
            << ',' << format_shortest(mesh.K[i]) << ',' << format_shortest(mesh.residual[i])
            << '\n';
    }
}

std::vector<GluedSampleRow> sample_glued(const GluedCurve& curve, int n_per_side, double inset,
                                         double infinite_truncation,
                                         const QuadratureOptions& opts) {
    if (n_per_side < 1) throw AdmissibilityError("glued sampling requires n >= 1 per side");
    if (!(inset > 0.0) || !(inset < 0.5)) throw DomainError("glued sampling inset must lie in (0, 0.5)");
    const double rj = curve.r_junction();
    const Interval dom = curve.domain();
    const double a = dom.lo + inset * (rj - dom.lo);
    const double b_eff =
        dom.hi_unbounded() ? rj + infinite_truncation : dom.hi - inset * (dom.hi - rj);

    std::vector<GluedSampleRow> rows;
    rows.reserve(2 * n_per_side + 1);
    for (int i = 0; i < n_per_side; ++i) {
        const double r = a + (rj - a) * i / n_per_side; // excludes the junction
        rows.push_back({r, curve.f(r, opts), curve.fprime(r), -1});
    }
    // Junction row carries the one-sided limits: f' tends to the branch unit
    // for the polar/hyperbolic pairs and to 0 for the lightlike pair.
    const bool lightlike = curve.left().family() == Family::LA_T;
    const double fp_limit =
        lightlike ? 0.0 : (curve.left().sign() == BranchSign::Plus ? 1.0 : -1.0);
    rows.push_back({rj, 0.0, fp_limit, 0});
    for (int i = 1; i <= n_per_side; ++i) {
        const double r = rj + (b_eff - rj) * i / n_per_side;
        rows.push_back({r, curve.f(r, opts), curve.fprime(r), +1});
    }
    return rows;
}

void write_glued_csv(std::ostream& out, const std::vector<GluedSampleRow>& rows) {
    out << "r,f,fprime,side\n";
    for (const auto& row : rows) {
        const char* side = row.side < 0 ? "left" : (row.side > 0 ? "right" : "junction");
        out << format_shortest(row.r) << ',' << format_shortest(row.f) << ','
            << format_shortest(row.fprime) << ',' << side << '\n';
    }
}

} // namespace ktrans
