#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ktrans/glue.hpp"
#include "ktrans/profile.hpp"
#include "ktrans/validate.hpp"

namespace ktrans {

// Column store of a sampled generating curve.
struct CurveTable {
    std::vector<double> r, f, fprime, fsecond, K, residual;
    std::size_t size() const { return r.size(); }
};

struct SampledCurve {
    Family family = Family::TA_S;
    double alpha = 0.0;
    double m = 0.0;
    BranchSign sign = BranchSign::Plus;
    CurveTable table;
};

struct SampleSpec {
    int n = 100; // >= 2
    std::optional<std::pair<double, double>> window; // default: inset window
    double inset = 0.1;
    double infinite_truncation = 3.0; // default-window width on unbounded domains
    CurvatureSource residual_source = CurvatureSource::Analytic;
    double fd_step = 0.0;
    QuadratureOptions quad;
};

/// Samples r strictly inside the domain; f anchored at the profile's r_ref.
SampledCurve sample_curve(const Profile& p, const SampleSpec& spec = {});

void write_curve_csv(std::ostream& out, const CurveTable& table);
CurveTable read_curve_csv(std::istream& in);

struct MeshSpec {
    int n_r = 32;     // >= 2
    int n_theta = 32; // >= 2
    std::optional<std::pair<double, double>> r_window;
    std::optional<std::pair<double, double>> theta_window; // zero width is an error
    double inset = 0.1;
    double infinite_truncation = 3.0;
    QuadratureOptions quad;
};

struct SurfaceMesh {
    int n_r = 0;
    int n_theta = 0;
    std::vector<MinkVec3> vertices; // row-major, index = i_r * n_theta + i_theta
    std::vector<std::array<int, 4>> quads; // 0-based corner indices
    std::vector<double> r, theta;          // per-vertex parameters
    std::vector<double> K, residual;       // per-vertex attributes
};

SurfaceMesh build_mesh(const Profile& p, const MeshSpec& spec = {});

/// OBJ with `v x y z` (17 significant digits, ambient chart coordinates kept
/// verbatim) and 1-based quad `f` records.
void write_obj(std::ostream& out, const SurfaceMesh& mesh);

/// Sidecar attributes aligned with vertex order: index,r,theta,K,residual.
void write_mesh_attribute_csv(std::ostream& out, const SurfaceMesh& mesh);

// Rows of a glued-curve sample; fsecond and the residual are singular at the
// junction, so the crossing table carries (r, f, f') with a side marker.
struct GluedSampleRow {
    double r = 0.0;
    double f = 0.0;
    double fprime = 0.0;
    int side = 0; // -1 left piece, 0 junction, +1 right piece
};

std::vector<GluedSampleRow> sample_glued(const GluedCurve& curve, int n_per_side,
                                         double inset = 0.05, double infinite_truncation = 3.0,
                                         const QuadratureOptions& opts = {});

void write_glued_csv(std::ostream& out, const std::vector<GluedSampleRow>& rows);

} // namespace ktrans
