#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ktrans/errors.hpp"
#include "ktrans/format.hpp"
#include "ktrans/glue.hpp"
#include "ktrans/profile.hpp"
#include "ktrans/sampling.hpp"
#include "ktrans/serialize.hpp"
#include "ktrans/validate.hpp"

namespace {

using namespace ktrans;

std::pair<double, double> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw AdmissibilityError("window must be formatted as lo:hi");
    return {parse_double(std::string_view(text).substr(0, colon)),
            parse_double(std::string_view(text).substr(colon + 1))};
}

Family parse_family_or_throw(const std::string& name) {
    const auto fam = parse_family(name);
    if (!fam)
        throw AdmissibilityError("unknown family '" + name +
                                 "', expected one of TA-S, TA-T, SA-S, SA-T1, SA-T2, LA-S, LA-T");
    return *fam;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        auto out = open_output(out_path);
        out << text;
        if (!out) throw IoError("failed writing output file: " + out_path);
    }
}

struct ProfileArgs {
    std::string family = "TA-S";
    double alpha = 0.25;
    double m = 0.0;
    std::string sign = "+";

    Profile make() const {
        return Profile(parse_family_or_throw(family), alpha, m, parse_sign(sign));
    }
};

void add_profile_options(CLI::App* cmd, ProfileArgs& args) {
    cmd->add_option("--family", args.family, "family tag: TA-S, TA-T, SA-S, SA-T1, SA-T2, LA-S, LA-T")
        ->required();
    cmd->add_option("--alpha", args.alpha, "curvature exponent (nonzero)")->required();
    cmd->add_option("--m", args.m, "integration constant")->required();
    cmd->add_option("--sign", args.sign, "derivative branch, + or - (default +)");
}

std::string profile_summary(const Profile& p) {
    std::ostringstream out;
    out << "family: " << family_name(p.family()) << " (" << family_description(p.family())
        << ")\n";
    out << "alpha: " << format_shortest(p.alpha()) << ", m: " << format_shortest(p.m())
        << ", branch: " << sign_name(p.sign()) << "\n";
    out << "parameter case: " << p.case_label() << "\n";
    out << "domain: (" << format_shortest(p.domain().lo) << ", "
        << (p.domain().hi_unbounded() ? std::string("inf") : format_shortest(p.domain().hi))
        << ")\n";
    out << "r_ref: " << format_shortest(p.r_ref()) << "\n";
    out << "endpoint behavior: left " << endpoint_behavior_name(p.endpoint_behavior(Endpoint::Left))
        << ", right " << endpoint_behavior_name(p.endpoint_behavior(Endpoint::Right)) << "\n";
    out << "golden closed form: "
        << (golden_closed_form(p.family(), p.alpha(), p.m()) ? "available" : "none") << "\n";
    if (!p.is_translator_case())
        out << "note: K < 0 on this cataloged case; it is an explicit antiderivative kept as a "
               "quadrature oracle, not a translator\n";
    return out.str();
}

int dispatch(int argc, char** argv) {
    CLI::App app{"rotational translators of the flow by powers of Gauss curvature in Minkowski "
                 "3-space: profiles, residual validation, gluing, exports"};
    app.require_subcommand(1);

    // profile
    auto* cmd_profile = app.add_subcommand("profile", "resolve a profile: domain, endpoint behavior");
    ProfileArgs prof_args;
    add_profile_options(cmd_profile, prof_args);
    bool prof_json = false;
    std::string prof_out;
    cmd_profile->add_flag("--json", prof_json, "print the JSON descriptor instead of text");
    cmd_profile->add_option("--out", prof_out, "write the JSON descriptor to a file");
    cmd_profile->callback([&] {
        Profile p = prof_args.make();
        if (!prof_out.empty()) emit(profile_to_json(p).dump(2) + "\n", prof_out);
        if (prof_json)
            std::cout << profile_to_json(p).dump(2) << "\n";
        else
            std::cout << profile_summary(p);
    });

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "sample the generating curve to CSV");
    ProfileArgs sample_args;
    add_profile_options(cmd_sample, sample_args);
    SampleSpec sample_spec;
    std::string sample_window, sample_curvature = "analytic", sample_out;
    double sample_tol = 1e-10;
    cmd_sample->add_option("--n", sample_spec.n, "number of samples (>= 2)");
    cmd_sample->add_option("--window", sample_window, "radial window lo:hi (default: inset window)");
    cmd_sample->add_option("--inset", sample_spec.inset, "default-window inset fraction");
    cmd_sample->add_option("--curvature", sample_curvature, "residual source: analytic or fd");
    cmd_sample->add_option("--fd-step", sample_spec.fd_step, "finite-difference step (0 = default)");
    cmd_sample->add_option("--tol", sample_tol, "quadrature tolerance for f");
    cmd_sample->add_option("--out", sample_out, "output CSV path (default stdout)");
    cmd_sample->callback([&] {
        Profile p = sample_args.make();
        if (!sample_window.empty()) sample_spec.window = parse_window(sample_window);
        if (sample_curvature == "fd")
            sample_spec.residual_source = CurvatureSource::FiniteDifference;
        else if (sample_curvature != "analytic")
            throw AdmissibilityError("--curvature must be 'analytic' or 'fd'");
        sample_spec.quad.abs_tol = sample_spec.quad.rel_tol = sample_tol;
        SampledCurve curve = sample_curve(p, sample_spec);
        std::ostringstream buf;
        write_curve_csv(buf, curve.table);
        emit(buf.str(), sample_out);
    });

    // mesh
    auto* cmd_mesh = app.add_subcommand("mesh", "export the rotational surface as OBJ + attribute CSV");
    ProfileArgs mesh_args;
    add_profile_options(cmd_mesh, mesh_args);
    MeshSpec mesh_spec;
    std::string mesh_window, mesh_theta_window, mesh_out;
    double mesh_tol = 1e-10;
    cmd_mesh->add_option("--nr", mesh_spec.n_r, "radial samples (>= 2)");
    cmd_mesh->add_option("--ntheta", mesh_spec.n_theta, "rotational samples (>= 2)");
    cmd_mesh->add_option("--window", mesh_window, "radial window lo:hi");
    cmd_mesh->add_option("--theta-window", mesh_theta_window, "rotation window lo:hi");
    cmd_mesh->add_option("--inset", mesh_spec.inset, "default-window inset fraction");
    cmd_mesh->add_option("--tol", mesh_tol, "quadrature tolerance for f");
    cmd_mesh->add_option("--out", mesh_out, "output OBJ path")->required();
    cmd_mesh->callback([&] {
        Profile p = mesh_args.make();
        if (!mesh_window.empty()) mesh_spec.r_window = parse_window(mesh_window);
        if (!mesh_theta_window.empty()) mesh_spec.theta_window = parse_window(mesh_theta_window);
        mesh_spec.quad.abs_tol = mesh_spec.quad.rel_tol = mesh_tol;
        SurfaceMesh mesh = build_mesh(p, mesh_spec);
        {
            auto out = open_output(mesh_out);
            write_obj(out, mesh);
            if (!out) throw IoError("failed writing OBJ: " + mesh_out);
        }
        auto attrs = open_output(mesh_out + ".attrs.csv");
        write_mesh_attribute_csv(attrs, mesh);
        if (!attrs) throw IoError("failed writing attribute CSV");
        std::cout << "wrote " << mesh.vertices.size() << " vertices, " << mesh.quads.size()
                  << " quads to " << mesh_out << "\n";
    });

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "sweep the translator residual on a grid");
    ProfileArgs val_args;
    add_profile_options(cmd_validate, val_args);
    GridSpec grid;
    ResidualOptions val_opts;
    std::string val_theta_window, val_curvature = "analytic", val_out, val_table;
    cmd_validate->add_option("--nr", grid.n_r, "radial grid points");
    cmd_validate->add_option("--ntheta", grid.n_theta, "rotational grid points");
    cmd_validate->add_option("--inset", grid.inset, "interior inset fraction (> 0)");
    cmd_validate->add_option("--theta-window", val_theta_window, "rotation window lo:hi");
    cmd_validate->add_option("--fd-step", val_opts.fd_step, "finite-difference step (0 = default)");
    cmd_validate->add_option("--curvature", val_curvature,
                             "primary column for the summary line: analytic or fd");
    cmd_validate->add_option("--table", val_table,
                             "validate a sampled curve CSV (r,f,fprime,fsecond,K,residual) "
                             "against this family/alpha instead of sweeping a grid");
    cmd_validate->add_option("--out", val_out, "write the JSON report to a file");
    cmd_validate->callback([&] {
        if (!val_table.empty()) {
            std::ifstream in(val_table, std::ios::binary);
            if (!in) throw IoError("cannot open table: " + val_table);
            CurveTable table = read_curve_csv(in);
            const Family fam = parse_family_or_throw(val_args.family);
            double sup = 0.0, sum = 0.0;
            for (std::size_t i = 0; i < table.size(); ++i) {
                const double res = residual_from_values(fam, val_args.alpha, table.r[i], 0.0,
                                                        table.fprime[i], table.fsecond[i]);
                sup = std::max(sup, res);
                sum += res;
            }
            json j;
            j["table"] = val_table;
            j["rows"] = table.size();
            j["sup_residual"] = sup;
            j["mean_residual"] = table.size() ? sum / static_cast<double>(table.size()) : 0.0;
            emit(j.dump(2) + "\n", val_out);
            if (!val_out.empty()) std::cout << j.dump(2) << "\n";
            return;
        }
        Profile p = val_args.make();
        if (!val_theta_window.empty()) grid.theta_window = parse_window(val_theta_window);
        if (val_curvature != "analytic" && val_curvature != "fd")
            throw AdmissibilityError("--curvature must be 'analytic' or 'fd'");
        ResidualReport rep = validate_grid(p, grid, val_opts);
        const json j = report_to_json(rep);
        emit(j.dump(2) + "\n", val_out);
        if (!val_out.empty()) std::cout << j.dump(2) << "\n";
        const double primary = val_curvature == "fd" ? rep.sup_fd : rep.sup_analytic;
        std::cerr << "sup residual (" << val_curvature << "): " << format_shortest(primary)
                  << "\n";
    });

    // glue
    auto* cmd_glue = app.add_subcommand(
        "glue", "join a timelike/spacelike pair across their degenerate boundary");
    std::string glue_pair, glue_sign = "+", glue_out;
    double glue_alpha = 0.25, glue_m = 1.0, glue_tol = 1e-10;
    int glue_n = 100;
    cmd_glue->add_option("--pair", glue_pair, "axis pair: TA, SA or LA")->required();
    cmd_glue->add_option("--alpha", glue_alpha, "shared exponent, must lie in (0, 1/2)")->required();
    cmd_glue->add_option("--m", glue_m, "inner-piece constant (> 0); the outer piece gets -m")
        ->required();
    cmd_glue->add_option("--sign", glue_sign, "branch sign for polar/hyperbolic pairs");
    cmd_glue->add_option("--n", glue_n, "samples per side for the CSV");
    cmd_glue->add_option("--tol", glue_tol, "constant/junction matching tolerance");
    cmd_glue->add_option("--out", glue_out, "write the crossing CSV to a file");
    cmd_glue->callback([&] {
        const BranchSign sign = parse_sign(glue_sign);
        std::optional<GluedCurve> curve;
        if (glue_pair == "TA") {
            curve.emplace(glue(Profile(Family::TA_T, glue_alpha, glue_m, sign),
                               Profile(Family::TA_S, glue_alpha, -glue_m, sign), glue_tol));
        } else if (glue_pair == "SA") {
            curve.emplace(glue(Profile(Family::SA_S, glue_alpha, glue_m, sign),
                               Profile(Family::SA_T1, glue_alpha, -glue_m, sign), glue_tol));
        } else if (glue_pair == "LA") {
            curve.emplace(glue(Profile(Family::LA_T, glue_alpha, glue_m),
                               Profile(Family::LA_S, glue_alpha, -glue_m), glue_tol));
        } else {
            throw AdmissibilityError("--pair must be TA, SA or LA");
        }
        std::cout << glued_to_json(*curve, curve->diagnostics()).dump(2) << "\n";
        if (!glue_out.empty()) {
            std::ostringstream buf;
            write_glued_csv(buf, sample_glued(*curve, glue_n));
            emit(buf.str(), glue_out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const AdmissibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
