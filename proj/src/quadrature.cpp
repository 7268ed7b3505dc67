#include "ktrans/quadrature.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "ktrans/errors.hpp"

namespace ktrans {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kron = kWgk[7] * f(c);
    double gauss = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kron *= half;
    gauss *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

struct WorstFirst {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a; // deterministic tie-break
    }
};

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opts) {
    if (a == b) return {0.0, 0.0, 0};
    const double sign = a < b ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
    Panel whole = evaluate_panel(f, lo, hi);
    double total_value = whole.value;
    double total_error = whole.error;
    int used = 1;
    queue.push(whole);

    while (true) {
        const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(total_value));
        if (total_error <= target) break;
        if (used >= opts.max_intervals) {
            std::ostringstream msg;
            msg << "quadrature budget exhausted: " << used << " subintervals, error estimate "
                << total_error << " > tolerance " << target << ", worst subinterval ["
                << queue.top().a << ", " << queue.top().b << "]";
            throw NumericalError(msg.str());
        }
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at rounding resolution; accept its estimate as-is.
            queue.push({worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++used;
    }
    return {sign * total_value, total_error, used};
}

QuadratureResult integrate_singular_left(const std::function<double(double)>& f, double a,
                                         double b, double p, const QuadratureOptions& opts) {
    if (!(p > -1.0)) throw NumericalError("endpoint singularity is not integrable (exponent <= -1)");
    if (a == b) return {0.0, 0.0, 0};
    if (!(b > a)) throw DomainError("integrate_singular_left requires a < b");
    const double beta = 1.0 / (1.0 + p);
    const double tmax = std::pow(b - a, 1.0 / beta);
    auto transformed = [&](double t) {
        return f(a + std::pow(t, beta)) * beta * std::pow(t, beta - 1.0);
    };
    return integrate_adaptive(transformed, 0.0, tmax, opts);
}

double gk15_panel(const std::function<double(double)>& f, double a, double b) {
    if (a == b) return 0.0;
    if (a > b) return -gk15_panel(f, b, a);
    return evaluate_panel(f, a, b).value;
}

QuadratureResult integrate_singular_right(const std::function<double(double)>& f, double a,
                                          double b, double p, const QuadratureOptions& opts) {
    if (!(p > -1.0)) throw NumericalError("endpoint singularity is not integrable (exponent <= -1)");
    if (a == b) return {0.0, 0.0, 0};
    if (!(b > a)) throw DomainError("integrate_singular_right requires a < b");
    const double beta = 1.0 / (1.0 + p);
    const double tmax = std::pow(b - a, 1.0 / beta);
    auto transformed = [&](double t) {
        return f(b - std::pow(t, beta)) * beta * std::pow(t, beta - 1.0);
    };
    return integrate_adaptive(transformed, 0.0, tmax, opts);
}

} // namespace ktrans
