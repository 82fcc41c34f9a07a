#include "tpzeros/rootfinder.hpp"

#include "tpzeros/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tpz {

namespace {

constexpr double kSeedAngleOffset = 0.4;

// Unique positive root of |c_n| x^n = sum_{k<n} |c_k| x^k, found by
// bisection on log x inside [M, 2M], M = max_k |c_k/c_n|^{1/(n-k)}.
double cauchy_bound(std::span<const double> c) {
    const std::size_t n = c.size() - 1;
    const double lead = std::abs(c[n]);
    std::vector<double> log_ratio(n);
    double log_m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const double r = std::abs(c[k]) / lead;
        log_ratio[k] = r > 0.0 ? std::log(r) : -std::numeric_limits<double>::infinity();
        log_m = std::max(log_m, log_ratio[k] / static_cast<double>(n - k));
    }
    double lo = log_m;
    double hi = log_m + std::numbers::ln2;
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            sum += std::exp(log_ratio[k] - static_cast<double>(n - k) * mid);
        (sum > 1.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

struct Evaluation {
    cplx newton;       // p(z) / p'(z)
    double residual;   // |p(z)| / sum |c_k||z|^k
};

// Horner on p and p' for |z| <= 1, on the reversal at 1/z otherwise.
Evaluation evaluate(std::span<const double> c, cplx z) {
    const std::size_t n = c.size() - 1;
    if (std::abs(z) <= 1.0) {
        cplx p = c[n];
        cplx dp = 0.0;
        double scale = std::abs(c[n]);
        const double az = std::abs(z);
        for (std::size_t k = n; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[k];
            scale = scale * az + std::abs(c[k]);
        }
        return {p / dp, std::abs(p) / scale};
    }
    const cplx w = 1.0 / z;
    const double aw = std::abs(w);
    cplx q = c[0];
    cplx dq = 0.0;
    double scale = std::abs(c[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        dq = dq * w + q;
        q = q * w + c[k];
        scale = scale * aw + std::abs(c[k]);
    }
    // p'(z)/p(z) = w (n - w q'(w)/q(w))
    const cplx log_deriv = w * (static_cast<double>(n) - w * dq / q);
    return {1.0 / log_deriv, std::abs(q) / scale};
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::vector<cplx> aberth(std::span<const double> c, double target, int max_iter) {
    const std::size_t n = c.size() - 1;
    if (n == 1)
        return {cplx(-c[0] / c[1], 0.0)};

    std::vector<double> reversed(c.rbegin(), c.rend());
    const double upper = cauchy_bound(c);
    const double lower = 1.0 / cauchy_bound(reversed);
    const double radius = std::sqrt(upper * lower);

    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)
                             + kSeedAngleOffset;
        z[k] = std::polar(radius, theta);
    }

    std::vector<char> done(n, 0);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::size_t remaining = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i])
                continue;
            const Evaluation ev = evaluate(c, z[i]);
            if (ev.residual <= target) {
                done[i] = 1;
            }
            cplx repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i)
                    repulsion += 1.0 / (z[i] - z[j]);
            }
            const cplx step = ev.newton / (1.0 - ev.newton * repulsion);
            if (finite(step))
                z[i] -= step;
            else if (!finite(ev.newton) || ev.residual > target)
                z[i] *= cplx(1.0 + 1e-3, 1e-3);
            if (!done[i])
                ++remaining;
        }
        if (remaining == 0)
            break;
    }
    return z;
}

} // namespace

double relative_residual(std::span<const double> coeffs, cplx z) {
    const double az = std::abs(z);
    cplx p = 0.0;
    double scale = 0.0;
    if (az <= 1.0) {
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            p = p * z + *it;
            scale = scale * az + std::abs(*it);
        }
    } else {
        const cplx w = 1.0 / z;
        const double aw = std::abs(w);
        for (double ck : coeffs) {
            p = p * w + ck;
            scale = scale * aw + std::abs(ck);
        }
    }
    return scale > 0.0 ? std::abs(p) / scale : 0.0;
}

RootSet find_roots(std::span<const double> coeffs, double rel_tol, int max_iter) {
    if (coeffs.empty())
        throw Error(ErrorCode::DegenerateInput, "empty coefficient list");
    const auto nonzero = [](double v) { return v != 0.0; };
    const auto first = std::find_if(coeffs.begin(), coeffs.end(), nonzero);
    if (first == coeffs.end())
        throw Error(ErrorCode::DegenerateInput, "all coefficients are zero");
    const auto last = std::find_if(coeffs.rbegin(), coeffs.rend(), nonzero);
    const std::size_t lo = static_cast<std::size_t>(first - coeffs.begin());
    const std::size_t hi = coeffs.size() - 1 - static_cast<std::size_t>(last - coeffs.rbegin());
    if (hi == 0)
        throw Error(ErrorCode::DegenerateInput, "polynomial is constant");

    for (double v : coeffs) {
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFinite, "coefficient is not finite");
    }

    RootSet rs;
    rs.degree = coeffs.size() - 1;
    rs.trailing_zero_multiplicity = lo;
    const std::size_t n = hi - lo;
    if (n == 0)
        return rs;

    double max_abs = 0.0;
    for (std::size_t k = lo; k <= hi; ++k)
        max_abs = std::max(max_abs, std::abs(coeffs[k]));
    std::vector<double> work(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                             coeffs.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    for (double& v : work)
        v /= max_abs;

    const double threshold = rel_tol * static_cast<double>(n);
    // Iterate to a tighter target so that re-evaluating on the unscaled,
    // unstripped coefficients still certifies.
    std::vector<cplx> roots = aberth(work, 0.25 * threshold, max_iter);

    std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
        const double ax = std::abs(x);
        const double ay = std::abs(y);
        if (ax != ay)
            return ax < ay;
        return std::arg(x) < std::arg(y);
    });

    const double certify = rel_tol * static_cast<double>(rs.degree);
    rs.residuals.reserve(n);
    for (cplx z : roots) {
        const double r = relative_residual(coeffs, z);
        if (!finite(z) || !(r <= certify))
            throw Error(ErrorCode::NoConvergence,
                        "root residual " + std::to_string(r) + " above certification threshold");
        rs.residuals.push_back(r);
    }
    rs.roots = std::move(roots);
    return rs;
}

DiskCount count_in_disk(const RootSet& rs, double radius, double boundary_rel_tol) {
    DiskCount out;
    out.boundary_tolerance = boundary_rel_tol;
    out.inside = rs.trailing_zero_multiplicity;
    const double band = boundary_rel_tol * radius;
    for (cplx z : rs.roots) {
        const double r = std::abs(z);
        if (std::abs(r - radius) <= band)
            ++out.on_boundary;
        else if (r < radius)
            ++out.inside;
        else
            ++out.outside;
    }
    return out;
}

} // namespace tpz
