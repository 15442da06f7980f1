#include "polynomial.hpp"

#include <cmath>

namespace nieptk {

CVec char_poly(const CMat& m) {
    std::size_t n = m.size();
    if (n > 12) throw unsupported_size_error("char_poly: n <= 12 required");
    for (const auto& row : m)
        if (row.size() != n) throw invalid_argument_error("char_poly: matrix not square");
    CVec c(n + 1, cplx(0.0, 0.0));
    c[0] = 1.0;
    CMat ak = m;
    for (std::size_t k = 1; k <= n; ++k) {
        c[k] = -trace(ak) / static_cast<double>(k);
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) ak[i][i] += c[k];
        ak = matmul(m, ak);
    }
    return c;
}

CVec poly_from_power_sums(const CVec& power_sums) {
    std::size_t n = power_sums.size();
    CVec c(n + 1, cplx(0.0, 0.0));
    c[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        cplx acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) acc += power_sums[i - 1] * c[k - i];
        c[k] = -acc / static_cast<double>(k);
    }
    return c;
}

CVec poly_from_roots(const CVec& roots) {
    CVec c{cplx(1.0, 0.0)};
    for (const cplx& r : roots) {
        CVec next(c.size() + 1, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

cplx poly_eval(const CVec& coeffs, cplx x) {
    cplx v = 0.0;
    for (const cplx& c : coeffs) v = v * x + c;
    return v;
}

CVec poly_derivative(const CVec& coeffs) {
    std::size_t d = coeffs.size() - 1;
    if (d == 0) return {cplx(0.0, 0.0)};
    CVec out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = coeffs[i] * static_cast<double>(d - i);
    return out;
}

RootResult poly_roots(const CVec& coeffs) {
    if (coeffs.empty() || std::abs(coeffs[0] - cplx(1.0, 0.0)) > 1e-12)
        throw invalid_argument_error("poly_roots: monic coefficient vector required");
    std::size_t deg = coeffs.size() - 1;
    if (deg > 12) throw unsupported_size_error("poly_roots: degree <= 12 required");

    RootResult res;
    if (deg == 0) return res;

    // radius heuristic keeps initial points around the root bound
    double radius = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        radius = std::max(radius, std::pow(std::abs(coeffs[i]), 1.0 / static_cast<double>(i)));
    radius = std::max(radius, 0.5);

    CVec z(deg);
    cplx seed(0.4, 0.9);
    cplx p = radius;
    for (std::size_t i = 0; i < deg; ++i) {
        z[i] = p;
        p *= seed;
    }

    const std::size_t max_iter = 500;
    const double tol = 1e-12;
    res.converged = false;
    for (std::size_t it = 0; it < max_iter; ++it) {
        double max_update = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            cplx denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == cplx(0.0, 0.0)) {
                z[i] += cplx(1e-8, 1e-8);
                max_update = 1.0;
                continue;
            }
            cplx delta = poly_eval(coeffs, z[i]) / denom;
            z[i] -= delta;
            max_update = std::max(max_update, std::abs(delta));
        }
        res.iterations = it + 1;
        if (max_update < tol) {
            res.converged = true;
            break;
        }
    }

    // one Newton polish per root
    CVec dp = poly_derivative(coeffs);
    for (std::size_t i = 0; i < deg; ++i) {
        cplx d = poly_eval(dp, z[i]);
        if (std::abs(d) > 1e-8) z[i] -= poly_eval(coeffs, z[i]) / d;
    }
    // multiple roots land in a symmetric cluster around the true value; the
    // cluster mean recovers most of the digits the iteration loses
    {
        std::vector<bool> used(deg, false);
        for (std::size_t i = 0; i < deg; ++i) {
            if (used[i]) continue;
            double radius = 1e-5 * std::max(1.0, std::abs(z[i]));
            std::vector<std::size_t> cluster{i};
            for (std::size_t j = i + 1; j < deg; ++j)
                if (!used[j] && std::abs(z[j] - z[i]) < radius) cluster.push_back(j);
            if (cluster.size() < 2) continue;
            cplx mean = 0.0;
            for (std::size_t j : cluster) mean += z[j];
            mean /= static_cast<double>(cluster.size());
            for (std::size_t j : cluster) {
                z[j] = mean;
                used[j] = true;
            }
        }
    }
    res.roots = std::move(z);
    if (!res.converged) {
        // multiple roots converge only linearly; accept if residuals are tiny
        double scale = 1.0;
        for (const cplx& c : coeffs) scale = std::max(scale, std::abs(c));
        bool ok = true;
        for (const cplx& r : res.roots)
            if (std::abs(poly_eval(coeffs, r)) > 1e-8 * scale) ok = false;
        res.converged = ok;
    }
    return res;
}

}  // namespace nieptk
