#include "excessd/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace excessd {

namespace {

void validate(const SimplexConfig& config, Eigen::Index dim) {
    if (config.max_iters < 1) throw std::invalid_argument("simplex: max_iters must be >= 1");
    if (!(config.rel_tol > 0.0)) throw std::invalid_argument("simplex: rel_tol must be > 0");
    if (!config.bounds.empty()) {
        if (static_cast<Eigen::Index>(config.bounds.size()) != dim)
            throw std::invalid_argument("simplex: bounds dimension mismatch");
        for (const Bounds& b : config.bounds)
            if (!(b.lo <= b.hi)) throw std::invalid_argument("simplex: bound lo > hi");
    }
}

}  // namespace

SimplexResult minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                       const Eigen::VectorXd& x0, const SimplexConfig& config) {
    const Eigen::Index n = x0.size();
    if (n < 1) throw std::invalid_argument("simplex: dimension must be >= 1");
    validate(config, n);

    auto clip = [&config, n](Eigen::VectorXd v) {
        if (!config.bounds.empty()) {
            for (Eigen::Index i = 0; i < n; ++i)
                v[i] = std::min(std::max(v[i], config.bounds[i].lo), config.bounds[i].hi);
        }
        return v;
    };

    std::vector<Eigen::VectorXd> verts;
    verts.reserve(n + 1);
    verts.push_back(clip(x0));
    for (Eigen::Index i = 0; i < n; ++i) {
        double step = 0.05;
        if (!config.bounds.empty() && std::isfinite(config.bounds[i].lo) &&
            std::isfinite(config.bounds[i].hi)) {
            step = 0.05 * (config.bounds[i].hi - config.bounds[i].lo);
        }
        Eigen::VectorXd v = x0;
        v[i] += step;
        verts.push_back(clip(std::move(v)));
    }

    std::vector<double> fv(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i) fv[i] = objective(verts[i]);
    if (!std::isfinite(fv[0]))
        throw std::invalid_argument("simplex: objective is not finite at x0");

    auto sort_simplex = [&]() {
        std::vector<Eigen::Index> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&fv](Eigen::Index a, Eigen::Index b) { return fv[a] < fv[b]; });
        std::vector<Eigen::VectorXd> sv(n + 1);
        std::vector<double> sf(n + 1);
        for (Eigen::Index i = 0; i <= n; ++i) {
            sv[i] = std::move(verts[idx[i]]);
            sf[i] = fv[idx[i]];
        }
        verts = std::move(sv);
        fv = std::move(sf);
    };

    int iters = 0;
    bool converged = false;
    while (iters < config.max_iters) {
        sort_simplex();
        double diam = 0.0;
        for (Eigen::Index i = 1; i <= n; ++i)
            diam = std::max(diam, (verts[i] - verts[0]).lpNorm<Eigen::Infinity>());
        if (diam <= config.rel_tol * (1.0 + verts[0].lpNorm<Eigen::Infinity>())) {
            converged = true;
            break;
        }
        ++iters;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (Eigen::Index i = 0; i < n; ++i) centroid += verts[i];
        centroid /= static_cast<double>(n);

        Eigen::VectorXd xr = clip(centroid + config.reflection * (centroid - verts[n]));
        double fr = objective(xr);
        if (fr < fv[0]) {
            Eigen::VectorXd xe = clip(centroid + config.expansion * (centroid - verts[n]));
            double fe = objective(xe);
            if (fe < fr) {
                verts[n] = std::move(xe);
                fv[n] = fe;
            } else {
                verts[n] = std::move(xr);
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            verts[n] = std::move(xr);
            fv[n] = fr;
        } else if (fr < fv[n]) {
            Eigen::VectorXd xc = clip(centroid + config.contraction * (xr - centroid));
            double fc = objective(xc);
            if (fc <= fr) {
                verts[n] = std::move(xc);
                fv[n] = fc;
            } else {
                for (Eigen::Index i = 1; i <= n; ++i) {
                    verts[i] = clip(verts[0] + config.shrink * (verts[i] - verts[0]));
                    fv[i] = objective(verts[i]);
                }
            }
        } else {
            Eigen::VectorXd xc = clip(centroid + config.contraction * (verts[n] - centroid));
            double fc = objective(xc);
            if (fc < fv[n]) {
                verts[n] = std::move(xc);
                fv[n] = fc;
            } else {
                for (Eigen::Index i = 1; i <= n; ++i) {
                    verts[i] = clip(verts[0] + config.shrink * (verts[i] - verts[0]));
                    fv[i] = objective(verts[i]);
                }
            }
        }
    }
    sort_simplex();
    return SimplexResult{verts[0], fv[0], converged, iters};
}

}  // namespace excessd
