#pragma once

#include "asym.hpp"
#include "common.hpp"

#include <Eigen/Dense>

namespace fracheat {

struct sample_point {
    double t = 0.0;
    double value = 0.0;
    double error_bound = 0.0;
};

struct sample_grid {
    std::vector<sample_point> points; // geometric spacing by construction
};

inline sample_grid geometric_grid(double t_min, double t_max, double ratio = 1.25) {
    if (!(t_min > 0.0 && t_max > t_min && ratio > 1.0))
        throw invalid_argument_error("geometric_grid: bad range");
    sample_grid g;
    for (double t = t_min; t <= t_max * (1.0 + 1e-12); t *= ratio)
        g.points.push_back({t, 0.0, 0.0});
    return g;
}

struct fit_result {
    expansion_template tmpl;
    std::vector<double> coefficients;
    std::vector<double> std_errors; // per-coefficient, from the weighted normal matrix
    double residual_norm = 0.0;
    double condition_number = 1.0;
};

// Weighted least squares in the basis {t^alpha log^p t}: columns scaled to
// unit norm before the SVD so the condition number reported is that of the
// scaled design matrix.
inline fit_result fit_expansion(const sample_grid& grid, const expansion_template& tmpl) {
    const int rows = (int)grid.points.size();
    const int cols = (int)tmpl.terms.size();
    if (cols == 0) throw invalid_argument_error("fit_expansion: empty template");
    if (rows < 2 * cols)
        throw insufficient_samples("fit_expansion: need >= 2x samples per term");

    bool has_log = false;
    double tmin = grid.points.front().t, tmax = tmin;
    for (auto& p : grid.points) {
        if (!(p.t > 0.0)) throw invalid_argument_error("fit_expansion: t > 0 required");
        tmin = std::min(tmin, p.t);
        tmax = std::max(tmax, p.t);
    }
    for (auto& t : tmpl.terms) has_log |= t.log_power > 0;
    if (has_log && tmax < 10.0 * tmin)
        throw invalid_argument_error("fit_expansion: log terms need >= one decade of t range");

    double vmax = 0.0;
    for (auto& p : grid.points) vmax = std::max(vmax, std::abs(p.value));
    const double floor_w = std::max(1e-16 * vmax, 1e-300);

    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd b(rows), w(rows);
    for (int i = 0; i < rows; ++i) {
        const auto& p = grid.points[i];
        double lt = std::log(p.t);
        w(i) = 1.0 / std::max(p.error_bound, floor_w);
        for (int k = 0; k < cols; ++k) {
            const auto& term = tmpl.terms[k];
            double v = std::exp(term.exponent * lt);
            if (term.log_power > 0) v *= std::pow(lt, term.log_power);
            A(i, k) = v * w(i);
        }
        b(i) = p.value * w(i);
    }

    Eigen::VectorXd scale(cols);
    for (int k = 0; k < cols; ++k) {
        scale(k) = A.col(k).norm();
        if (scale(k) == 0.0) scale(k) = 1.0;
        A.col(k) /= scale(k);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(cols - 1);
    double cond = (smin > 0.0) ? smax / smin : 1e300;
    if (cond > 1e12)
        throw ill_conditioned("fit_expansion: condition number > 1e12");

    Eigen::VectorXd y = svd.solve(b);
    Eigen::VectorXd resid = A * y - b;

    fit_result out;
    out.tmpl = tmpl;
    out.condition_number = cond;
    out.residual_norm = resid.norm();
    out.coefficients.resize(cols);
    out.std_errors.resize(cols);
    // covariance of the scaled system: V S^{-2} V^T
    Eigen::MatrixXd V = svd.matrixV();
    for (int k = 0; k < cols; ++k) {
        out.coefficients[k] = y(k) / scale(k);
        double var = 0.0;
        for (int i = 0; i < cols; ++i) {
            double sv = svd.singularValues()(i);
            double vk = V(k, i) / sv;
            var += vk * vk;
        }
        out.std_errors[k] = std::sqrt(var) * std::max(out.residual_norm /
                              std::sqrt(std::max(rows - cols, 1)), 1.0) / scale(k);
    }
    return out;
}

// Merges a prediction report with fitted coefficients; a row passes when
// |fit - pred| <= max(rel_tol |pred|, abs_floor).
inline coefficient_report compare(const coefficient_report& predicted,
                                  const fit_result& fitted, double rel_tol,
                                  double abs_floor) {
    if (predicted.rows.size() != fitted.coefficients.size())
        throw invalid_argument_error("compare: template mismatch");
    for (size_t k = 0; k < predicted.rows.size(); ++k) {
        const auto& a = predicted.rows[k].term;
        const auto& b = fitted.tmpl.terms[k];
        if (a.exponent != b.exponent || a.log_power != b.log_power)
            throw invalid_argument_error("compare: template mismatch");
    }
    coefficient_report out = predicted;
    out.all_pass = true;
    for (size_t k = 0; k < out.rows.size(); ++k) {
        auto& row = out.rows[k];
        row.has_fitted = true;
        row.fitted = fitted.coefficients[k];
        row.abs_err = std::abs(row.fitted - row.predicted);
        row.rel_err = row.abs_err / std::max(std::abs(row.predicted), 1e-300);
        row.pass = row.abs_err <= std::max(rel_tol * std::abs(row.predicted), abs_floor);
        out.all_pass &= row.pass;
    }
    return out;
}

} // namespace fracheat
