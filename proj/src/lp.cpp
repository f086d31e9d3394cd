#include "lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace rankrange::detail {

namespace {
constexpr double kPivotEps = 1e-9;
constexpr double kRatioTieTol = 1e-12;
constexpr std::size_t kMaxPivots = 100000;
// After this many pivots the ratio test falls back to strict Bland ties,
// which cannot cycle.
constexpr std::size_t kStableTiePivots = 2000;
}  // namespace

LpResult maximize(std::size_t rows, std::size_t cols, const std::vector<double>& a,
                  const std::vector<double>& b, const std::vector<double>& c) {
    assert(a.size() == rows * cols && b.size() == rows && c.size() == cols);

    // x_B[i] = rhs[i] - sum_j coef[i][j] * x_N[j];  z = z0 + sum_j cost[j] * x_N[j]
    std::vector<double> coef = a;
    std::vector<double> rhs = b;
    std::vector<double> cost = c;
    double z0 = 0.0;
    std::vector<std::size_t> nonbasic(cols);
    std::vector<std::size_t> basic(rows);
    for (std::size_t j = 0; j < cols; ++j) nonbasic[j] = j;
    for (std::size_t i = 0; i < rows; ++i) basic[i] = cols + i;
    for (double& v : rhs) v = std::max(v, 0.0);

    LpResult result;
    for (std::size_t pivots = 0; pivots < kMaxPivots; ++pivots) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cost[j] > kPivotEps && (enter == cols || nonbasic[j] < nonbasic[enter])) enter = j;
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows; ++i) {
            const double p = coef[i * cols + enter];
            if (p <= kPivotEps) continue;
            const double ratio = rhs[i] / p;
            if (ratio < best || (ratio == best && basic[i] < basic[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows) {
            result.unbounded = true;
            return result;
        }
        // Among rows whose ratio ties the minimum up to rounding, pivot on the
        // largest coefficient: a tiny pivot there wrecks the dictionary.
        if (pivots < kStableTiePivots) {
            for (std::size_t i = 0; i < rows; ++i) {
                const double p = coef[i * cols + enter];
                if (p <= kPivotEps) continue;
                if (rhs[i] / p <= best + kRatioTieTol && p > coef[leave * cols + enter]) leave = i;
            }
        }

        const double pivot = coef[leave * cols + enter];
        double* prow = &coef[leave * cols];
        rhs[leave] /= pivot;
        for (std::size_t j = 0; j < cols; ++j) prow[j] = (j == enter) ? 1.0 / pivot : prow[j] / pivot;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave) continue;
            double* row = &coef[i * cols];
            const double f = row[enter];
            if (f == 0.0) continue;
            rhs[i] = std::max(0.0, rhs[i] - f * rhs[leave]);
            for (std::size_t j = 0; j < cols; ++j) {
                row[j] = (j == enter) ? -f * prow[j] : row[j] - f * prow[j];
            }
        }
        const double f = cost[enter];
        z0 += f * rhs[leave];
        for (std::size_t j = 0; j < cols; ++j) {
            cost[j] = (j == enter) ? -f * prow[j] : cost[j] - f * prow[j];
        }
        std::swap(nonbasic[enter], basic[leave]);
    }

    result.x.assign(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basic[i] < cols) result.x[basic[i]] = rhs[i];
    }
    result.objective = z0;
    return result;
}

}  // namespace rankrange::detail
