#include "explicit_lab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "explicit_lab/error.hpp"
#include "explicit_lab/summation.hpp"

namespace explicit_lab::quadrature {
namespace {

// Kronrod abscissae in descending order; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

Result gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);

    double kronrod = f_center * kKronrodWeights[7];
    double gauss = f_center * kGaussWeights[3];
    double abs_sum = std::abs(kronrod);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double pair = f1[j] + f2[j];
        kronrod += kKronrodWeights[j] * pair;
        abs_sum += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }

    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[7] * std::abs(f_center - mean);
    for (int j = 0; j < 7; ++j) {
        asc += kKronrodWeights[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }

    const double scale = std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    const double resasc = asc * scale;
    const double resabs = abs_sum * scale;
    // QUADPACK's error heuristic: sharpen when the rule clearly converged,
    // but never claim more than the roundoff floor allows.
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * resabs, err);
    }
    return {kronrod * half, err, 1};
}

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opts) {
    if (a == b) return {};
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("quadrature bounds must be finite");
    }
    if (a > b) {
        Result r = integrate(f, b, a, opts);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<Panel> heap;
    const Result first = gauss_kronrod_15(f, a, b);
    heap.push({a, b, first.value, first.error});
    double total_err = first.error;
    double total_val = first.value;
    std::size_t count = 1;

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total_val)); };

    while (total_err > target()) {
        if (count >= opts.max_intervals) {
            throw AccuracyError("adaptive quadrature did not converge: error estimate " +
                                std::to_string(total_err) + " (target " + std::to_string(target()) + ")" + " after " + std::to_string(count) +
                                " panels");
        }
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw AccuracyError("adaptive quadrature reached machine resolution");
        }
        heap.pop();
        const Result left = gauss_kronrod_15(f, worst.a, mid);
        const Result right = gauss_kronrod_15(f, mid, worst.b);
        heap.push({worst.a, mid, left.value, left.error});
        heap.push({mid, worst.b, right.value, right.error});
        total_val += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        ++count;
    }

    // Re-add in interval order so the reported value does not depend on the
    // running-update rounding.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    CompensatedSum value, error;
    for (const auto& p : panels) {
        value.add(p.value);
        error.add(p.error);
    }
    return {value.value(), error.value(), count};
}

}  // namespace explicit_lab::quadrature
