#include "hawkes/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace hawkes {

namespace {

// Kronrod 15-point nodes and weights on [-1, 1]; the embedded Gauss-7 rule
// uses the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double result_gauss = 0.0;
    double result_kronrod = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        result_kronrod += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) {
            result_gauss += kWg[i / 2] * (f1 + f2);
        }
    }
    const double fc = f(c);
    result_kronrod += kWgk[7] * fc;
    result_gauss += kWg[3] * fc;
    result_kronrod *= h;
    result_gauss *= h;
    return {result_kronrod, std::abs(result_kronrod - result_gauss)};
}

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_panels) {
    if (a == b) {
        return 0.0;
    }
    // Globally adaptive: always bisect the panel with the largest error
    // estimate, so integrable endpoint singularities cost a geometric chain
    // of panels instead of a full binary tree.
    std::vector<Panel> panels;
    panels.reserve(static_cast<std::size_t>(max_panels));
    const PanelResult first = gk15(f, a, b);
    panels.push_back({a, b, first.value, first.error});
    const auto worse = [](const Panel& x, const Panel& y) {
        return x.error < y.error;
    };
    std::make_heap(panels.begin(), panels.end(), worse);
    double total_error = first.error;
    while (total_error > abs_tol &&
           panels.size() < static_cast<std::size_t>(max_panels)) {
        std::pop_heap(panels.begin(), panels.end(), worse);
        const Panel p = panels.back();
        panels.pop_back();
        const double c = 0.5 * (p.a + p.b);
        if (c <= p.a || c >= p.b) { // interval at machine resolution
            Panel done = p;
            done.error = 0.0;
            panels.push_back(done);
            std::push_heap(panels.begin(), panels.end(), worse);
            total_error -= p.error;
            continue;
        }
        const PanelResult left = gk15(f, p.a, c);
        const PanelResult right = gk15(f, c, p.b);
        total_error += left.error + right.error - p.error;
        panels.push_back({p.a, c, left.value, left.error});
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back({c, p.b, right.value, right.error});
        std::push_heap(panels.begin(), panels.end(), worse);
    }
    // Sum smallest-magnitude first for a little extra accuracy.
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
        return std::abs(x.value) < std::abs(y.value);
    });
    double total = 0.0;
    for (const Panel& p : panels) {
        total += p.value;
    }
    return total;
}

} // namespace hawkes
