#pragma once

#include <functional>

namespace hawkes {

/// Globally adaptive Gauss-Kronrod (7-15) integration of f over [a, b]: the
/// panel with the worst embedded error estimate is bisected until the total
/// estimate is below abs_tol or the panel budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_panels = 4000);

} // namespace hawkes
