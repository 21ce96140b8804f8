#include "rss/quadrature.hpp"

#include <algorithm>
#include <stdexcept>

namespace rss {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int min_panels) {
  if (!(b > a)) return 0.0;
  min_panels = std::max(1, min_panels);
  const double h = (b - a) / min_panels;
  const double panel_tol = abs_tol / min_panels;
  double total = 0.0;
  double x0 = a;
  double f0 = f(x0);
  for (int i = 0; i < min_panels; ++i) {
    const double x1 = (i + 1 == min_panels) ? b : a + (i + 1) * h;
    const double xm = 0.5 * (x0 + x1);
    const double fm = f(xm);
    const double f1 = f(x1);
    const double whole = simpson(f0, fm, f1, x1 - x0);
    total += adapt(f, x0, x1, f0, fm, f1, whole, panel_tol, 48);
    x0 = x1;
    f0 = f1;
  }
  return total;
}

}  // namespace rss
