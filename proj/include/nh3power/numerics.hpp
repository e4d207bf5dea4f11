#ifndef NH3POWER_NUMERICS_HPP
#define NH3POWER_NUMERICS_HPP

#include <functional>
#include <vector>

namespace nh3power::numerics {

// Brent root finder on [a, b]; f(a) and f(b) must bracket a root.
// Converges to |b-a| <= xtol + rtol*|x| or |f| <= ftol.
double brent(const std::function<double(double)>& f, double a, double b, double xtol,
             double rtol = 1e-14, double ftol = 0.0, int max_iter = 200);

// Monotone-preserving piecewise cubic interpolant (Fritsch-Carlson).
// Knots must be strictly increasing.
class Pchip {
  public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }
    const std::vector<double>& knots_x() const { return x_; }
    const std::vector<double>& knots_y() const { return y_; }

  private:
    std::vector<double> x_, y_, d_; // knots and endpoint slopes
};

} // namespace nh3power::numerics

#endif
