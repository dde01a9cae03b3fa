#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bsep {

using Cpx = std::complex<double>;

namespace detail {

template <typename T>
T simpson_step(const std::function<T(double)>& f, double a, double b, T fa, T fm, T fb,
               double tol, int depth, T whole) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const T flm = f(lm), frm = f(rm);
    const T left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
    const T right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
    const T sum = left + right;
    if (depth <= 0 || std::abs(sum - whole) <= 15.0 * tol) {
        return sum + (sum - whole) / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1, left) +
           simpson_step(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1, right);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction. Works for real and complex
// integrands; tol is absolute.
template <typename T>
T adaptive_simpson(const std::function<T(double)>& f, double a, double b, double tol = 1e-10,
                   int max_depth = 30) {
    if (!(a < b)) {
        if (a == b) return T{};
        throw std::invalid_argument("adaptive_simpson: a > b");
    }
    const T fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const T whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
    return detail::simpson_step<T>(f, a, b, fa, fm, fb, tol, max_depth, whole);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10) {
    return adaptive_simpson<double>(f, a, b, tol);
}

inline Cpx integrate_complex(const std::function<Cpx(double)>& f, double a, double b,
                             double tol = 1e-10) {
    return adaptive_simpson<Cpx>(f, a, b, tol);
}

// Gauss-Legendre nodes/weights on [-1,1], orders used by the 2D engines.
struct GaussRule {
    std::vector<double> nodes, weights;
};

inline const GaussRule& gauss_rule(int order) {
    static const GaussRule g4{{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526},
                              {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538}};
    static const GaussRule g8{
        {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
         0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363},
        {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
         0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763}};
    if (order <= 4) return g4;
    return g8;
}

}  // namespace bsep
