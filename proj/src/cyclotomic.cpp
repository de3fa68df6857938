#include "gradedmf/cyclotomic.hpp"

#include <cmath>
#include <numbers>

namespace gmf {

std::complex<double> CyclotomicInt::to_complex() const {
    const double h = static_cast<double>(order());
    std::complex<double> z(0.0, 0.0);
    for (int m = 0; m < order(); ++m) {
        if (coeffs_[m] == 0) continue;
        double arg = 2.0 * std::numbers::pi * m / h;
        z += coeffs_[m].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

} // namespace gmf
