#include "qpsep/rng.hpp"

#include <cmath>

namespace qpsep::rng {

double GaussianSource::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = gen_.uniform01();
    while (u1 <= 0.0) {
        u1 = gen_.uniform01();
    }
    const double u2 = gen_.uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

} // namespace qpsep::rng
