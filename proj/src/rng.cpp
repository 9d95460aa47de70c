#include "morseflow/rng.hpp"

#include <cmath>

namespace morseflow {

double Rng::uniform() {
    // 53 random bits into [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Mat Rng::gaussian_matrix(Field f, int rows, int cols) {
    Mat m(f, rows, cols);
    const int d = field_dim(f);
    for (auto& q : m.data()) {
        q.w = gaussian();
        if (d > 1) q.x = gaussian();
        if (d > 2) {
            q.y = gaussian();
            q.z = gaussian();
        }
    }
    return m;
}

}  // namespace morseflow
