#pragma once

#include "fracwave/grid.hpp"

#include <cmath>
#include <random>

namespace fracwave::testutil {

// Smooth decaying random field: Gaussian envelope times a low-order random
// trigonometric polynomial. Decays far below 1e-10 at the box faces.
inline Field random_decaying_field(const GridSpec& g, std::mt19937_64& rng,
                                   double width = 2.0, bool complex_valued = false) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    constexpr int kModes = 3;
    double cr[kModes + 1][3], ci[kModes + 1][3];
    for (int m = 0; m <= kModes; ++m)
        for (int a = 0; a < 3; ++a) {
            cr[m][a] = coef(rng);
            ci[m][a] = complex_valued ? coef(rng) : 0.0;
        }

    Field u(g);
    int ix[3];
    for (std::size_t i = 0; i < u.size(); ++i) {
        unravel(g, i, ix);
        double r2 = 0.0;
        double re = 0.3 * cr[0][0], im = 0.3 * ci[0][0];
        for (int a = 0; a < g.dim; ++a) {
            const double x = g.coord(ix[a]);
            r2 += x * x;
            for (int m = 1; m <= kModes; ++m) {
                re += cr[m][a] * std::cos(2.0 * M_PI * m * x / g.box_length * 4.0);
                im += ci[m][a] * std::sin(2.0 * M_PI * m * x / g.box_length * 4.0);
            }
        }
        const double env = std::exp(-0.5 * r2 / (width * width));
        u.values[i] = env * complex(re + 1.0, im);
    }
    return u;
}

inline Field gaussian(const GridSpec& g, double width = 1.0, double amp = 1.0) {
    Field u(g);
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = radius_at(g, i);
        u.values[i] = amp * std::exp(-0.5 * r * r / (width * width));
    }
    return u;
}

inline Field sech_soliton(const GridSpec& g) {
    Field u(g);
    for (int j = 0; j < g.n_per_axis; ++j)
        u.values[static_cast<std::size_t>(j)] = std::sqrt(2.0) / std::cosh(g.coord(j));
    return u;
}

inline Field plane_wave_unit_mass(const GridSpec& g, int k) {
    Field u(g);
    const double amp = 1.0 / std::sqrt(std::pow(g.box_length, g.dim));
    int ix[3];
    for (std::size_t i = 0; i < u.size(); ++i) {
        unravel(g, i, ix);
        // wave along the first axis only
        const double phase = 2.0 * M_PI * k * g.coord(ix[0]) / g.box_length;
        u.values[i] = amp * complex(std::cos(phase), std::sin(phase));
    }
    return u;
}

} // namespace fracwave::testutil
