#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracwave {

using complex = std::complex<double>;

// Periodic box [-L/2, L/2)^dim sampled on n points per axis.
// Mode k along an axis carries frequency 2*pi*k/L, k in {-n/2,...,n/2-1}.
struct GridSpec {
    int dim = 1;
    int n_per_axis = 1024;
    double box_length = 80.0;

    GridSpec() = default;
    GridSpec(int d, int n, double L);

    std::size_t size() const;
    double spacing() const { return box_length / n_per_axis; }
    double cell_volume() const;

    // Physical coordinate of sample j along one axis.
    double coord(int j) const { return -0.5 * box_length + j * spacing(); }

    // Frequency of DFT bin j (0 <= j < n), with bins above n/2 wrapped
    // to negative k. The Nyquist bin maps to k = -n/2.
    double freq(int j) const;

    // Signed mode index of bin j.
    int mode(int j) const {
        return j < n_per_axis / 2 ? j : j - n_per_axis;
    }

    bool operator==(const GridSpec&) const = default;
};

struct Field {
    GridSpec grid;
    std::vector<complex> values;
    // Set when an operation detected insufficient decay at the box boundary.
    bool boundary_warning = false;

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), values(g.size()) {}
    Field(const GridSpec& g, std::vector<complex> v);

    std::size_t size() const { return values.size(); }
};

// Decompose a flat row-major index into per-axis indices.
inline void unravel(const GridSpec& g, std::size_t idx, int out[3]) {
    const int n = g.n_per_axis;
    out[0] = out[1] = out[2] = 0;
    for (int a = g.dim - 1; a >= 0; --a) {
        out[a] = static_cast<int>(idx % n);
        idx /= n;
    }
}

// Largest |u| on the boundary faces of the box.
double boundary_max_abs(const Field& u);

// Radius of the sample point with flat index idx, measured from the box center.
double radius_at(const GridSpec& g, std::size_t idx);

} // namespace fracwave
