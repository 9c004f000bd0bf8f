#include "fracwave/grid.hpp"

#include <cmath>

namespace fracwave {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

GridSpec::GridSpec(int d, int n, double L) : dim(d), n_per_axis(n), box_length(L) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
    if (!power_of_two(n_per_axis) || n_per_axis < 16)
        throw std::invalid_argument("GridSpec: n_per_axis must be a power of two >= 16");
    if (!(box_length > 0.0))
        throw std::invalid_argument("GridSpec: box_length must be positive");
    if (size() > (std::size_t{1} << 27))
        throw std::invalid_argument("GridSpec: grid exceeds memory budget");
}

std::size_t GridSpec::size() const {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(n_per_axis);
    return s;
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing();
    return v;
}

double GridSpec::freq(int j) const {
    return 2.0 * M_PI * mode(j) / box_length;
}

Field::Field(const GridSpec& g, std::vector<complex> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
        throw std::invalid_argument("Field: value count does not match grid");
    for (const complex& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("Field: non-finite value");
}

double boundary_max_abs(const Field& u) {
    const GridSpec& g = u.grid;
    double m = 0.0;
    int ix[3];
    for (std::size_t i = 0; i < u.size(); ++i) {
        unravel(g, i, ix);
        bool on_face = false;
        for (int a = 0; a < g.dim; ++a)
            if (ix[a] == 0 || ix[a] == g.n_per_axis - 1) on_face = true;
        if (on_face) m = std::max(m, std::abs(u.values[i]));
    }
    return m;
}

double radius_at(const GridSpec& g, std::size_t idx) {
    int ix[3];
    unravel(g, idx, ix);
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        double x = g.coord(ix[a]);
        r2 += x * x;
    }
    return std::sqrt(r2);
}

} // namespace fracwave
