#include "fracwave/spectral.hpp"

#include "fracwave/fft.hpp"
#include "fracwave/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace fracwave {

namespace {

void check_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

std::vector<double> axis_freqs(const GridSpec& g) {
    std::vector<double> f(static_cast<std::size_t>(g.n_per_axis));
    for (int j = 0; j < g.n_per_axis; ++j) f[static_cast<std::size_t>(j)] = g.freq(j);
    return f;
}

} // namespace

SpectralMultiplier build_fractional_symbol(const GridSpec& g, double s) {
    if (!(s > 0.0) || s > 1.0)
        throw std::invalid_argument("fractional order s must lie in (0, 1]");
    const auto f = axis_freqs(g);
    SpectralMultiplier m{g, std::vector<double>(g.size())};
    int ix[3];
    for (std::size_t i = 0; i < m.symbol.size(); ++i) {
        unravel(g, i, ix);
        double xi2 = 0.0;
        for (int a = 0; a < g.dim; ++a) xi2 += f[static_cast<std::size_t>(ix[a])] * f[static_cast<std::size_t>(ix[a])];
        m.symbol[i] = xi2 == 0.0 ? 0.0 : std::pow(xi2, s);
    }
    return m;
}

SpectralMultiplier build_mixed_symbol(const GridSpec& g, double s1, double s2, double shift) {
    SpectralMultiplier m = build_fractional_symbol(g, s1);
    const SpectralMultiplier m2 = build_fractional_symbol(g, s2);
    for (std::size_t i = 0; i < m.symbol.size(); ++i) m.symbol[i] += m2.symbol[i] + shift;
    return m;
}

Field apply_multiplier(const Field& u, const SpectralMultiplier& m) {
    check_same_grid(u.grid, m.grid);
    Field out = u;
    fft_forward(out.grid, out.values);
    kernels::multiply_symbol(out.values, m.symbol);
    fft_inverse(out.grid, out.values);
    return out;
}

double mass(const Field& u) {
    return u.grid.cell_volume() * kernels::sum_abs2(u.values);
}

double seminorm_sq(const Field& u, double s) {
    return seminorm_sq(u, build_fractional_symbol(u.grid, s));
}

double seminorm_sq(const Field& u, const SpectralMultiplier& m) {
    check_same_grid(u.grid, m.grid);
    Field uhat = to_spectral(u);
    const double scale = u.grid.cell_volume() / static_cast<double>(u.size());
    return scale * kernels::sum_weighted_abs2(uhat.values, m.symbol);
}

double norm_lp(const Field& u, double p) {
    if (p < 1.0) throw std::invalid_argument("norm_lp: p must be >= 1");
    return std::pow(lp_integral(u, p), 1.0 / p);
}

double lp_integral(const Field& u, double p) {
    return u.grid.cell_volume() * kernels::sum_abs_pow(u.values, p);
}

double norm_linf(const Field& u) {
    double m = 0.0;
    for (const complex& z : u.values) m = std::max(m, std::abs(z));
    return m;
}

complex inner_product(const Field& u, const Field& v) {
    check_same_grid(u.grid, v.grid);
    return u.grid.cell_volume() * kernels::dot(u.values, v.values);
}

Field dilate(const Field& u, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("dilate: t must be positive");
    const GridSpec& g = u.grid;
    Field out = u;
    const double linf = norm_linf(u);
    if (boundary_max_abs(u) > 1e-10 * std::max(1.0, linf)) out.boundary_warning = true;
    if (t == 1.0) return out;

    const int n = g.n_per_axis;
    // Band-limited evaluation matrix: row j evaluates the interpolant at the
    // stretched point t*x_j. The Nyquist mode is evaluated as a cosine so real
    // inputs stay real.
    std::vector<complex> E(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        // Stretched points outside the fundamental domain read zero rather
        // than wrapping around the torus; the input is assumed decaying.
        if (std::abs(t * g.coord(j)) >= 0.5 * g.box_length) continue;
        const double y = t * g.coord(j) + 0.5 * g.box_length;
        for (int k = 0; k < n; ++k) {
            const double xi = g.freq(k);
            complex v;
            if (g.mode(k) == -n / 2)
                v = std::cos(xi * y);
            else
                v = complex(std::cos(xi * y), std::sin(xi * y));
            E[static_cast<std::size_t>(j) * n + k] = v / static_cast<double>(n);
        }
    }

    fft_forward(g, out.values);
    std::vector<complex> tmp(out.values.size());
    // Contract one axis at a time against E.
    std::size_t stride = 1;
    for (int a = g.dim - 1; a >= 0; --a) {
        const std::size_t outer = out.values.size() / (static_cast<std::size_t>(n) * stride);
        std::fill(tmp.begin(), tmp.end(), complex(0.0));
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t o = 0; o < static_cast<std::ptrdiff_t>(outer); ++o) {
            const std::size_t base = static_cast<std::size_t>(o) * n * stride;
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    const complex e = E[static_cast<std::size_t>(j) * n + k];
                    const complex* src = &out.values[base + static_cast<std::size_t>(k) * stride];
                    complex* dst = &tmp[base + static_cast<std::size_t>(j) * stride];
                    for (std::size_t s = 0; s < stride; ++s) dst[s] += e * src[s];
                }
            }
        }
        out.values.swap(tmp);
        stride *= static_cast<std::size_t>(n);
    }

    const double amp = std::pow(t, 0.5 * g.dim);
    kernels::scale(out.values, amp);
    return out;
}

Field derivative(const Field& u, int axis) {
    if (axis < 0 || axis >= u.grid.dim) throw std::invalid_argument("derivative: bad axis");
    const GridSpec& g = u.grid;
    Field out = to_spectral(u);
    int ix[3];
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        unravel(g, i, ix);
        const int k = ix[axis];
        if (g.mode(k) == -g.n_per_axis / 2)
            out.values[i] = 0.0; // odd derivative: drop the Nyquist mode
        else
            out.values[i] *= complex(0.0, g.freq(k));
    }
    fft_inverse(g, out.values);
    return out;
}

void dealias(Field& u) {
    const GridSpec& g = u.grid;
    const int kmax = g.n_per_axis / 3;
    fft_forward(g, u.values);
    int ix[3];
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        unravel(g, i, ix);
        for (int a = 0; a < g.dim; ++a)
            if (std::abs(g.mode(ix[a])) > kmax) {
                u.values[i] = 0.0;
                break;
            }
    }
    fft_inverse(g, u.values);
}

Field recenter(const Field& u) {
    const GridSpec& g = u.grid;
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double a = std::abs(u.values[i]);
        if (a > best) {
            best = a;
            imax = i;
        }
    }
    int peak[3];
    unravel(g, imax, peak);
    const int n = g.n_per_axis;
    int shift[3] = {0, 0, 0};
    for (int a = 0; a < g.dim; ++a) shift[a] = ((n / 2 - peak[a]) % n + n) % n;

    Field out(g);
    out.boundary_warning = u.boundary_warning;
    int ix[3];
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        unravel(g, i, ix);
        std::size_t j = 0;
        for (int a = 0; a < g.dim; ++a) j = j * static_cast<std::size_t>(n) + static_cast<std::size_t>((ix[a] + shift[a]) % n);
        out.values[j] = u.values[i];
    }
    return out;
}

Field operator+(const Field& a, const Field& b) {
    check_same_grid(a.grid, b.grid);
    Field out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

Field operator-(const Field& a, const Field& b) {
    check_same_grid(a.grid, b.grid);
    Field out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

Field operator*(complex a, const Field& u) {
    Field out = u;
    kernels::scale(out.values, a);
    return out;
}

} // namespace fracwave
