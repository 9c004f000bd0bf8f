#include "fracwave/kernels.hpp"

#include <cmath>

namespace fracwave::kernels {

namespace {
constexpr std::ptrdiff_t kBlock = 4096;

template <class F>
double block_reduce(std::ptrdiff_t n, F&& per_block) {
    const std::ptrdiff_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
        const std::ptrdiff_t lo = b * kBlock;
        const std::ptrdiff_t hi = std::min(lo + kBlock, n);
        partial[static_cast<std::size_t>(b)] = per_block(lo, hi);
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}
} // namespace

void multiply_symbol(std::span<complex> z, std::span<const double> sym) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(z.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) z[i] *= sym[i];
}

void scale(std::span<complex> z, complex a) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(z.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) z[i] *= a;
}

void nonlinear_phase(std::span<complex> z, double dt, double p) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(z.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double a = std::abs(z[i]);
        const double phase = dt * std::pow(a, p - 2.0);
        z[i] *= complex(std::cos(phase), std::sin(phase));
    }
}

void linear_phase(std::span<complex> z, std::span<const double> sym, double dt) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(z.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double phase = -dt * sym[i];
        z[i] *= complex(std::cos(phase), std::sin(phase));
    }
}

double sum_abs2(std::span<const complex> z) {
    return block_reduce(static_cast<std::ptrdiff_t>(z.size()),
                        [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
                            double s = 0.0;
                            for (std::ptrdiff_t i = lo; i < hi; ++i) s += std::norm(z[i]);
                            return s;
                        });
}

double sum_weighted_abs2(std::span<const complex> z, std::span<const double> w) {
    return block_reduce(static_cast<std::ptrdiff_t>(z.size()),
                        [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
                            double s = 0.0;
                            for (std::ptrdiff_t i = lo; i < hi; ++i) s += w[i] * std::norm(z[i]);
                            return s;
                        });
}

double sum_abs_pow(std::span<const complex> z, double p) {
    return block_reduce(static_cast<std::ptrdiff_t>(z.size()),
                        [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
                            double s = 0.0;
                            for (std::ptrdiff_t i = lo; i < hi; ++i)
                                s += std::pow(std::abs(z[i]), p);
                            return s;
                        });
}

complex dot(std::span<const complex> a, std::span<const complex> b) {
    double re = block_reduce(static_cast<std::ptrdiff_t>(a.size()),
                             [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
                                 double s = 0.0;
                                 for (std::ptrdiff_t i = lo; i < hi; ++i)
                                     s += std::real(std::conj(a[i]) * b[i]);
                                 return s;
                             });
    double im = block_reduce(static_cast<std::ptrdiff_t>(a.size()),
                             [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
                                 double s = 0.0;
                                 for (std::ptrdiff_t i = lo; i < hi; ++i)
                                     s += std::imag(std::conj(a[i]) * b[i]);
                                 return s;
                             });
    return {re, im};
}

namespace serial {

void multiply_symbol(std::span<complex> z, std::span<const double> sym) {
    for (std::size_t i = 0; i < z.size(); ++i) z[i] *= sym[i];
}

void nonlinear_phase(std::span<complex> z, double dt, double p) {
    for (complex& v : z) {
        const double phase = dt * std::pow(std::abs(v), p - 2.0);
        v *= complex(std::cos(phase), std::sin(phase));
    }
}

void linear_phase(std::span<complex> z, std::span<const double> sym, double dt) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double phase = -dt * sym[i];
        z[i] *= complex(std::cos(phase), std::sin(phase));
    }
}

double sum_abs2(std::span<const complex> z) {
    double s = 0.0;
    for (const complex& v : z) s += std::norm(v);
    return s;
}

double sum_weighted_abs2(std::span<const complex> z, std::span<const double> w) {
    double s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) s += w[i] * std::norm(z[i]);
    return s;
}

double sum_abs_pow(std::span<const complex> z, double p) {
    double s = 0.0;
    for (const complex& v : z) s += std::pow(std::abs(v), p);
    return s;
}

complex dot(std::span<const complex> a, std::span<const complex> b) {
    complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace serial

} // namespace fracwave::kernels
