#pragma once

#include "fracwave/grid.hpp"

namespace fracwave {

// Real Fourier symbol m(xi), one value per mode, row-major like Field.
struct SpectralMultiplier {
    GridSpec grid;
    std::vector<double> symbol;
};

// Symbol |xi|^{2s} of the fractional Laplacian (-Delta)^s; s = 1 gives the
// classical Laplacian, admitted for validation.
SpectralMultiplier build_fractional_symbol(const GridSpec& g, double s);

// Sum of two fractional symbols plus a constant, i.e. the symbol of
// (-Delta)^{s1} + (-Delta)^{s2} + shift.
SpectralMultiplier build_mixed_symbol(const GridSpec& g, double s1, double s2,
                                      double shift = 0.0);

Field apply_multiplier(const Field& u, const SpectralMultiplier& m);

double mass(const Field& u);
// || (-Delta)^{s/2} u ||_2^2 via the Parseval sum.
double seminorm_sq(const Field& u, double s);
double seminorm_sq(const Field& u, const SpectralMultiplier& m);
// (integral of |u|^p)^{1/p}
double norm_lp(const Field& u, double p);
// integral of |u|^p (no root), the nonlinear term of the energy.
double lp_integral(const Field& u, double p);
double norm_linf(const Field& u);

// L2 inner product <u, v> = integral of conj(u) v.
complex inner_product(const Field& u, const Field& v);

// u_t(x) = t^{N/2} u(t x) by band-limited (trigonometric) evaluation at the
// stretched sample points. Sets boundary_warning when u does not decay below
// 1e-10 at the box faces.
Field dilate(const Field& u, double t);

// Spectral partial derivative along one axis (Nyquist mode zeroed).
Field derivative(const Field& u, int axis);

// Zero all modes with |k| > n/3 along any axis (2/3 de-aliasing rule).
void dealias(Field& u);

// Circularly shift so the density maximum sits at the grid center.
Field recenter(const Field& u);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(complex a, const Field& u);

} // namespace fracwave
