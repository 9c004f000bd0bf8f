#pragma once

#include "fracwave/grid.hpp"

#include <span>

namespace fracwave {

// Data-parallel inner loops used by the spectral operators and the
// propagator. Each kernel has a serial twin in kernels::serial used by the
// unit tests and the benchmark target. Reductions use fixed-size blocks
// accumulated in block order, so results do not depend on the thread count.

namespace kernels {

void multiply_symbol(std::span<complex> z, std::span<const double> sym);
void scale(std::span<complex> z, complex a);
// z_i <- e^{i * dt * |z_i|^{p-2}} * z_i
void nonlinear_phase(std::span<complex> z, double dt, double p);
// z_i <- e^{-i * dt * sym_i} * z_i
void linear_phase(std::span<complex> z, std::span<const double> sym, double dt);

double sum_abs2(std::span<const complex> z);
double sum_weighted_abs2(std::span<const complex> z, std::span<const double> w);
double sum_abs_pow(std::span<const complex> z, double p);
complex dot(std::span<const complex> a, std::span<const complex> b);

namespace serial {
void multiply_symbol(std::span<complex> z, std::span<const double> sym);
void nonlinear_phase(std::span<complex> z, double dt, double p);
void linear_phase(std::span<complex> z, std::span<const double> sym, double dt);
double sum_abs2(std::span<const complex> z);
double sum_weighted_abs2(std::span<const complex> z, std::span<const double> w);
double sum_abs_pow(std::span<const complex> z, double p);
complex dot(std::span<const complex> a, std::span<const complex> b);
} // namespace serial

} // namespace kernels

} // namespace fracwave
