// Timing comparison between the OpenMP kernels and their serial reference.
#include "fracwave/kernels.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

using namespace fracwave;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
    // warm up
    f();
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

} // namespace

int main() {
    const std::size_t n = 1 << 22;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<complex> z(n), z2(n);
    std::vector<double> sym(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = complex(dist(rng), dist(rng));
        sym[i] = std::abs(dist(rng));
    }
    const int reps = 10;

    std::printf("kernel benchmark, n = %zu, omp threads = %d\n", n, omp_get_max_threads());
    std::printf("%-22s %12s %12s\n", "kernel", "omp [ms]", "serial [ms]");

    z2 = z;
    double t_omp = time_ms([&] { kernels::multiply_symbol(z2, sym); }, reps);
    z2 = z;
    double t_ser = time_ms([&] { kernels::serial::multiply_symbol(z2, sym); }, reps);
    std::printf("%-22s %12.3f %12.3f\n", "multiply_symbol", t_omp, t_ser);

    z2 = z;
    t_omp = time_ms([&] { kernels::nonlinear_phase(z2, 1e-3, 4.0); }, reps);
    z2 = z;
    t_ser = time_ms([&] { kernels::serial::nonlinear_phase(z2, 1e-3, 4.0); }, reps);
    std::printf("%-22s %12.3f %12.3f\n", "nonlinear_phase", t_omp, t_ser);

    z2 = z;
    t_omp = time_ms([&] { kernels::linear_phase(z2, sym, 1e-3); }, reps);
    z2 = z;
    t_ser = time_ms([&] { kernels::serial::linear_phase(z2, sym, 1e-3); }, reps);
    std::printf("%-22s %12.3f %12.3f\n", "linear_phase", t_omp, t_ser);

    volatile double sink = 0.0;
    t_omp = time_ms([&] { sink = kernels::sum_abs2(z); }, reps);
    t_ser = time_ms([&] { sink = kernels::serial::sum_abs2(z); }, reps);
    std::printf("%-22s %12.3f %12.3f\n", "sum_abs2", t_omp, t_ser);

    t_omp = time_ms([&] { sink = kernels::sum_weighted_abs2(z, sym); }, reps);
    t_ser = time_ms([&] { sink = kernels::serial::sum_weighted_abs2(z, sym); }, reps);
    std::printf("%-22s %12.3f %12.3f\n", "sum_weighted_abs2", t_omp, t_ser);

    t_omp = time_ms([&] { sink = kernels::sum_abs_pow(z, 4.0); }, reps);
    t_ser = time_ms([&] { sink = kernels::serial::sum_abs_pow(z, 4.0); }, reps);
    std::printf("%-22s %12.3f %12.3f\n", "sum_abs_pow", t_omp, t_ser);
    (void)sink;
    return 0;
}
