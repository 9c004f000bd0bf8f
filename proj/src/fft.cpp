#include "fracwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace fracwave {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// FFTW's planner is not thread-safe; plan creation is serialized and plans
// are reused via fftw_execute_dft, which is safe on distinct arrays.
PlanPair& plans_for(const GridSpec& g) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(g.dim, g.n_per_axis);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<complex> scratch(g.size());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    int dims[3] = {g.n_per_axis, g.n_per_axis, g.n_per_axis};
    PlanPair p;
    p.fwd = fftw_plan_dft(g.dim, dims, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft(g.dim, dims, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    return cache.emplace(key, p).first->second;
}

} // namespace

void fft_forward(const GridSpec& g, std::vector<complex>& data) {
    auto& p = plans_for(g);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p.fwd, buf, buf);
}

void fft_inverse(const GridSpec& g, std::vector<complex>& data) {
    auto& p = plans_for(g);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p.bwd, buf, buf);
    const double inv = 1.0 / static_cast<double>(data.size());
    for (complex& z : data) z *= inv;
}

Field to_spectral(const Field& u) {
    Field out = u;
    fft_forward(out.grid, out.values);
    return out;
}

Field to_physical(const Field& uhat) {
    Field out = uhat;
    fft_inverse(out.grid, out.values);
    return out;
}

} // namespace fracwave
