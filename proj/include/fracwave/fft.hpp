#pragma once

#include "fracwave/grid.hpp"

namespace fracwave {

// Unnormalized forward DFT (FFTW sign convention, e^{-i k x}), in place.
void fft_forward(const GridSpec& g, std::vector<complex>& data);

// Inverse DFT including the 1/size() normalization, in place.
void fft_inverse(const GridSpec& g, std::vector<complex>& data);

Field to_spectral(const Field& u);
Field to_physical(const Field& uhat);

} // namespace fracwave
