#pragma once

#include <complex>
#include <vector>

namespace vdcq {

// Unnormalized transform with positive kernel:
//   out[x] = sum_n in[n] * e^{+2 pi i n x / q},  q = in.size().
// Direct evaluation below q = 512, FFTW above.
std::vector<std::complex<double>> dft_pos(const std::vector<std::complex<double>>& in);

// Unitary variant: dft_pos scaled by 1/sqrt(q).
std::vector<std::complex<double>> dft_unitary(const std::vector<std::complex<double>>& in);

}  // namespace vdcq
