#include "vdcq/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "vdcq/residue.hpp"

namespace vdcq {

namespace {

constexpr std::size_t kDirectThreshold = 512;

// fftw_plan_dft_1d is not thread-safe; execution on the planned arrays is
// done while holding the same lock since plans are created per call.
std::mutex fftw_mutex;

std::vector<std::complex<double>> dft_direct(const std::vector<std::complex<double>>& in) {
    const std::size_t q = in.size();
    std::vector<std::complex<double>> roots(q);
    for (std::size_t j = 0; j < q; ++j)
        roots[j] = unit_phase(static_cast<long long>(q), static_cast<long long>(j));
    std::vector<std::complex<double>> out(q);
    for (std::size_t x = 0; x < q; ++x) {
        std::complex<double> acc = 0.0;
        std::size_t idx = 0;
        for (std::size_t n = 0; n < q; ++n) {
            acc += in[n] * roots[idx];
            idx += x;
            if (idx >= q) idx -= q;
        }
        out[x] = acc;
    }
    return out;
}

std::vector<std::complex<double>> dft_fftw(const std::vector<std::complex<double>>& in) {
    const std::size_t q = in.size();
    std::vector<std::complex<double>> out(q);
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_complex* buf_in = fftw_alloc_complex(q);
    fftw_complex* buf_out = fftw_alloc_complex(q);
    for (std::size_t n = 0; n < q; ++n) {
        buf_in[n][0] = in[n].real();
        buf_in[n][1] = in[n].imag();
    }
    // FFTW_BACKWARD carries the e^{+2 pi i} kernel.
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(q), buf_in, buf_out, FFTW_BACKWARD,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    for (std::size_t x = 0; x < q; ++x) out[x] = {buf_out[x][0], buf_out[x][1]};
    fftw_free(buf_in);
    fftw_free(buf_out);
    return out;
}

}  // namespace

std::vector<std::complex<double>> dft_pos(const std::vector<std::complex<double>>& in) {
    if (in.empty()) return {};
    if (in.size() < kDirectThreshold) return dft_direct(in);
    return dft_fftw(in);
}

std::vector<std::complex<double>> dft_unitary(const std::vector<std::complex<double>>& in) {
    auto out = dft_pos(in);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in.size()));
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace vdcq
