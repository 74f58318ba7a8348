#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace relkit {

bool is_power_of_two(std::size_t n);

// Radix-2 FFT plan for a fixed power-of-two length: bit-reversal table and
// twiddle factors are computed once and reused across calls.
// forward() is unnormalized; inverse() carries the 1/n factor, so
// inverse(forward(x)) == x up to round-off.
class Fft {
public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }

    void forward(std::span<std::complex<double>> data) const;
    void inverse(std::span<std::complex<double>> data) const;

private:
    void transform(std::span<std::complex<double>> data, bool inverse) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddle_;  // exp(-2 pi i j / n), j < n/2
};

// One-shot conveniences for callers without a plan to reuse.
void fft_forward(std::span<std::complex<double>> data);
void fft_inverse(std::span<std::complex<double>> data);

}  // namespace relkit
