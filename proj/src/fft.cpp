#include "relkit/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace relkit {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Fft::Fft(std::size_t n) : n_(n) {
    if (!is_power_of_two(n) || n < 2)
        throw std::invalid_argument("Fft: length must be a power of two >= 2");

    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        bitrev_[i] = r;
    }

    twiddle_.resize(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j)
        twiddle_[j] = std::polar(1.0, -2.0 * std::numbers::pi * double(j) / double(n));
}

void Fft::transform(std::span<std::complex<double>> data, bool inverse) const {
    if (data.size() != n_) throw std::invalid_argument("Fft: data length does not match plan");

    for (std::size_t i = 0; i < n_; ++i)
        if (bitrev_[i] > i) std::swap(data[i], data[bitrev_[i]]);

    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t stride = n_ / len;
        for (std::size_t block = 0; block < n_; block += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> w = twiddle_[j * stride];
                if (inverse) w = std::conj(w);
                const std::complex<double> u = data[block + j];
                const std::complex<double> v = data[block + j + len / 2] * w;
                data[block + j] = u + v;
                data[block + j + len / 2] = u - v;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / double(n_);
        for (auto& x : data) x *= scale;
    }
}

void Fft::forward(std::span<std::complex<double>> data) const { transform(data, false); }
void Fft::inverse(std::span<std::complex<double>> data) const { transform(data, true); }

void fft_forward(std::span<std::complex<double>> data) { Fft(data.size()).forward(data); }
void fft_inverse(std::span<std::complex<double>> data) { Fft(data.size()).inverse(data); }

}  // namespace relkit
