#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace relkit {

using cplx = std::complex<double>;

// Dense fixed-size complex matrix, value semantics, row major.
template <std::size_t N>
class ComplexMatrix {
public:
    ComplexMatrix() : e_{} {}

    ComplexMatrix(std::initializer_list<cplx> entries) : e_{} {
        if (entries.size() != N * N)
            throw std::invalid_argument("ComplexMatrix: wrong number of entries");
        std::size_t i = 0;
        for (const cplx& v : entries) e_[i++] = v;
    }

    static ComplexMatrix identity() {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static constexpr std::size_t size() { return N; }

    cplx& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return e_[r * N + c]; }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& a) {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.e_[i] = s * a.e_[i];
        return r;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const cplx& s) { return s * a; }

    bool operator==(const ComplexMatrix&) const = default;

    ComplexMatrix adjoint() const {
        ComplexMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    cplx trace() const {
        cplx t{};
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& v : e_) m = std::max(m, std::abs(v));
        return m;
    }

    bool all_finite() const {
        for (const cplx& v : e_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

private:
    std::array<cplx, N * N> e_;
};

using ComplexMatrix2 = ComplexMatrix<2>;
using ComplexMatrix4 = ComplexMatrix<4>;

template <std::size_t N>
double max_abs_diff(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
    return (a - b).max_abs();
}

// Deviation from the conjugate transpose; zero for a Hermitian matrix.
template <std::size_t N>
double hermiticity_defect(const ComplexMatrix<N>& a) {
    return max_abs_diff(a, a.adjoint());
}

// Assembles [[a, b], [c, d]] from 2x2 blocks.
ComplexMatrix4 from_blocks(const ComplexMatrix2& a, const ComplexMatrix2& b, const ComplexMatrix2& c,
                           const ComplexMatrix2& d);

}  // namespace relkit
