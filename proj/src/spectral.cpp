#include "lossywave/spectral.hpp"

#include <cmath>
#include <numbers>

#include "lossywave/errors.hpp"

namespace lossywave {

namespace {

void check_size(std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw SizeError("sample count must be even and >= 2");
    }
}

// e^{-2 pi i j / N} for j = 0..N-1; both transform directions index into
// this table so forward/inverse kernels are exact conjugates.
std::vector<Complex> twiddle_table(int n) {
    std::vector<Complex> w(n);
    for (int j = 0; j < n; ++j) {
        const double angle = -2.0 * std::numbers::pi * j / n;
        w[j] = Complex(std::cos(angle), std::sin(angle));
    }
    return w;
}

}  // namespace

double SpectralField::wavenumber(int mode) const {
    return 2.0 * std::numbers::pi * mode / length;
}

const Complex& SpectralField::coeff(int mode) const {
    const int n = size();
    return coeffs[static_cast<std::size_t>(mode < 0 ? mode + n : mode)];
}

Complex& SpectralField::coeff(int mode) {
    const int n = size();
    return coeffs[static_cast<std::size_t>(mode < 0 ? mode + n : mode)];
}

SpectralField transform(std::span<const double> samples, double length) {
    check_size(samples.size());
    if (!std::isfinite(length) || length <= 0.0) {
        throw InvalidParameterError("domain length must be finite and > 0");
    }
    const int n = static_cast<int>(samples.size());
    const auto w = twiddle_table(n);

    SpectralField field;
    field.length = length;
    field.coeffs.resize(n);
    for (int m = 0; m < n; ++m) {
        Complex sum(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            sum += samples[static_cast<std::size_t>(j)] *
                   w[static_cast<std::size_t>(static_cast<long>(m) * j % n)];
        }
        field.coeffs[static_cast<std::size_t>(m)] = sum / static_cast<double>(n);
    }
    return field;
}

std::vector<Complex> synthesize(const SpectralField& field) {
    const int n = field.size();
    check_size(static_cast<std::size_t>(n));
    const auto w = twiddle_table(n);

    std::vector<Complex> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Complex sum(0.0, 0.0);
        for (int m = 0; m < n; ++m) {
            sum += field.coeffs[static_cast<std::size_t>(m)] *
                   std::conj(w[static_cast<std::size_t>(static_cast<long>(m) * j % n)]);
        }
        samples[static_cast<std::size_t>(j)] = sum;
    }
    return samples;
}

}  // namespace lossywave
