#pragma once

#include <span>
#include <vector>

#include "lossywave/dispersion.hpp"

namespace lossywave {

/// Periodic-domain field stored as complex mode coefficients.
///
/// Normalization: analysis carries 1/N, synthesis carries 1, so coeff(0) is
/// the field mean. Storage is DFT order: index i holds signed mode i for
/// i < N/2 and i - N otherwise; signed modes span {-N/2, ..., N/2 - 1}.
struct SpectralField {
    double length = 0.0;
    std::vector<Complex> coeffs;

    int size() const { return static_cast<int>(coeffs.size()); }
    int mode_of_index(int i) const { return i < size() / 2 ? i : i - size(); }
    double wavenumber(int mode) const;

    /// mode in [-N/2, N/2 - 1]
    const Complex& coeff(int mode) const;
    Complex& coeff(int mode);
};

/// Forward transform, coeff(m) = (1/N) sum_j samples[j] exp(-i k_m x_j).
/// Direct O(N^2) summation; N even and >= 2.
SpectralField transform(std::span<const double> samples, double length);

/// Inverse transform, samples[j] = sum_m coeff(m) exp(+i k_m x_j).
std::vector<Complex> synthesize(const SpectralField& field);

}  // namespace lossywave
