#pragma once

#include <optional>

#include "tfa/grid.hpp"

namespace tfa {

// amplitude * exp(2 pi i xi0 t_k). amplitude 0 rejected.
Signal gen_tone(const Grid& grid, double xi0, cd amplitude = cd(1.0, 0.0));

// exp(-pi a t^2 + 2 pi b t + c)
Signal gen_gaussian(const Grid& grid, const GaussianParams& p);

// exp(pi i rate t^2) * optional gaussian envelope
Signal gen_chirp(const Grid& grid, const ChirpParams& p,
                 const std::optional<GaussianParams>& envelope = std::nullopt);

// deterministic pseudo-random spectrum on the DFT bins inside [xi_lo, xi_hi],
// zero elsewhere, transformed to the time domain. same seed -> identical bits.
// band width is capped at half the Nyquist range so the wigner oversampling
// products stay alias-free.
Signal gen_bandlimited(const Grid& grid, double xi_lo, double xi_hi, unsigned long long seed);

}  // namespace tfa
