#pragma once

#include <array>
#include <optional>
#include <utility>

#include "pseudospin/scattering.hpp"

//! Exact partial-wave scattering of a massless pseudospin-1 wave
//! (H = S.k + V0 Theta(R - r)) from a circular step potential.
//!
//! Cylindrical eigenstates of the conical bands are
//!   phi_l = [h_{l-1}(qr) e^{-i theta}, i sqrt2 s h_l(qr), -h_{l+1}(qr) e^{i theta}]
//!           e^{i l theta} / (2 sqrt(pi)),
//! with h = J for the regular wave and h = H^(1) for the outgoing wave. The
//! outside field is sum_l sqrt(pi) i^{l-1} [phi^(0) + A_l phi^(1)], the inside
//! field sum_l sqrt(pi) i^{l-1} B_l phi^(0) with band s' and wave number q.
//! At r = R only Psi_2 and Psi_1 e^{i theta} + Psi_3 e^{-i theta} are
//! continuous; Psi_1 and Psi_3 individually may jump.
namespace pseudospin::spin1
{
using Spinor = std::array<cplx, 3>;

struct ChannelCoefficients
{
    cplx a;
    cplx b;
};

//! Closed-form A_l and B_l for a single channel, any integer l.
ChannelCoefficients channel_coefficients(ScatteringConfig const& config, int l);

//! Solve for A_l, B_l with l = 0..l_max. Without an explicit l_max the
//! truncation starts at max(12, ceil(x) + 16) and grows until the tail
//! has converged.
PartialWaveSolution solve(ScatteringConfig const& config,
                          std::optional<int> l_max = std::nullopt);

cplx scattering_amplitude(PartialWaveSolution const& sol, double theta);

CrossSections cross_sections(PartialWaveSolution const& sol);

//! Field at polar point (r, theta) in units of R; r >= R uses the outside
//! expansion.
Spinor wavefunction(PartialWaveSolution const& sol, double r, double theta);

//! Outside expansion evaluated at any r > 0.
Spinor wavefunction_outside(PartialWaveSolution const& sol, double r,
                            double theta);

//! Inside expansion evaluated at any r >= 0.
Spinor wavefunction_inside(PartialWaveSolution const& sol, double r,
                           double theta);

double density(Spinor const& psi);

//! <Psi| (S_x, S_y) |Psi> with v_F = 1.
std::array<double, 2> current(Spinor const& psi);

SpinorFieldGrid density_current(PartialWaveSolution const& sol,
                                GridSpec const& grid);
} // namespace pseudospin::spin1
