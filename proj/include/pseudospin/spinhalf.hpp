#pragma once

#include <array>
#include <optional>

#include "pseudospin/scattering.hpp"

//! Massless Dirac (pseudospin-1/2) scattering from the same circular step,
//! H = sigma.k + V0 Theta(R - r).
//!
//! Partial waves [J_l e^{i l theta}, i s J_{l+1} e^{i(l+1) theta}] i^l / sqrt2
//! carry total angular momentum j = l + 1/2; both spinor components are
//! continuous at r = R. Channel l and channel -l-1 are time-reversal
//! partners, so only l >= 0 is stored.
namespace pseudospin::spinhalf
{
using Spinor = std::array<cplx, 2>;

struct ChannelCoefficients
{
    cplx a;
    cplx b;
};

ChannelCoefficients channel_coefficients(ScatteringConfig const& config, int l);

PartialWaveSolution solve_half(ScatteringConfig const& config,
                               std::optional<int> l_max = std::nullopt);

cplx scattering_amplitude(PartialWaveSolution const& sol, double theta);

CrossSections cross_sections_half(PartialWaveSolution const& sol);

Spinor wavefunction(PartialWaveSolution const& sol, double r, double theta);
Spinor wavefunction_outside(PartialWaveSolution const& sol, double r,
                            double theta);
Spinor wavefunction_inside(PartialWaveSolution const& sol, double r,
                           double theta);

double density(Spinor const& psi);

//! <Psi| sigma |Psi> with v_F = 1.
std::array<double, 2> current(Spinor const& psi);

SpinorFieldGrid density_current(PartialWaveSolution const& sol,
                                GridSpec const& grid);
} // namespace pseudospin::spinhalf
