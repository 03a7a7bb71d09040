#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace pseudospin
{
using cplx = std::complex<double>;

enum class ParticleKind
{
    spin1,
    spinhalf
};

//! Scatterer and incident wave in natural units (hbar v_F = 1, R = 1).
struct ScatteringConfig
{
    double rho = 0.0; //!< barrier strength V0 R
    double x = 0.0;   //!< size parameter k R
    int band = +1;    //!< sign of the incident energy, +1 or -1
};

//! |E - V0| below this makes the interior wave vector vanish.
inline constexpr double degeneracy_threshold = 1e-10;

//! Wave inside the barrier: q R = |E - V0| and s' = sign(E - V0).
struct InteriorWave
{
    double q;
    int band;
};

//! Validate a configuration and derive its interior wave.
//! Throws DomainError for x <= 0 or a bad band index, FlatBandDegenerate
//! when the interior wave vector vanishes.
InteriorWave interior_wave(ScatteringConfig const& config);

//! Partial-wave coefficients for channels l = 0..l_max.
//!
//! Negative channels are never stored. For spin-1 they follow from
//! A_{-l} = A_l, B_{-l} = B_l; for spin-1/2 the total angular momentum
//! j = l + 1/2 pairs with -j, giving A_{-l-1} = A_l and
//! B_{-l-1} = s s' B_l.
struct PartialWaveSolution
{
    ParticleKind kind = ParticleKind::spin1;
    ScatteringConfig config;
    InteriorWave interior{};
    std::vector<cplx> a; //!< reflection coefficients A_l
    std::vector<cplx> b; //!< transmission coefficients B_l

    int l_max() const { return static_cast<int>(a.size()) - 1; }

    //! A_l for any integer l, zero beyond the stored truncation.
    cplx a_at(int l) const;
    //! B_l for any integer l, zero beyond the stored truncation.
    cplx b_at(int l) const;
};

//! Cross sections in units of R.
struct CrossSections
{
    double total = 0.0;
    double transport = 0.0;
    //! dSigma/dtheta / R = |f(theta)|^2 / R
    std::function<double(double)> differential;
};

//! Rectangular sampling window in units of R; points are the tensor
//! product of nx and ny equally spaced nodes including the end points.
struct GridSpec
{
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
    int nx = 16;
    int ny = 16;

    double x_at(int i) const;
    double y_at(int j) const;
};

//! Spinor field sampled on a grid; point (i, j) is stored at j * nx + i.
struct SpinorFieldGrid
{
    GridSpec grid;
    int components = 3;
    std::vector<cplx> psi; //!< components consecutive per point
    std::vector<double> density;
    std::vector<std::array<double, 2>> current;
    //! 1 where |r - R| < 1e-9 (evaluated with the outside expansion)
    std::vector<std::uint8_t> on_interface;

    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx)
               + static_cast<std::size_t>(i);
    }
    cplx component(int i, int j, int c) const
    {
        return psi[index(i, j) * static_cast<std::size_t>(components)
                   + static_cast<std::size_t>(c)];
    }
};

//! Points within this distance of r = R are flagged as interface points.
inline constexpr double interface_tolerance = 1e-9;

namespace detail
{
//! f(theta) = -i sqrt(2/(pi k)) sum_l A_l e^{i l theta}, summed over all
//! integer l using the kind's channel folding.
cplx scattering_amplitude(PartialWaveSolution const& sol, double theta);

//! Coefficient sums (4/x) sum_l |A_l|^2 and the transport counterpart.
CrossSections cross_sections(PartialWaveSolution const& sol);

//! Number of channels needed to converge a J_l(z) sum to double precision.
int channels_for_argument(double z);

//! Hard cap on adaptive channel growth.
inline constexpr int max_channels = 400;

//! Starting truncation max(12, ceil(x) + 16).
int initial_l_max(double x);

//! Tail test for adaptive truncation: the last two stored coefficients are
//! below 1e-14 and J_{l_max}(x) is below 1e-15, so the interior expansion
//! (whose channels scale like J_l(x)) has converged as well.
bool tail_converged(std::vector<cplx> const& a, double j_at_l_max);
} // namespace detail
} // namespace pseudospin
