#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pseudospin/scattering.hpp"

namespace pseudospin::resonance
{
struct Range
{
    double lo = 0.0;
    double hi = 0.0;
};

//! Cells with |x - rho| below this are masked in maps and sweeps.
inline constexpr double mask_threshold = 1e-6;

//! Exact cross sections for one (rho, x) point, incident band +1.
CrossSections exact(ParticleKind kind, double rho, double x);
double exact_transport(ParticleKind kind, double rho, double x);

enum class MarkerFamily
{
    j0_zero,
    j1_zero,
    revival
};

char const* to_string(MarkerFamily family);

struct Marker
{
    MarkerFamily family;
    double rho;
    double x;
};

//! log10(Sigma_tr / R) on the tensor grid; row ix, column ir is stored at
//! ix * rho_axis.size() + ir. Masked cells are empty.
struct ResonanceMap
{
    std::vector<double> rho_axis;
    std::vector<double> x_axis;
    std::vector<std::optional<double>> values;
    std::vector<Marker> markers;
    //! (rho, x) cells where the solver raised a domain error; left empty.
    std::vector<std::pair<double, double>> failed;

    std::optional<double> at(std::size_t ix, std::size_t ir) const
    {
        return values[ix * rho_axis.size() + ir];
    }
};

//! Equally spaced axis with n nodes including both ends (midpoint if n = 1).
std::vector<double> linear_axis(Range r, int n);
//! Geometrically spaced axis; needs 0 < lo < hi.
std::vector<double> log_axis(Range r, int n);

//! Marker curves: J0 zeros shifted by -x ln(gamma_E x/2), J1 zeros + x and
//! the revival root, sampled at every x of the axis and kept when the
//! marker lies inside the rho window.
std::vector<Marker> theory_markers(Range rho, std::vector<double> const& x_axis);

ResonanceMap map(Range rho, Range x, int n_rho, int n_x, ParticleKind kind);

struct Peak
{
    double x_peak = 0.0;
    double height = 0.0;
    double fwhm = 0.0;
    double quality = 0.0; //!< height / median of the sweep
};

struct Maximum
{
    double x = 0.0;
    double height = 0.0;
};

//! Largest transport over a log-spaced x grid, refined by golden section
//! when the grid maximum is interior.
Maximum sweep_max(double rho, Range x, ParticleKind kind, int n = 2000);

//! Resonance in a log-spaced x sweep. Throws NoPeak when the maximum sits
//! on the sweep boundary or is below twice the median.
Peak sweep_peak(double rho, Range x, ParticleKind kind, int n = 2000);

//! sweep_max over x in [rho/100, rho (1 - 1e-4)] for each rho.
std::vector<std::pair<double, double>>
max_vs_strength(std::vector<double> const& rhos, ParticleKind kind,
                int n = 2000);

//! rho of the largest transport at fixed x, scanning a log-spaced rho grid.
double ridge_crest(double x, Range rho, ParticleKind kind, int n = 2000);

//! Local maxima of transport along rho at fixed x that exceed twice the
//! median; peaks are reported with x_peak holding the rho position.
std::vector<Peak> rho_scan_peaks(double x, Range rho, ParticleKind kind,
                                 int n = 50001);
} // namespace pseudospin::resonance
