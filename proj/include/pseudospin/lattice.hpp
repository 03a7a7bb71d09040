#pragma once

#include <array>
#include <string>
#include <vector>

//! Three-band tight-binding model of a waveguide array whose middle site
//! couples to its x neighbour with kappa_x and its y neighbour with kappa_y.
//!
//! The bands are beta0 and beta0 +- 2 sqrt(kx^2 cos^2(kx/2) + ky^2 cos^2(ky/2)).
//! The conical intersection with the flat band sits at k = (pi, pi) for unit
//! lattice constant (not at the zone centre, where photonic crystals with
//! an accidental degeneracy place it).
namespace pseudospin::lattice
{
struct TBParams
{
    double beta0 = 0.0;
    double kappa_x = 1.0;
    double kappa_y = 1.0;
};

struct KPoint
{
    double kx = 0.0;
    double ky = 0.0;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

//! Real symmetric (hence Hermitian) Bloch Hamiltonian.
Matrix3 tb_hamiltonian(KPoint k, TBParams const& p);

//! Ascending eigenvalues {lower, flat, upper}.
std::array<double, 3> band_energies(KPoint k, TBParams const& p);

struct BandStructure
{
    std::vector<KPoint> kpath;
    std::vector<double> parameter; //!< cumulative path length
    std::vector<std::array<double, 3>> bands;
};

BandStructure bands(std::vector<KPoint> const& kpath, TBParams const& p);

//! Named points G = (0,0), X = (pi,0), Y = (0,pi), M = (pi,pi).
KPoint named_point(char label);

//! Piecewise-linear path through labels such as "G-X-M-G" with
//! points_per_segment samples per leg plus the final end point.
std::vector<KPoint> high_symmetry_path(std::string const& labels,
                                       int points_per_segment);

//! Cumulative Euclidean length along a path, starting at 0.
std::vector<double> path_parameter(std::vector<KPoint> const& kpath);
} // namespace pseudospin::lattice
