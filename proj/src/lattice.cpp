#include "pseudospin/lattice.hpp"

#include <cmath>
#include <numbers>

#include "pseudospin/errors.hpp"

namespace pseudospin::lattice
{
namespace
{
using std::numbers::pi;

void require_params(TBParams const& p)
{
    if (!(p.kappa_x > 0.0) || !(p.kappa_y > 0.0) || !std::isfinite(p.kappa_x)
        || !std::isfinite(p.kappa_y) || !std::isfinite(p.beta0))
        throw DomainError("lattice: couplings must be positive and finite");
}
} // namespace

Matrix3 tb_hamiltonian(KPoint k, TBParams const& p)
{
    require_params(p);
    double const a = 2.0 * p.kappa_x * std::cos(0.5 * k.kx);
    double const b = 2.0 * p.kappa_y * std::cos(0.5 * k.ky);
    return {{{p.beta0, a, 0.0}, {a, p.beta0, b}, {0.0, b, p.beta0}}};
}

std::array<double, 3> band_energies(KPoint k, TBParams const& p)
{
    require_params(p);
    double const a = p.kappa_x * std::cos(0.5 * k.kx);
    double const b = p.kappa_y * std::cos(0.5 * k.ky);
    double const split = 2.0 * std::hypot(a, b);
    return {p.beta0 - split, p.beta0, p.beta0 + split};
}

BandStructure bands(std::vector<KPoint> const& kpath, TBParams const& p)
{
    if (kpath.empty())
        throw DomainError("lattice::bands: empty k path");
    BandStructure out;
    out.kpath = kpath;
    out.parameter = path_parameter(kpath);
    out.bands.reserve(kpath.size());
    for (auto const& k : kpath)
        out.bands.push_back(band_energies(k, p));
    return out;
}

KPoint named_point(char label)
{
    switch (label)
    {
        case 'G': return {0.0, 0.0};
        case 'X': return {pi, 0.0};
        case 'Y': return {0.0, pi};
        case 'M': return {pi, pi};
        default:
            throw DomainError(std::string("lattice: unknown k-point label '")
                              + label + "'");
    }
}

std::vector<KPoint> high_symmetry_path(std::string const& labels,
                                       int points_per_segment)
{
    if (points_per_segment < 1)
        throw DomainError("lattice: need at least one point per segment");
    std::vector<KPoint> corners;
    for (std::size_t i = 0; i < labels.size(); ++i)
    {
        if (i % 2 == 1)
        {
            if (labels[i] != '-')
                throw DomainError("lattice: path labels must be separated by '-'");
            continue;
        }
        corners.push_back(named_point(labels[i]));
    }
    if (corners.size() < 2 || labels.size() % 2 == 0)
        throw DomainError("lattice: path needs at least two labels, e.g. G-X-M-G");

    std::vector<KPoint> out;
    for (std::size_t s = 0; s + 1 < corners.size(); ++s)
    {
        auto const a = corners[s];
        auto const b = corners[s + 1];
        for (int i = 0; i < points_per_segment; ++i)
        {
            double const t = static_cast<double>(i) / points_per_segment;
            out.push_back({a.kx + t * (b.kx - a.kx), a.ky + t * (b.ky - a.ky)});
        }
    }
    out.push_back(corners.back());
    return out;
}

std::vector<double> path_parameter(std::vector<KPoint> const& kpath)
{
    std::vector<double> out(kpath.size(), 0.0);
    for (std::size_t i = 1; i < kpath.size(); ++i)
    {
        out[i] = out[i - 1]
                 + std::hypot(kpath[i].kx - kpath[i - 1].kx,
                              kpath[i].ky - kpath[i - 1].ky);
    }
    return out;
}
} // namespace pseudospin::lattice
