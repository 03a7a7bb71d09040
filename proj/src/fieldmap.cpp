#include "pseudospin/fieldmap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pseudospin/errors.hpp"
#include "pseudospin/parallel.hpp"
#include "pseudospin/spin1.hpp"
#include "pseudospin/spinhalf.hpp"

namespace pseudospin::fieldmap
{
namespace
{
using std::numbers::pi;

void require_request(MapRequest const& req)
{
    if (!(req.extent > 0.0) || !std::isfinite(req.extent))
        throw DomainError("fieldmap: extent must be positive");
    if (req.nx < 16 || req.ny < 16)
        throw DomainError("fieldmap: resolution must be at least 16 per axis");
}

PartialWaveSolution solve(MapRequest const& req)
{
    return req.kind == ParticleKind::spin1 ? spin1::solve(req.config)
                                           : spinhalf::solve_half(req.config);
}

double pick(SpinorFieldGrid const& g, std::size_t p, Quantity q)
{
    switch (q)
    {
        case Quantity::re_psi2:
            return g.psi[p * static_cast<std::size_t>(g.components) + 1].real();
        case Quantity::density: return g.density[p];
        case Quantity::current_x: return g.current[p][0];
        default: return g.current[p][1];
    }
}
} // namespace

char const* to_string(Quantity q)
{
    switch (q)
    {
        case Quantity::re_psi2: return "re_psi2";
        case Quantity::density: return "density";
        case Quantity::current_x: return "current_x";
        default: return "current_y";
    }
}

Quantity parse_quantity(std::string const& name)
{
    for (auto q : {Quantity::re_psi2, Quantity::density, Quantity::current_x,
                   Quantity::current_y})
    {
        if (name == to_string(q))
            return q;
    }
    throw DomainError("fieldmap: unknown quantity '" + name + "'");
}

FieldMap render(MapRequest const& req)
{
    require_request(req);
    auto const sol = solve(req);

    FieldMap out;
    out.request = req;
    out.wavelength = 2.0 * pi / req.config.x;
    out.disk_radius = 1.0 / out.wavelength;

    double const half = req.extent * out.wavelength;
    GridSpec const grid{-half, half, -half, half, req.nx, req.ny};
    out.field = req.kind == ParticleKind::spin1
                    ? spin1::density_current(sol, grid)
                    : spinhalf::density_current(sol, grid);

    out.x_axis.resize(static_cast<std::size_t>(req.nx));
    out.y_axis.resize(static_cast<std::size_t>(req.ny));
    for (int i = 0; i < req.nx; ++i)
        out.x_axis[static_cast<std::size_t>(i)] = grid.x_at(i) / out.wavelength;
    for (int j = 0; j < req.ny; ++j)
        out.y_axis[static_cast<std::size_t>(j)] = grid.y_at(j) / out.wavelength;

    out.values.resize(out.field.density.size());
    for (std::size_t p = 0; p < out.values.size(); ++p)
        out.values[p] = pick(out.field, p, req.quantity);
    return out;
}

double annulus_enhancement(MapRequest const& req, int n_radii, int n_angles)
{
    if (n_radii < 2 || n_angles < 1)
        throw DomainError("annulus_enhancement: sampling too coarse");
    auto const sol = solve(req);
    auto const n = static_cast<std::size_t>(n_radii) * static_cast<std::size_t>(n_angles);
    std::vector<double> dens(n);
    parallel_for(n, [&](std::size_t p) {
        int const ir = static_cast<int>(p / static_cast<std::size_t>(n_angles));
        int const it = static_cast<int>(p % static_cast<std::size_t>(n_angles));
        double const r = 0.9 + 0.2 * ir / (n_radii - 1);
        double const theta = 2.0 * pi * it / n_angles;
        dens[p] = req.kind == ParticleKind::spin1
                      ? spin1::density(spin1::wavefunction(sol, r, theta))
                      : spinhalf::density(spinhalf::wavefunction(sol, r, theta));
    });
    return *std::max_element(dens.begin(), dens.end());
}
} // namespace pseudospin::fieldmap
