#pragma once

#include <string>
#include <vector>

#include "pseudospin/scattering.hpp"

namespace pseudospin::fieldmap
{
enum class Quantity
{
    re_psi2,
    density,
    current_x,
    current_y
};

char const* to_string(Quantity q);
//! Throws DomainError for unknown names.
Quantity parse_quantity(std::string const& name);

struct MapRequest
{
    ParticleKind kind = ParticleKind::spin1;
    ScatteringConfig config;
    double extent = 1.5; //!< half-width in incident wavelengths 2 pi / k
    int nx = 512;
    int ny = 512;
    Quantity quantity = Quantity::re_psi2;
};

//! Raster of one quantity; axes in incident wavelengths, the disk edge
//! r = R sits at disk_radius in the same units. Point (i, j) is stored at
//! j * nx + i.
struct FieldMap
{
    MapRequest request;
    double wavelength = 0.0; //!< 2 pi / k in units of R
    double disk_radius = 0.0;
    std::vector<double> x_axis;
    std::vector<double> y_axis;
    std::vector<double> values;
    SpinorFieldGrid field;

    double at(int i, int j) const
    {
        return values[static_cast<std::size_t>(j) * x_axis.size()
                      + static_cast<std::size_t>(i)];
    }
};

FieldMap render(MapRequest const& req);

//! Largest density on the annulus 0.9 R <= r <= 1.1 R relative to the
//! unit incident density, sampled on a polar grid.
double annulus_enhancement(MapRequest const& req, int n_radii = 81,
                           int n_angles = 360);
} // namespace pseudospin::fieldmap
