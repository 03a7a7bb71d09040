#include "pseudospin/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pseudospin/errors.hpp"

namespace pseudospin
{
InteriorWave interior_wave(ScatteringConfig const& config)
{
    if (!std::isfinite(config.x) || !std::isfinite(config.rho))
        throw DomainError("scattering config: non-finite parameter");
    if (config.x <= 0.0)
        throw DomainError("scattering config: x = kR must be positive");
    if (config.band != 1 && config.band != -1)
        throw DomainError("scattering config: band must be +1 or -1");

    double const inside_energy = config.band * config.x - config.rho;
    if (std::abs(inside_energy) < degeneracy_threshold)
        throw FlatBandDegenerate(
            "scattering config: incident energy equals the barrier height");
    return {std::abs(inside_energy), inside_energy > 0.0 ? 1 : -1};
}

cplx PartialWaveSolution::a_at(int l) const
{
    int const stored = (kind == ParticleKind::spin1 || l >= 0) ? std::abs(l)
                                                               : -l - 1;
    if (stored > l_max())
        return {};
    return a[static_cast<std::size_t>(stored)];
}

cplx PartialWaveSolution::b_at(int l) const
{
    if (kind == ParticleKind::spin1 || l >= 0)
    {
        int const stored = std::abs(l);
        return stored > l_max() ? cplx{} : b[static_cast<std::size_t>(stored)];
    }
    int const stored = -l - 1;
    if (stored > l_max())
        return {};
    double const ss = config.band * interior.band;
    return ss * b[static_cast<std::size_t>(stored)];
}

double GridSpec::x_at(int i) const
{
    if (nx == 1)
        return 0.5 * (x_min + x_max);
    return x_min + (x_max - x_min) * i / (nx - 1);
}

double GridSpec::y_at(int j) const
{
    if (ny == 1)
        return 0.5 * (y_min + y_max);
    return y_min + (y_max - y_min) * j / (ny - 1);
}

namespace detail
{
cplx scattering_amplitude(PartialWaveSolution const& sol, double theta)
{
    using std::numbers::pi;
    cplx sum{};
    for (int l = 0; l <= sol.l_max(); ++l)
    {
        auto const al = sol.a[static_cast<std::size_t>(l)];
        if (sol.kind == ParticleKind::spin1)
        {
            sum += (l == 0) ? al : 2.0 * al * std::cos(l * theta);
        }
        else
        {
            // channels l and -l-1
            sum += al * (std::polar(1.0, l * theta)
                         + std::polar(1.0, -(l + 1) * theta));
        }
    }
    double const k = sol.config.x;
    return cplx{0.0, -1.0} * std::sqrt(2.0 / (pi * k)) * sum;
}

CrossSections cross_sections(PartialWaveSolution const& sol)
{
    double squares = 0.0;
    double overlaps = 0.0;
    auto const& a = sol.a;
    for (std::size_t l = 0; l < a.size(); ++l)
    {
        squares += std::norm(a[l]);
        if (l + 1 < a.size())
            overlaps += std::real(a[l] * std::conj(a[l + 1]));
    }

    // Fold sum_{l in Z} |A_l|^2 and sum_{l in Z} Re[A_l A_{l+1}^*] onto l >= 0.
    double total_sum = 0.0;
    double overlap_sum = 0.0;
    double const a0 = a.empty() ? 0.0 : std::norm(a.front());
    if (sol.kind == ParticleKind::spin1)
    {
        total_sum = 2.0 * squares - a0;
        overlap_sum = 2.0 * overlaps;
    }
    else
    {
        // The pair (l, l+1) = (-1, 0) contributes Re[A_0 A_0^*].
        total_sum = 2.0 * squares;
        overlap_sum = 2.0 * overlaps + a0;
    }

    double const x = sol.config.x;
    CrossSections out;
    out.total = 4.0 / x * total_sum;
    out.transport = 4.0 / x * (total_sum - overlap_sum);
    out.differential = [sol](double theta) {
        return std::norm(scattering_amplitude(sol, theta));
    };
    return out;
}

int channels_for_argument(double z)
{
    z = std::abs(z);
    return static_cast<int>(std::ceil(z + 10.0 * std::cbrt(z))) + 20;
}

int initial_l_max(double x)
{
    return std::max(12, static_cast<int>(std::ceil(x)) + 16);
}

bool tail_converged(std::vector<cplx> const& a, double j_at_l_max)
{
    if (a.size() < 2)
        return false;
    return std::abs(a[a.size() - 1]) < 1e-14 && std::abs(a[a.size() - 2]) < 1e-14
           && std::abs(j_at_l_max) < 1e-15;
}
} // namespace detail
} // namespace pseudospin
