#include "pseudospin/spinhalf.hpp"

#include <cmath>
#include <numbers>

#include "pseudospin/errors.hpp"
#include "pseudospin/parallel.hpp"
#include "pseudospin/specfun.hpp"

namespace pseudospin::spinhalf
{
namespace
{
using specfun::reflected;

constexpr cplx I{0.0, 1.0};

cplx i_power(int n)
{
    switch (((n % 4) + 4) % 4)
    {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

ChannelCoefficients solve_channel(double j0_k, double j1_k, cplx h0_k, cplx h1_k,
                                  double j0_q, double j1_q, double ss)
{
    cplx const den = j0_q * h1_k - ss * j1_q * h0_k;
    cplx const num = j0_q * j1_k - ss * j1_q * j0_k;
    cplx const wronski = j0_k * h1_k - j1_k * h0_k;
    ChannelCoefficients out{-num / den, wronski / den};
    if (!std::isfinite(out.a.real()) || !std::isfinite(out.a.imag())
        || !std::isfinite(out.b.real()) || !std::isfinite(out.b.imag()))
    {
        throw DomainError("spinhalf: non-finite partial-wave coefficient");
    }
    return out;
}
} // namespace

ChannelCoefficients channel_coefficients(ScatteringConfig const& config, int l)
{
    auto const inner = interior_wave(config);
    double const x = config.x;
    double const q = inner.q;
    using specfun::bessel_j;
    using specfun::hankel1;
    return solve_channel(bessel_j(l, x), bessel_j(l + 1, x), hankel1(l, x),
                         hankel1(l + 1, x), bessel_j(l, q), bessel_j(l + 1, q),
                         config.band * inner.band);
}

PartialWaveSolution solve_half(ScatteringConfig const& config,
                               std::optional<int> l_max)
{
    auto const inner = interior_wave(config);
    if (l_max && *l_max < 1)
        throw DomainError("spinhalf::solve_half: l_max must be positive");
    double const ss = config.band * inner.band;

    int channels = l_max.value_or(detail::initial_l_max(config.x));
    for (;;)
    {
        auto const jk = specfun::bessel_j_sequence(channels + 1, config.x);
        auto const hk = specfun::hankel1_sequence(channels + 1, config.x);
        auto const jq = specfun::bessel_j_sequence(channels + 1, inner.q);
        std::vector<cplx> a(static_cast<std::size_t>(channels) + 1);
        std::vector<cplx> b(a.size());
        for (std::size_t l = 0; l < a.size(); ++l)
        {
            auto const c = solve_channel(jk[l], jk[l + 1], hk[l], hk[l + 1],
                                         jq[l], jq[l + 1], ss);
            a[l] = c.a;
            b[l] = c.b;
        }
        if (l_max || detail::tail_converged(a, jk[a.size() - 1]))
        {
            return {ParticleKind::spinhalf, config, inner, std::move(a),
                    std::move(b)};
        }
        channels += 8;
        if (channels > detail::max_channels)
            throw DomainError(
                "spinhalf::solve_half: partial-wave sum did not converge");
    }
}

cplx scattering_amplitude(PartialWaveSolution const& sol, double theta)
{
    return detail::scattering_amplitude(sol, theta);
}

CrossSections cross_sections_half(PartialWaveSolution const& sol)
{
    return detail::cross_sections(sol);
}

Spinor wavefunction_outside(PartialWaveSolution const& sol, double r,
                            double theta)
{
    if (!(r > 0.0))
        throw DomainError("spinhalf: outside expansion needs r > 0");
    double const kr = sol.config.x * r;
    int const l_sc = sol.l_max();
    int const l_in = std::max(l_sc, detail::channels_for_argument(kr));
    auto const j = specfun::bessel_j_sequence(l_in + 1, kr);
    auto const h = specfun::hankel1_sequence(l_sc + 1, kr);
    double const s = sol.config.band;

    Spinor psi{};
    // l = -l_in - 1 .. l_in keeps every (l, -l-1) pair together.
    for (int l = -l_in - 1; l <= l_in; ++l)
    {
        int const stored = l >= 0 ? l : -l - 1;
        cplx const a = sol.a_at(l);
        auto radial = [&](int n) -> cplx {
            cplx v = reflected(j, n);
            if (stored <= l_sc)
                v += a * reflected(h, n);
            return v;
        };
        cplx const w = i_power(l) / std::numbers::sqrt2;
        psi[0] += w * radial(l) * std::polar(1.0, l * theta);
        psi[1] += w * I * s * radial(l + 1) * std::polar(1.0, (l + 1) * theta);
    }
    return psi;
}

Spinor wavefunction_inside(PartialWaveSolution const& sol, double r,
                           double theta)
{
    if (!(r >= 0.0))
        throw DomainError("spinhalf: inside expansion needs r >= 0");
    int const l_max = sol.l_max();
    auto const j = specfun::bessel_j_sequence(l_max + 1, sol.interior.q * r);
    double const s_in = sol.interior.band;

    Spinor psi{};
    for (int l = -l_max - 1; l <= l_max; ++l)
    {
        cplx const w = i_power(l) / std::numbers::sqrt2 * sol.b_at(l);
        psi[0] += w * reflected(j, l) * std::polar(1.0, l * theta);
        psi[1] += w * I * s_in * reflected(j, l + 1)
                  * std::polar(1.0, (l + 1) * theta);
    }
    return psi;
}

Spinor wavefunction(PartialWaveSolution const& sol, double r, double theta)
{
    if (!(r >= 0.0))
        throw DomainError("spinhalf: radius must be non-negative");
    return r >= 1.0 ? wavefunction_outside(sol, r, theta)
                    : wavefunction_inside(sol, r, theta);
}

double density(Spinor const& psi)
{
    return std::norm(psi[0]) + std::norm(psi[1]);
}

std::array<double, 2> current(Spinor const& psi)
{
    cplx const c = std::conj(psi[0]) * psi[1];
    return {2.0 * c.real(), 2.0 * c.imag()};
}

SpinorFieldGrid density_current(PartialWaveSolution const& sol,
                                GridSpec const& grid)
{
    if (grid.nx < 1 || grid.ny < 1)
        throw DomainError("spinhalf::density_current: empty grid");
    SpinorFieldGrid out;
    out.grid = grid;
    out.components = 2;
    auto const n = static_cast<std::size_t>(grid.nx)
                   * static_cast<std::size_t>(grid.ny);
    out.psi.resize(2 * n);
    out.density.resize(n);
    out.current.resize(n);
    out.on_interface.resize(n);

    parallel_for(n, [&](std::size_t p) {
        int const i = static_cast<int>(p % static_cast<std::size_t>(grid.nx));
        int const j = static_cast<int>(p / static_cast<std::size_t>(grid.nx));
        double const px = grid.x_at(i);
        double const py = grid.y_at(j);
        double const r = std::hypot(px, py);
        Spinor const psi = wavefunction(sol, r, std::atan2(py, px));
        out.psi[2 * p] = psi[0];
        out.psi[2 * p + 1] = psi[1];
        out.density[p] = density(psi);
        out.current[p] = current(psi);
        out.on_interface[p] = std::abs(r - 1.0) < interface_tolerance;
    });
    return out;
}
} // namespace pseudospin::spinhalf
