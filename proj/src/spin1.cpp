#include "pseudospin/spin1.hpp"

#include <cmath>
#include <numbers>

#include "pseudospin/errors.hpp"
#include "pseudospin/parallel.hpp"
#include "pseudospin/specfun.hpp"

namespace pseudospin::spin1
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

// Matching determinant J_l(q) f'(x) - s s' J_l'(q) f(x) for f = J or H.
// The derivatives are expanded towards the lower order |l| - 1 (f_{l-1} for
// l >= 0, f_{l+1} for l < 0) so that the remaining l/x and l/q terms combine
// into l s' (2 s x - rho) / (x q). That coefficient vanishes on the revival
// line rho = 2x, where the two terms would otherwise cancel.
struct ChannelInputs
{
    double j_k;     // J_l(kR)
    double j_k_low; // J_{l-1}(kR), or J_{l+1}(kR) for l < 0
    cplx h_k;
    cplx h_k_low;
    double j_q;      // J_l(qR)
    double j_q_high; // J_{l+1}(qR), or J_{l-1}(qR) for l < 0
};

ChannelCoefficients solve_channel(ChannelInputs const& in, ScatteringConfig const& config,
                                  InteriorWave const& inner, int l)
{
    if (config.rho == 0.0)
        return {0.0, 1.0};
    double const ss = config.band * inner.band;
    double const sigma = l < 0 ? -1.0 : 1.0;
    double const c = l * inner.band * (2.0 * config.band * config.x - config.rho)
                     / (config.x * inner.q);
    auto det = [&](auto f, auto f_low) {
        return sigma * (in.j_q * f_low + ss * in.j_q_high * f - c * in.j_q * f);
    };
    cplx const w_j = det(in.j_k, in.j_k_low);
    cplx const w_h = det(in.h_k, in.h_k_low);
    // The numerator of B reduces to the Wronskian of J and H.
    ChannelCoefficients out{-w_j / w_h, 2.0 * I * ss / (std::numbers::pi * config.x * w_h)};
    if (!std::isfinite(out.a.real()) || !std::isfinite(out.a.imag())
        || !std::isfinite(out.b.real()) || !std::isfinite(out.b.imag()))
    {
        throw DomainError("spin1: non-finite partial-wave coefficient");
    }
    return out;
}

struct ChannelSet
{
    std::vector<cplx> a;
    std::vector<cplx> b;
    double j_last;
};

ChannelSet solve_channels(ScatteringConfig const& config,
                          InteriorWave const& inner, int l_max)
{
    double const x = config.x;
    auto const jk = specfun::bessel_j_sequence(l_max + 1, x);
    auto const hk = specfun::hankel1_sequence(l_max + 1, x);
    auto const jq = specfun::bessel_j_sequence(l_max + 1, inner.q);

    ChannelSet out;
    out.a.resize(static_cast<std::size_t>(l_max) + 1);
    out.b.resize(out.a.size());
    for (int l = 0; l <= l_max; ++l)
    {
        auto const ul = static_cast<std::size_t>(l);
        ChannelInputs const in{jk[ul], reflected(jk, l - 1), hk[ul],
                               reflected(hk, l - 1), jq[ul], jq[ul + 1]};
        auto const c = solve_channel(in, config, inner, l);
        out.a[ul] = c.a;
        out.b[ul] = c.b;
    }
    out.j_last = jk[static_cast<std::size_t>(l_max)];
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
    int const low = l < 0 ? l + 1 : l - 1;
    int const high = l < 0 ? l - 1 : l + 1;
    ChannelInputs const in{bessel_j(l, x),    bessel_j(low, x), hankel1(l, x),
                           hankel1(low, x),   bessel_j(l, q),   bessel_j(high, q)};
    return solve_channel(in, config, inner, l);
}

PartialWaveSolution solve(ScatteringConfig const& config, std::optional<int> l_max)
{
    auto const inner = interior_wave(config);
    if (l_max && *l_max < 1)
        throw DomainError("spin1::solve: l_max must be positive");

    int channels = l_max.value_or(detail::initial_l_max(config.x));
    for (;;)
    {
        auto set = solve_channels(config, inner, channels);
        if (l_max || detail::tail_converged(set.a, set.j_last))
        {
            return {ParticleKind::spin1, config, inner, std::move(set.a),
                    std::move(set.b)};
        }
        channels += 8;
        if (channels > detail::max_channels)
            throw DomainError("spin1::solve: partial-wave sum did not converge");
    }
}

cplx scattering_amplitude(PartialWaveSolution const& sol, double theta)
{
    return detail::scattering_amplitude(sol, theta);
}

CrossSections cross_sections(PartialWaveSolution const& sol)
{
    return detail::cross_sections(sol);
}

Spinor wavefunction_outside(PartialWaveSolution const& sol, double r,
                            double theta)
{
    if (!(r > 0.0))
        throw DomainError("spin1: outside expansion needs r > 0");
    double const kr = sol.config.x * r;
    int const l_sc = sol.l_max();
    int const l_in = std::max(l_sc, detail::channels_for_argument(kr));
    auto const j = specfun::bessel_j_sequence(l_in + 1, kr);
    auto const h = specfun::hankel1_sequence(l_sc + 1, kr);
    double const s = sol.config.band;

    Spinor psi{};
    for (int l = -l_in; l <= l_in; ++l)
    {
        cplx const a = sol.a_at(l);
        auto radial = [&](int n) -> cplx {
            cplx v = reflected(j, n);
            if (std::abs(l) <= l_sc)
                v += a * reflected(h, n);
            return v;
        };
        cplx const w = 0.5 * i_power(l - 1);
        psi[0] += w * radial(l - 1) * std::polar(1.0, (l - 1) * theta);
        psi[1] += w * I * std::numbers::sqrt2 * s * radial(l)
                  * std::polar(1.0, l * theta);
        psi[2] -= w * radial(l + 1) * std::polar(1.0, (l + 1) * theta);
    }
    return psi;
}

Spinor wavefunction_inside(PartialWaveSolution const& sol, double r,
                           double theta)
{
    if (!(r >= 0.0))
        throw DomainError("spin1: inside expansion needs r >= 0");
    int const l_max = sol.l_max();
    auto const j = specfun::bessel_j_sequence(l_max + 1, sol.interior.q * r);
    double const s_in = sol.interior.band;

    Spinor psi{};
    for (int l = -l_max; l <= l_max; ++l)
    {
        cplx const w = 0.5 * i_power(l - 1) * sol.b_at(l);
        psi[0] += w * reflected(j, l - 1) * std::polar(1.0, (l - 1) * theta);
        psi[1] += w * I * std::numbers::sqrt2 * s_in * reflected(j, l)
                  * std::polar(1.0, l * theta);
        psi[2] -= w * reflected(j, l + 1) * std::polar(1.0, (l + 1) * theta);
    }
    return psi;
}

Spinor wavefunction(PartialWaveSolution const& sol, double r, double theta)
{
    if (!(r >= 0.0))
        throw DomainError("spin1: radius must be non-negative");
    return r >= 1.0 ? wavefunction_outside(sol, r, theta)
                    : wavefunction_inside(sol, r, theta);
}

double density(Spinor const& psi)
{
    return std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]);
}

std::array<double, 2> current(Spinor const& psi)
{
    // S_x = [[0,1,0],[1,0,1],[0,1,0]]/sqrt2, S_y = [[0,-i,0],[i,0,-i],[0,i,0]]/sqrt2
    cplx const c = std::conj(psi[0]) * psi[1] + std::conj(psi[1]) * psi[2];
    return {std::numbers::sqrt2 * c.real(), std::numbers::sqrt2 * c.imag()};
}

SpinorFieldGrid density_current(PartialWaveSolution const& sol,
                                GridSpec const& grid)
{
    if (grid.nx < 1 || grid.ny < 1)
        throw DomainError("spin1::density_current: empty grid");
    SpinorFieldGrid out;
    out.grid = grid;
    out.components = 3;
    auto const n = static_cast<std::size_t>(grid.nx)
                   * static_cast<std::size_t>(grid.ny);
    out.psi.resize(3 * n);
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
        for (std::size_t c = 0; c < 3; ++c)
            out.psi[3 * p + c] = psi[c];
        out.density[p] = density(psi);
        out.current[p] = current(psi);
        out.on_interface[p] = std::abs(r - 1.0) < interface_tolerance;
    });
    return out;
}
} // namespace pseudospin::spin1
