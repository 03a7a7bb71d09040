#include "pseudospin/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "pseudospin/asymptotics.hpp"
#include "pseudospin/errors.hpp"
#include "pseudospin/parallel.hpp"
#include "pseudospin/specfun.hpp"
#include "pseudospin/spin1.hpp"
#include "pseudospin/spinhalf.hpp"

namespace pseudospin::resonance
{
namespace
{
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

bool masked(double rho, double x)
{
    return std::abs(x - rho) < mask_threshold;
}

void require_range(Range r, char const* who)
{
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi)
        throw DomainError(std::string(who) + ": invalid range");
}

std::vector<double> evaluate(std::vector<double> const& grid,
                             auto const& transport)
{
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { out[i] = transport(grid[i]); });
    return out;
}

double median(std::vector<double> values)
{
    std::erase_if(values, [](double v) { return !std::isfinite(v); });
    if (values.empty())
        return nan;
    auto const mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

std::size_t argmax(std::vector<double> const& values)
{
    std::size_t best = values.size();
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        if (std::isfinite(values[i]) && (best == values.size() || values[i] > values[best]))
            best = i;
    }
    return best;
}

Maximum golden_max(auto const& f, double a, double b)
{
    double const inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12 * (std::abs(a) + std::abs(b)); ++it)
    {
        if (fc > fd)
        {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        }
        else
        {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? Maximum{c, fc} : Maximum{d, fd};
}

// Point where f crosses level between lo (below) and hi (above).
double crossing(auto const& f, double level, double below, double above)
{
    for (int it = 0; it < 100 && std::abs(above - below) > 1e-14 * std::abs(above); ++it)
    {
        double const mid = 0.5 * (below + above);
        if (f(mid) < level)
            below = mid;
        else
            above = mid;
    }
    return 0.5 * (below + above);
}

Maximum refine(auto const& f, std::vector<double> const& grid,
               std::vector<double> const& values, std::size_t i)
{
    Maximum best{grid[i], values[i]};
    if (i == 0 || i + 1 >= grid.size())
        return best;
    auto const m = golden_max(f, grid[i - 1], grid[i + 1]);
    return m.height > best.height ? m : best;
}

double full_width(auto const& f, std::vector<double> const& grid,
                  std::vector<double> const& values, std::size_t i,
                  Maximum const& top)
{
    double const half = 0.5 * top.height;
    double left = grid.front();
    for (std::size_t j = i; j-- > 0;)
    {
        if (std::isfinite(values[j]) && values[j] < half)
        {
            left = crossing(f, half, grid[j], j + 1 == i ? top.x : grid[j + 1]);
            break;
        }
    }
    double right = grid.back();
    for (std::size_t j = i + 1; j < grid.size(); ++j)
    {
        if (std::isfinite(values[j]) && values[j] < half)
        {
            right = crossing(f, half, grid[j], j == i + 1 ? top.x : grid[j - 1]);
            break;
        }
    }
    return right - left;
}

auto transport_in_x(ParticleKind kind, double rho)
{
    return [kind, rho](double x) {
        return masked(rho, x) ? nan : exact_transport(kind, rho, x);
    };
}

auto transport_in_rho(ParticleKind kind, double x)
{
    return [kind, x](double rho) {
        return masked(rho, x) ? nan : exact_transport(kind, rho, x);
    };
}
} // namespace

CrossSections exact(ParticleKind kind, double rho, double x)
{
    ScatteringConfig const config{rho, x, +1};
    if (kind == ParticleKind::spin1)
        return spin1::cross_sections(spin1::solve(config));
    return spinhalf::cross_sections_half(spinhalf::solve_half(config));
}

double exact_transport(ParticleKind kind, double rho, double x)
{
    return exact(kind, rho, x).transport;
}

char const* to_string(MarkerFamily family)
{
    switch (family)
    {
        case MarkerFamily::j0_zero: return "j0_zero";
        case MarkerFamily::j1_zero: return "j1_zero";
        default: return "revival";
    }
}

std::vector<double> linear_axis(Range r, int n)
{
    require_range(r, "linear_axis");
    if (n < 1)
        throw DomainError("linear_axis: need at least one node");
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1)
    {
        out[0] = 0.5 * (r.lo + r.hi);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = r.lo + (r.hi - r.lo) * i / (n - 1);
    return out;
}

std::vector<double> log_axis(Range r, int n)
{
    require_range(r, "log_axis");
    if (!(r.lo > 0.0))
        throw DomainError("log_axis: lower end must be positive");
    if (n < 1)
        throw DomainError("log_axis: need at least one node");
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1)
    {
        out[0] = std::sqrt(r.lo * r.hi);
        return out;
    }
    double const ratio = std::log(r.hi / r.lo);
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = r.lo * std::exp(ratio * i / (n - 1));
    out.back() = r.hi;
    return out;
}

std::vector<Marker> theory_markers(Range rho, std::vector<double> const& x_axis)
{
    auto inside = [&](double v) { return v >= rho.lo && v <= rho.hi; };
    std::vector<Marker> out;
    for (int m = 1; m <= specfun::max_zero_index; ++m)
    {
        double const z = specfun::bessel_zero(0, m).value;
        for (double x : x_axis)
        {
            double const r = z - x * std::log(asymptotics::gamma_e * x / 2.0);
            if (inside(r))
                out.push_back({MarkerFamily::j0_zero, r, x});
        }
    }
    for (int n = 1; n <= specfun::max_zero_index; ++n)
    {
        double const z = specfun::bessel_zero(1, n).value;
        for (double x : x_axis)
        {
            if (inside(z + x))
                out.push_back({MarkerFamily::j1_zero, z + x, x});
        }
    }
    for (double x : x_axis)
    {
        if (!(x > 0.0 && x < 0.5))
            continue;
        try
        {
            double const r = asymptotics::revival_rho(x);
            if (inside(r))
                out.push_back({MarkerFamily::revival, r, x});
        }
        catch (NoResonance const&)
        {
        }
    }
    return out;
}

ResonanceMap map(Range rho, Range x, int n_rho, int n_x, ParticleKind kind)
{
    require_range(rho, "resonance::map");
    require_range(x, "resonance::map");
    if (!(x.lo > 0.0))
        throw DomainError("resonance::map: x must be positive");

    ResonanceMap out;
    out.rho_axis = linear_axis(rho, n_rho);
    out.x_axis = linear_axis(x, n_x);
    std::size_t const nr = out.rho_axis.size();
    out.values.resize(nr * out.x_axis.size());
    std::vector<std::uint8_t> failed(out.values.size(), 0);
    parallel_for(out.values.size(), [&](std::size_t p) {
        double const r = out.rho_axis[p % nr];
        double const xv = out.x_axis[p / nr];
        if (masked(r, xv))
            return;
        try
        {
            double const t = exact_transport(kind, r, xv);
            if (t > 0.0)
                out.values[p] = std::log10(t);
        }
        catch (DomainError const&)
        {
            failed[p] = 1;
        }
    });
    for (std::size_t p = 0; p < failed.size(); ++p)
    {
        if (failed[p])
            out.failed.emplace_back(out.rho_axis[p % nr], out.x_axis[p / nr]);
    }
    out.markers = theory_markers(rho, out.x_axis);
    return out;
}

Maximum sweep_max(double rho, Range x, ParticleKind kind, int n)
{
    auto const grid = log_axis(x, n);
    auto const f = transport_in_x(kind, rho);
    auto const values = evaluate(grid, f);
    std::size_t const i = argmax(values);
    if (i == values.size())
        throw NoPeak("sweep_max: every point is masked");
    return refine(f, grid, values, i);
}

Peak sweep_peak(double rho, Range x, ParticleKind kind, int n)
{
    auto const grid = log_axis(x, n);
    auto const f = transport_in_x(kind, rho);
    auto const values = evaluate(grid, f);
    std::size_t const i = argmax(values);
    if (i == values.size())
        throw NoPeak("sweep_peak: every point is masked");
    if (i == 0 || i + 1 == values.size())
        throw NoPeak("sweep_peak: maximum on the sweep boundary");
    double const baseline = median(values);
    if (!(values[i] >= 2.0 * baseline))
        throw NoPeak("sweep_peak: maximum below twice the median");

    auto const top = refine(f, grid, values, i);
    return {top.x, top.height, full_width(f, grid, values, i, top),
            baseline > 0.0 ? top.height / baseline
                           : std::numeric_limits<double>::infinity()};
}

std::vector<std::pair<double, double>>
max_vs_strength(std::vector<double> const& rhos, ParticleKind kind, int n)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(rhos.size());
    for (double rho : rhos)
    {
        if (!(rho > 0.0))
            throw DomainError("max_vs_strength: rho must be positive");
        auto const m = sweep_max(rho, {rho / 100.0, rho * (1.0 - 1e-4)}, kind, n);
        out.emplace_back(rho, m.height);
    }
    return out;
}

double ridge_crest(double x, Range rho, ParticleKind kind, int n)
{
    auto const grid = log_axis(rho, n);
    auto const f = transport_in_rho(kind, x);
    auto const values = evaluate(grid, f);
    std::size_t const i = argmax(values);
    if (i == values.size())
        throw NoPeak("ridge_crest: every point is masked");
    return refine(f, grid, values, i).x;
}

std::vector<Peak> rho_scan_peaks(double x, Range rho, ParticleKind kind, int n)
{
    auto const grid = linear_axis(rho, n);
    auto const f = transport_in_rho(kind, x);
    auto const values = evaluate(grid, f);
    double const baseline = median(values);

    std::vector<Peak> out;
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
    {
        double const v = values[i];
        if (!std::isfinite(v) || !(v > values[i - 1]) || !(v >= values[i + 1]))
            continue;
        if (!(v >= 2.0 * baseline))
            continue;
        auto const top = refine(f, grid, values, i);
        out.push_back({top.x, top.height, full_width(f, grid, values, i, top),
                       baseline > 0.0 ? top.height / baseline
                                      : std::numeric_limits<double>::infinity()});
    }
    return out;
}
} // namespace pseudospin::resonance
