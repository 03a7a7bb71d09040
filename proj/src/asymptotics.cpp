#include "pseudospin/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pseudospin/errors.hpp"
#include "pseudospin/specfun.hpp"

namespace pseudospin::asymptotics
{
namespace
{
using std::numbers::pi;
using specfun::bessel_j;

void require_positive_x(double x, char const* who)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(who) + ": x must be positive");
}

double j1_prime(double z)
{
    return 0.5 * (bessel_j(0, z) - bessel_j(2, z));
}

// NaN on the J1'(rho) pole.
double q2_term(double rho, double x)
{
    double const d = j1_prime(rho);
    if (std::abs(d) < 1e-12)
        return std::numeric_limits<double>::quiet_NaN();
    return 2.0 * (bessel_j(1, rho) / d - x);
}

double lorentz(double width, double offset)
{
    return width * width / (width * width + 4.0 * offset * offset);
}
} // namespace

LowEnergyTerms low_energy_terms(double rho, double x)
{
    require_positive_x(x, "low_energy_terms");
    double const u = rho - x;
    double const j1 = bessel_j(1, u);
    if (std::abs(j1) < 1e-12)
        throw PoleError("low_energy_terms: J1(rho - x) vanishes");

    LowEnergyTerms t;
    t.P0 = pi * x;
    t.Q0 = 2.0 * (x * std::log(gamma_e * x / 2.0) - bessel_j(0, u) / j1);
    t.P1 = x * t.P0;
    t.Q1 = x * t.Q0;
    t.P2 = x * x * t.P0;
    t.Q2 = q2_term(rho, x);
    return t;
}

LowEnergyTerms strong_terms(double rho, double x)
{
    require_positive_x(x, "strong_terms");
    double const j1 = bessel_j(1, rho);
    if (std::abs(j1) < 1e-12)
        throw PoleError("strong_terms: J1(rho) vanishes");

    LowEnergyTerms t;
    t.P0 = pi * x;
    t.Q0 = 2.0 * (x * std::log(gamma_e * x / 2.0) - bessel_j(0, rho) / j1);
    t.P1 = x * t.P0;
    t.Q1 = x * t.Q0;
    t.P2 = x * x * t.P0;
    t.Q2 = q2_term(rho, x);
    if (std::isnan(t.Q2))
        throw PoleError("strong_terms: J1'(rho) vanishes");
    return t;
}

cplx a0_approx(LowEnergyTerms const& t)
{
    return -t.P0 / cplx{t.P0, t.Q0};
}

cplx a1_approx(LowEnergyTerms const& t)
{
    return -t.P1 / cplx{t.P1, 4.0 + t.Q1};
}

cplx a1_strong(LowEnergyTerms const& t)
{
    return -t.P2 / cplx{t.P2, t.Q2};
}

double transport_three_channel(cplx a0, cplx a1, double x)
{
    require_positive_x(x, "transport_three_channel");
    return 4.0 / x
           * (std::norm(a0) + 2.0 * std::norm(a1)
              - 2.0 * std::real(a0 * std::conj(a1)));
}

double transport_low_energy(double rho, double x)
{
    auto const t = low_energy_terms(rho, x);
    double const lead = 4.0 * t.P0 * t.P0 / (x * (t.P0 * t.P0 + t.Q0 * t.Q0));
    double const four_q1 = 4.0 + t.Q1;
    return lead * (1.0 - 8.0 * t.Q1 / (t.P1 * t.P1 + four_q1 * four_q1));
}

double transport_strong(double rho, double x, int m_max, int n_max)
{
    require_positive_x(x, "transport_strong");
    if (m_max < 0 || n_max < 0 || m_max > specfun::max_zero_index
        || n_max > specfun::max_zero_index)
        throw DomainError("transport_strong: zero count out of range");

    double const shift0 = x * std::log(gamma_e * x / 2.0);
    double const w0 = pi * x;
    double const w1 = pi * x * x * x;
    double sum = 0.0;
    for (int m = 1; m <= m_max; ++m)
    {
        double const z = specfun::bessel_zero(0, m).value;
        sum += 4.0 / x * lorentz(w0, rho - z + shift0);
    }
    for (int n = 1; n <= n_max; ++n)
    {
        double const z = specfun::bessel_zero(1, n).value;
        sum += 8.0 / x * lorentz(w1, rho - z - x);
    }
    return sum;
}

double transport_closed(double rho, double x)
{
    require_positive_x(x, "transport_closed");
    double const born = pi * pi / 4.0 * rho * rho * x;
    if (born == 0.0)
        return 0.0;
    double const x4 = x * x * x * x;
    double const d = rho - 2.0 * x;
    return born * (1.0 + 16.0 * x * rho / (pi * pi * x4 * rho * rho + 16.0 * d * d));
}

double total_closed(double rho, double x)
{
    require_positive_x(x, "total_closed");
    double const born = pi * pi / 4.0 * rho * rho * x;
    if (born == 0.0)
        return 0.0;
    double const x4 = x * x * x * x;
    double const d = rho - 2.0 * x;
    double const e = rho - x;
    return born * (1.0 + 8.0 * x * x / (pi * pi * e * e * x4 + 16.0 * d * d));
}

double revival_residual(double rho, double x)
{
    double const u = rho - x;
    return x * bessel_j(0, u) - 2.0 * bessel_j(1, u);
}

double revival_rho(double x)
{
    if (!(x > 0.0 && x < 0.5))
        throw DomainError("revival_rho: x must lie in (0, 0.5)");

    // The root sits near rho - x ~ x, so scan rho - x on a log grid.
    double const u_lo = 1e-6;
    double const u_hi = 1.0 - x;
    constexpr int n = 2000;
    double prev_rho = x + u_lo;
    double prev_f = revival_residual(prev_rho, x);
    for (int i = 1; i <= n; ++i)
    {
        double const rho = x + u_lo * std::pow(u_hi / u_lo, double(i) / n);
        double const f = revival_residual(rho, x);
        if ((f < 0.0) != (prev_f < 0.0))
        {
            double lo = prev_rho;
            double hi = rho;
            double f_lo = prev_f;
            while (hi - lo > 1e-12)
            {
                double const mid = 0.5 * (lo + hi);
                double const f_mid = revival_residual(mid, x);
                if ((f_mid < 0.0) == (f_lo < 0.0))
                {
                    lo = mid;
                    f_lo = f_mid;
                }
                else
                {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        prev_rho = rho;
        prev_f = f;
    }
    throw NoResonance("revival_rho: no sign change of x J0 - 2 J1 in (x, 1)");
}

PeakPredictions peak_predictions(double rho)
{
    if (!(rho > 0.0 && rho < 1.0))
        throw DomainError("peak_predictions: rho must lie in (0, 1)");
    return {16.0 / rho, pi * rho * rho * rho / 8.0,
            pi * pi / 4.0 * rho * rho * rho};
}
} // namespace pseudospin::asymptotics
