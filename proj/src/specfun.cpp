#include "pseudospin/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pseudospin/errors.hpp"

namespace pseudospin::specfun
{
namespace
{
using std::numbers::pi;

// Below this argument the ascending series is used for every order.
constexpr double series_limit = 2.0;
// Above this argument J_0, J_1, Y_0, Y_1 come from the Hankel expansion.
constexpr double asymptotic_limit = 25.0;
constexpr double euler_gamma = 0.57721566490153286061;
constexpr double rescale = 1e250;

void require_finite(double x, char const* who)
{
    if (!std::isfinite(x))
        throw DomainError(std::string(who) + ": non-finite argument");
}

void require_order(int n_max, char const* who)
{
    if (n_max < 0)
        throw DomainError(std::string(who) + ": negative maximum order");
}

//---------------------------------------------------------------------------//
// Ascending series J_n(x) = sum_k (-x^2/4)^k (x/2)^n / (k! (n+k)!)
//---------------------------------------------------------------------------//
std::vector<double> j_series_sequence(int n_max, double x)
{
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    double const half = 0.5 * x;
    double const z = -half * half;
    double lead = 1.0; // (x/2)^n / n!
    for (int n = 0; n <= n_max; ++n)
    {
        if (n > 0)
            lead *= half / n;
        if (lead == 0.0)
        {
            // Remaining orders underflow as well.
            break;
        }
        double term = lead;
        double sum = lead;
        for (int k = 1; k < 200; ++k)
        {
            term *= z / (static_cast<double>(k) * (n + k));
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum))
                break;
        }
        out[static_cast<std::size_t>(n)] = sum;
    }
    return out;
}

//---------------------------------------------------------------------------//
// Hankel asymptotic expansion for orders 0 and 1
//---------------------------------------------------------------------------//
struct JY
{
    double j;
    double y;
};

JY hankel_asymptotic(int nu, double x)
{
    double const mu = 4.0 * nu * nu;
    double const eight_x = 8.0 * x;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = std::abs(term);
    for (int k = 1; k < 80; ++k)
    {
        double const odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * eight_x);
        double const size = std::abs(term);
        // The expansion is asymptotic: stop at the smallest term.
        if (size > previous)
            break;
        previous = size;
        switch (k % 4)
        {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
        if (size < 1e-17)
            break;
    }
    double const chi = x - (0.5 * nu + 0.25) * pi;
    double const amp = std::sqrt(2.0 / (pi * x));
    double const c = std::cos(chi);
    double const s = std::sin(chi);
    return {amp * (p * c - q * s), amp * (p * s + q * c)};
}

//---------------------------------------------------------------------------//
// Miller backward recurrence
//---------------------------------------------------------------------------//
int miller_start(int n_max, double x)
{
    double const top = std::max(static_cast<double>(n_max), x);
    int m = static_cast<int>(top + 20.0 + 10.0 * std::cbrt(top)
                             + std::sqrt(40.0 * top));
    return m + (m % 2);
}

// J_0..J_N for x > series_limit, N = miller_start(n_max, x).
std::vector<double> j_miller_sequence(int n_max, double x)
{
    int const top = miller_start(n_max, x);
    std::vector<double> f(static_cast<std::size_t>(top) + 2, 0.0);
    f[static_cast<std::size_t>(top)] = 1.0;
    for (int k = top; k >= 1; --k)
    {
        auto const uk = static_cast<std::size_t>(k);
        f[uk - 1] = (2.0 * k / x) * f[uk] - f[uk + 1];
        if (std::abs(f[uk - 1]) > rescale)
        {
            for (std::size_t j = uk - 1; j < f.size(); ++j)
                f[j] /= rescale;
        }
    }
    f.pop_back();

    double scale = 0.0;
    if (x > asymptotic_limit)
    {
        // Match to whichever of J_0, J_1 is further from a zero.
        JY const j0 = hankel_asymptotic(0, x);
        JY const j1 = hankel_asymptotic(1, x);
        scale = std::abs(j0.j) > std::abs(j1.j) ? j0.j / f[0] : j1.j / f[1];
    }
    else
    {
        // 1 = J_0 + 2 sum_k J_2k
        double sum = f[0];
        for (std::size_t k = 2; k < f.size(); k += 2)
            sum += 2.0 * f[k];
        scale = 1.0 / sum;
    }
    for (double& v : f)
        v *= scale;
    return f;
}

// J sequence long enough that the tail beyond it is negligible.
std::vector<double> j_full_sequence(int n_min, double x)
{
    if (x <= series_limit)
        return j_series_sequence(std::max(n_min, 30), x);
    return j_miller_sequence(n_min, x);
}

//---------------------------------------------------------------------------//
// Y_0 and Y_1 from the Neumann series in J_k:
//   Y_0 = (2/pi) [ (ln(x/2)+gamma) J_0 - 2 sum_k (-1)^k J_2k / k ]
//   Y_1 = (2/pi) [ (ln(x/2)+gamma) J_1 - J_0/x
//                  + sum_k (-1)^k (J_{2k-1} - J_{2k+1}) / k ]
//---------------------------------------------------------------------------//
struct Y01
{
    double y0;
    double y1;
};

Y01 y01_neumann(double x, std::vector<double> const& j)
{
    double const lg = std::log(0.5 * x) + euler_gamma;
    double s0 = 0.0;
    double s1 = 0.0;
    for (std::size_t k = 1; 2 * k + 1 < j.size(); ++k)
    {
        double const sign = (k % 2 == 0) ? 1.0 : -1.0;
        s0 += sign * j[2 * k] / static_cast<double>(k);
        s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / static_cast<double>(k);
    }
    return {(2.0 / pi) * (lg * j[0] - 2.0 * s0),
            (2.0 / pi) * (lg * j[1] - j[0] / x + s1)};
}
} // namespace

//---------------------------------------------------------------------------//
std::vector<double> bessel_j_sequence(int n_max, double x)
{
    require_finite(x, "bessel_j");
    require_order(n_max, "bessel_j");
    if (x < 0.0)
    {
        auto out = bessel_j_sequence(n_max, -x);
        for (std::size_t n = 1; n < out.size(); n += 2)
            out[n] = -out[n];
        return out;
    }
    if (x == 0.0)
    {
        std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    auto out = (x <= series_limit) ? j_series_sequence(n_max, x)
                                   : j_miller_sequence(n_max, x);
    out.resize(static_cast<std::size_t>(n_max) + 1);
    return out;
}

std::vector<double> bessel_y_sequence(int n_max, double x)
{
    require_finite(x, "bessel_y");
    require_order(n_max, "bessel_y");
    if (x <= 0.0)
        throw DomainError("bessel_y: argument must be positive");

    double y0 = 0.0;
    double y1 = 0.0;
    if (x > asymptotic_limit)
    {
        y0 = hankel_asymptotic(0, x).y;
        y1 = hankel_asymptotic(1, x).y;
    }
    else
    {
        auto const y = y01_neumann(x, j_full_sequence(1, x));
        y0 = y.y0;
        y1 = y.y1;
    }

    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = y0;
    if (n_max >= 1)
        out[1] = y1;
    for (int n = 1; n < n_max; ++n)
    {
        auto const un = static_cast<std::size_t>(n);
        out[un + 1] = (2.0 * n / x) * out[un] - out[un - 1];
    }
    return out;
}

std::vector<cplx> hankel1_sequence(int n_max, double x)
{
    require_finite(x, "hankel1");
    if (x <= 0.0)
        throw DomainError("hankel1: argument must be positive");
    auto const j = bessel_j_sequence(n_max, x);
    auto const y = bessel_y_sequence(n_max, x);
    std::vector<cplx> out(j.size());
    for (std::size_t n = 0; n < j.size(); ++n)
        out[n] = {j[n], y[n]};
    return out;
}

double bessel_j(int order, double x)
{
    int const n = std::abs(order);
    return reflected(bessel_j_sequence(n, x), order < 0 ? -n : n);
}

double bessel_y(int order, double x)
{
    int const n = std::abs(order);
    return reflected(bessel_y_sequence(n, x), order < 0 ? -n : n);
}

cplx hankel1(int order, double x)
{
    int const n = std::abs(order);
    return reflected(hankel1_sequence(n, x), order < 0 ? -n : n);
}

//---------------------------------------------------------------------------//
// Zeros of J_0 and J_1
//---------------------------------------------------------------------------//
namespace
{
void require_zero_args(int order, int index)
{
    if (order != 0 && order != 1)
        throw DomainError("bessel_zero: only orders 0 and 1 are supported");
    if (index < 1 || index > max_zero_index)
        throw DomainError("bessel_zero: index out of range");
}

double derivative_j(int order, double x)
{
    if (order == 0)
        return -bessel_j(1, x);
    return bessel_j(0, x) - bessel_j(1, x) / x;
}

double refine_zero(int order, double lo, double hi)
{
    double f_lo = bessel_j(order, lo);
    while (hi - lo > 1e-13)
    {
        double const mid = 0.5 * (lo + hi);
        double const f_mid = bessel_j(order, mid);
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
    double const x = 0.5 * (lo + hi);
    return x - bessel_j(order, x) / derivative_j(order, x);
}

using ZeroTable = std::array<std::array<double, max_zero_index>, 2>;

ZeroTable const& zero_table()
{
    static ZeroTable const table = [] {
        ZeroTable t{};
        for (int order = 0; order <= 1; ++order)
        {
            for (int index = 1; index <= max_zero_index; ++index)
            {
                auto const [lo, hi] = bessel_zero_bracket(order, index);
                if (bessel_j(order, lo) * bessel_j(order, hi) >= 0.0)
                    throw std::logic_error("bessel_zero: bracket lost sign change");
                t[static_cast<std::size_t>(order)]
                 [static_cast<std::size_t>(index - 1)]
                    = refine_zero(order, lo, hi);
            }
        }
        return t;
    }();
    return table;
}
} // namespace

std::pair<double, double> bessel_zero_bracket(int order, int index)
{
    require_zero_args(order, index);
    // McMahon's leading term; consecutive zeros are ~pi apart, so a
    // half-width of pi/4 isolates exactly one root.
    double const beta = (index + 0.5 * order - 0.25) * pi;
    return {beta - 0.25 * pi, beta + 0.25 * pi};
}

BesselZero bessel_zero(int order, int index)
{
    require_zero_args(order, index);
    return {order,
            index,
            zero_table()[static_cast<std::size_t>(order)]
                        [static_cast<std::size_t>(index - 1)]};
}
} // namespace pseudospin::specfun
