#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace pseudospin::specfun
{
using cplx = std::complex<double>;

//! Positive zero of J_order (order 0 or 1); index is 1-based.
struct BesselZero
{
    int order;
    int index;
    double value;
};

//! Bessel function of the first kind J_n(x). Negative orders use
//! J_{-n} = (-1)^n J_n, negative arguments J_n(-x) = (-1)^n J_n(x).
double bessel_j(int order, double x);

//! Bessel function of the second kind Y_n(x), x > 0.
double bessel_y(int order, double x);

//! H^(1)_n(x) = J_n(x) + i Y_n(x), x > 0, with H_{-n} = (-1)^n H_n.
cplx hankel1(int order, double x);

//! J_0(x) .. J_{n_max}(x) from a single recurrence pass.
std::vector<double> bessel_j_sequence(int n_max, double x);

//! Y_0(x) .. Y_{n_max}(x) by forward recurrence, x > 0.
std::vector<double> bessel_y_sequence(int n_max, double x);

//! H^(1)_0(x) .. H^(1)_{n_max}(x).
std::vector<cplx> hankel1_sequence(int n_max, double x);

inline constexpr int max_zero_index = 20;

//! Sign-changing bracket used to isolate the zero before refinement.
std::pair<double, double> bessel_zero_bracket(int order, int index);

//! The index-th positive zero of J_order for order 0 or 1 and
//! index <= max_zero_index. Values are computed once and cached.
BesselZero bessel_zero(int order, int index);

//! Element n of a sequence J_0..J_N (or Y, H) with the integer-order
//! reflection (-1)^n applied for negative n.
template<class T>
T reflected(std::vector<T> const& seq, int n)
{
    if (n >= 0)
        return seq[static_cast<std::size_t>(n)];
    T v = seq[static_cast<std::size_t>(-n)];
    return (n % 2 == 0) ? v : -v;
}
} // namespace pseudospin::specfun
