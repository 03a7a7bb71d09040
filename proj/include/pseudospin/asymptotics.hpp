#pragma once

#include "pseudospin/scattering.hpp"

//! Closed-form low-energy approximations to the spin-1 cross sections.
//! All arguments are rho = V0 R and x = kR with hbar v_F = 1.
namespace pseudospin::asymptotics
{
//! exp(Euler-Mascheroni); enters through ln(gamma_E x / 2).
inline constexpr double gamma_e = 1.7810724179901979;

struct LowEnergyTerms
{
    double P0 = 0.0;
    double Q0 = 0.0;
    double P1 = 0.0;
    double Q1 = 0.0;
    double P2 = 0.0;
    double Q2 = 0.0;
    double gammaE = gamma_e;
};

//! Weak-regime terms (0 < x < rho < 1):
//!   P0 = pi x, Q0 = 2 (x ln(gamma_E x/2) - J0(rho-x)/J1(rho-x)),
//!   [P1, Q1] = x [P0, Q0], P2 = pi x^3, Q2 = 2 (J1(rho)/J1'(rho) - x).
//! Throws PoleError when |J1(rho - x)| < 1e-12; Q2 is NaN where J1'(rho) = 0.
LowEnergyTerms low_energy_terms(double rho, double x);

//! Strong-regime terms (rho > 1): as above with Bessel argument rho in Q0.
//! Throws PoleError when |J1(rho)| or |J1'(rho)| is below 1e-12.
LowEnergyTerms strong_terms(double rho, double x);

//! A0 ~ -P0 / (P0 + i Q0)
cplx a0_approx(LowEnergyTerms const& t);
//! A_{+-1} ~ -P1 / (P1 + i (4 + Q1)), weak regime.
cplx a1_approx(LowEnergyTerms const& t);
//! A_{+-1} ~ -P2 / (P2 + i Q2), strong regime.
cplx a1_strong(LowEnergyTerms const& t);

//! Three-channel transport (4/x){|A0|^2 + 2|A1|^2 - 2 Re[A0 A1^*]}.
double transport_three_channel(cplx a0, cplx a1, double x);

//! Sigma_tr/R = 4 P0^2 / [x (P0^2 + Q0^2)] {1 - 8 Q1 / [P1^2 + (4 + Q1)^2]}
double transport_low_energy(double rho, double x);

//! Lorentzian families around the zeros of J0 (height 4/x, shifted by
//! -x ln(gamma_E x/2)) and of J1 (height 8/x, shifted by +x), summed over
//! m = 1..m_max and n = 1..n_max.
double transport_strong(double rho, double x, int m_max = 3, int n_max = 3);

//! (pi^2/4) rho^2 x [1 + 16 x rho / (pi^2 x^4 rho^2 + 16 (rho - 2x)^2)]
double transport_closed(double rho, double x);

//! (pi^2/4) rho^2 x [1 + 8 x^2 / (pi^2 (rho - x)^2 x^4 + 16 (rho - 2x)^2)]
double total_closed(double rho, double x);

//! Root rho* in (x, 1) of x J0(rho - x) = 2 J1(rho - x), for 0 < x < 0.5.
//! Throws NoResonance when no sign change is found.
double revival_rho(double x);

//! Residual x J0(rho - x) - 2 J1(rho - x) of the revival condition.
double revival_residual(double rho, double x);

struct PeakPredictions
{
    double max_transport; //!< 16 / rho
    double width;         //!< pi rho^3 / 8
    double born_max;      //!< (pi^2 / 4) rho^3, spin-1/2
};

PeakPredictions peak_predictions(double rho);
} // namespace pseudospin::asymptotics
