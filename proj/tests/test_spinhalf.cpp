#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pseudospin/errors.hpp"
#include "pseudospin/spinhalf.hpp"

using namespace pseudospin;
using namespace pseudospin::spinhalf;

namespace
{
double born(double rho, double x)
{
    return M_PI * M_PI / 4.0 * rho * rho * x;
}
} // namespace

TEST_CASE("No scatterer gives zero coefficients")
{
    auto const sol = solve_half({0.0, 0.7});
    for (auto const& a : sol.a)
        CHECK(std::abs(a) < 1e-15);
    auto const cs = cross_sections_half(sol);
    CHECK(cs.total == 0.0);
    CHECK(cs.transport == 0.0);
}

TEST_CASE("Closed form matches the boundary-matching solve")
{
    double worst = 0.0;
    for (auto const& c : oracle::random_configs(200, 5))
    {
        for (int s : {1, -1})
        {
            auto const sol = solve_half({c.rho, c.x, s});
            for (int l = 0; l <= sol.l_max(); ++l)
            {
                auto const ref = oracle::spinhalf_boundary_solve(c.rho, c.x, s, l);
                worst = std::max({worst, oracle::deviation(sol.a_at(l), ref.a),
                                  oracle::deviation(sol.b_at(l), ref.b)});
            }
            // Folded negative channels against a direct solve.
            for (int l = -6; l < 0; ++l)
            {
                auto const ref = oracle::spinhalf_boundary_solve(c.rho, c.x, s, l);
                worst = std::max({worst, oracle::deviation(sol.a_at(l), ref.a),
                                  oracle::deviation(sol.b_at(l), ref.b)});
            }
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("Time-reversal pairing A_{-l-1} = A_l, B_{-l-1} = s s' B_l")
{
    for (ScatteringConfig cfg : {ScatteringConfig{0.1, 0.05}, ScatteringConfig{0.1, 0.3},
                                 ScatteringConfig{4.0, 1.2, -1}})
    {
        double const ss = cfg.band * interior_wave(cfg).band;
        for (int l = 0; l <= 6; ++l)
        {
            auto const p = channel_coefficients(cfg, l);
            auto const m = channel_coefficients(cfg, -l - 1);
            CHECK(oracle::deviation(m.a, p.a) < 1e-13);
            CHECK(oracle::deviation(m.b, ss * p.b) < 1e-13);
        }
    }
}

TEST_CASE("Unitarity")
{
    for (auto const& c : oracle::random_configs(300, 13))
    {
        for (auto const& a : solve_half({c.rho, c.x}).a)
        {
            CHECK(std::abs(std::abs(1.0 + 2.0 * a) - 1.0) < 1e-10);
            CHECK(std::abs(a.real() + std::norm(a)) < 1e-10);
        }
    }
}

TEST_CASE("Quadrature consistency")
{
    for (ScatteringConfig cfg : {ScatteringConfig{0.1, 0.05}, ScatteringConfig{2.0, 1.5},
                                 ScatteringConfig{6.0, 2.9}})
    {
        auto const cs = cross_sections_half(solve_half(cfg));
        double const total = oracle::periodic_integral(cs.differential, 512);
        double const transport = oracle::periodic_integral(
            [&](double t) { return (1.0 - std::cos(t)) * cs.differential(t); }, 512);
        CHECK(std::abs(total / cs.total - 1.0) < 1e-8);
        CHECK(std::abs(transport / cs.transport - 1.0) < 1e-8);
        CHECK(cs.transport <= 2.0 * cs.total);
    }
}

TEST_CASE("Born law at (0.1, 0.05)")
{
    double const t = cross_sections_half(solve_half({0.1, 0.05})).transport;
    CHECK(t == doctest::Approx(1.23e-3).epsilon(0.2));
}

TEST_CASE("Born regime: rho <= 0.2, x < rho within 30%")
{
    for (double rho : {0.05, 0.1, 0.2})
    {
        for (double f = 0.02; f < 1.0; f += 0.03)
        {
            double const x = f * rho;
            double const t = cross_sections_half(solve_half({rho, x})).transport;
            CHECK(std::abs(t / born(rho, x) - 1.0) < 0.3);
        }
    }
}

TEST_CASE("No resonance below rho = 0.1")
{
    double worst = 0.0;
    for (double x = 1e-4; x < 0.1; x += 1e-4)
        worst = std::max(worst, cross_sections_half(solve_half({0.1, x})).transport);
    CHECK(worst < 5e-3);
    CHECK(worst == doctest::Approx(M_PI * M_PI / 4.0 * 1e-3).epsilon(0.3));
}

TEST_CASE("Both components are continuous at r = R")
{
    for (auto const& c : oracle::random_configs(30, 17))
    {
        auto const sol = solve_half({c.rho, c.x});
        for (int k = 0; k < 64; ++k)
        {
            double const t = 2 * M_PI * k / 64;
            auto const out = wavefunction_outside(sol, 1.0, t);
            auto const in = wavefunction_inside(sol, 1.0, t);
            CHECK(oracle::deviation(out[0], in[0]) < 1e-10);
            CHECK(oracle::deviation(out[1], in[1]) < 1e-10);
        }
    }
}

TEST_CASE("Plane wave without scatterer")
{
    double const x = 0.9;
    auto const sol = solve_half({0.0, x});
    for (double r : {0.0, 0.5, 1.0, 3.0, 5.0 / x})
    {
        for (double t = 0.0; t < 2 * M_PI; t += 0.41)
        {
            auto const psi = wavefunction(sol, r, t);
            cplx const phase = std::polar(1.0, x * r * std::cos(t)) / std::sqrt(2.0);
            CHECK(std::abs(psi[0] - phase) < 1e-8);
            CHECK(std::abs(psi[1] - phase) < 1e-8);
        }
    }
    auto const psi = wavefunction(sol, 2.0, 0.5);
    CHECK(density(psi) == doctest::Approx(1.0));
    CHECK(current(psi)[0] == doctest::Approx(1.0));
}

TEST_CASE("Weak perturbation at (0.5, 0.2485)")
{
    auto const sol = solve_half({0.5, 0.2485});
    for (double r : {0.5, 1.0, 1.05, 2.0})
        for (double t = 0.0; t < 2 * M_PI; t += 0.5)
            CHECK(density(wavefunction(sol, r, t)) < 1.5);
}

TEST_CASE("Current is divergence free")
{
    auto const sol = solve_half({1.5, 0.8});
    for (double r : {0.4, 1.3, 2.7})
    {
        double const flux = oracle::periodic_integral(
            [&](double t) {
                auto const j = current(wavefunction(sol, r, t));
                return r * (j[0] * std::cos(t) + j[1] * std::sin(t));
            },
            256);
        CHECK(std::abs(flux) < 1e-6);
    }
}

TEST_CASE("Field grid")
{
    auto const sol = solve_half({0.5, 0.2485});
    auto const g = density_current(sol, {-2.0, 2.0, -2.0, 2.0, 16, 16});
    CHECK(g.components == 2);
    CHECK(g.psi.size() == 2u * 256u);
    for (double d : g.density)
        CHECK(d >= 0.0);
}

TEST_CASE("Errors")
{
    CHECK_THROWS_AS(solve_half({0.3, 0.3}), FlatBandDegenerate);
    CHECK_THROWS_AS(solve_half({0.3, 0.0}), DomainError);
    CHECK_THROWS_AS(solve_half({0.3, 0.1}, 0), DomainError);
}
