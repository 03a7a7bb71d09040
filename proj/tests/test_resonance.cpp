#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pseudospin/asymptotics.hpp"
#include "pseudospin/errors.hpp"
#include "pseudospin/resonance.hpp"

using namespace pseudospin;
using namespace pseudospin::resonance;
using std::numbers::pi;

namespace
{
constexpr auto spin1 = ParticleKind::spin1;
constexpr auto spinhalf = ParticleKind::spinhalf;

// Transport from a direct boundary solve, channels |l| <= 30.
double oracle_transport(double rho, double x)
{
    std::vector<cplx> a;
    for (int l = 0; l <= 31; ++l)
        a.push_back(oracle::spin1_boundary_solve(rho, x, 1, l).a);
    double sum = 0.0;
    for (int l = -30; l <= 30; ++l)
    {
        cplx const al = a[std::size_t(std::abs(l))];
        cplx const next = a[std::size_t(std::abs(l + 1))];
        sum += std::norm(al) - std::real(al * std::conj(next));
    }
    return 4.0 / x * sum;
}
} // namespace

TEST_CASE("Exact transport against a direct boundary solve")
{
    for (auto [rho, x] : {std::pair{0.1, 0.05}, {0.1, 0.02}, {0.5, 0.2485}, {2.3, 0.7}})
        CHECK(exact_transport(spin1, rho, x) == doctest::Approx(oracle_transport(rho, x)).epsilon(1e-10));
}

TEST_CASE("Weak-scatterer sweep at rho = 0.1")
{
    auto const p = sweep_peak(0.1, {0.005, 0.099}, spin1);
    CHECK(p.x_peak == doctest::Approx(0.05).epsilon(0.1));
    CHECK(p.height == doctest::Approx(160.0).epsilon(0.2));
    double const gamma = pi * 1e-3 / 8.0;
    CHECK(p.fwhm > gamma / 3.0);
    CHECK(p.fwhm < 3.0 * gamma);
    CHECK(p.quality > 2.0);
    CHECK(p.height == doctest::Approx(exact_transport(spin1, 0.1, p.x_peak)));
    CHECK(exact_transport(spin1, 0.1, p.x_peak * (1 + 1e-5)) <= p.height);
    CHECK(exact_transport(spin1, 0.1, p.x_peak * (1 - 1e-5)) <= p.height);

    CHECK_THROWS_AS(sweep_peak(0.1, {0.005, 0.099}, spinhalf), NoPeak);
}

TEST_CASE("Revival sweep at rho = 0.5")
{
    auto const p = sweep_peak(0.5, {0.01, 0.49}, spin1);
    CHECK(p.x_peak == doctest::Approx(0.2485).epsilon(0.05));
}

TEST_CASE("Peaks are deterministic")
{
    auto const a = sweep_peak(0.1, {0.005, 0.099}, spin1, 500);
    auto const b = sweep_peak(0.1, {0.005, 0.099}, spin1, 500);
    CHECK(a.x_peak == b.x_peak);
    CHECK(a.height == b.height);
    CHECK(a.fwhm == b.fwhm);
    CHECK(a.quality == b.quality);
}

TEST_CASE("Maximum transport against barrier strength")
{
    auto const s1 = max_vs_strength({0.05, 0.1, 0.2}, spin1);
    for (auto [rho, h] : s1)
    {
        CHECK(rho * h >= 12.8);
        CHECK(rho * h <= 19.2);
    }

    auto const sh = max_vs_strength({0.05, 0.1, 0.2}, spinhalf);
    for (auto [rho, h] : sh)
        CHECK(h == doctest::Approx(pi * pi / 4.0 * rho * rho * rho).epsilon(0.3));
    CHECK(sh.back().second == doctest::Approx(0.0197).epsilon(0.3));

    SUBCASE("weaker scatterers give larger maxima")
    {
        auto const m = max_vs_strength({0.05, 0.1, 0.15, 0.2, 0.25, 0.3}, spin1);
        for (std::size_t i = 1; i < m.size(); ++i)
            CHECK(m[i].second < m[i - 1].second);
    }
}

TEST_CASE("Ridge crest follows the revival condition")
{
    for (double x : {0.005, 0.01, 0.05, 0.1, 0.2, 0.3, 0.45})
    {
        double const crest = ridge_crest(x, {x * (1 + 1e-4), 1.0}, spin1);
        CHECK(crest == doctest::Approx(asymptotics::revival_rho(x)).epsilon(0.05));
    }
}

TEST_CASE("Strong-regime crests along rho")
{
    double const x = 0.01;
    auto const peaks = rho_scan_peaks(x, {1.0, 6.0}, spin1, 20001);
    double const c0 = 2.404825557695773 - x * std::log(asymptotics::gamma_e * x / 2.0);
    double const c1 = 3.831705970207512 + x;
    auto near = [&](double c) {
        return std::any_of(peaks.begin(), peaks.end(),
                           [c](Peak const& p) { return std::abs(p.x_peak - c) < 0.05; });
    };
    CHECK(near(c0));
    CHECK(near(c1));
    CHECK(rho_scan_peaks(x, {0.02, 1.0}, spinhalf, 2001).empty());
}

TEST_CASE("Weak-regime map")
{
    auto const m = map({0.02, 1.0}, {0.1, 0.45}, 491, 8, spin1);
    REQUIRE(m.values.size() == 491 * 8);
    CHECK(m.failed.empty());

    SUBCASE("cells are the pointwise transport")
    {
        for (std::size_t ix : {0u, 3u, 7u})
        {
            for (std::size_t ir : {0u, 100u, 490u})
            {
                auto const v = m.at(ix, ir);
                REQUIRE(v.has_value());
                CHECK(*v == std::log10(exact_transport(spin1, m.rho_axis[ir], m.x_axis[ix])));
            }
        }
        // Same point alone gives the same bits.
        auto const one = map({m.rho_axis[100], m.rho_axis[100]}, {m.x_axis[3], m.x_axis[3]}, 1, 1, spin1);
        REQUIRE(one.values.size() == 1);
        CHECK(one.values[0] == m.at(3, 100));
    }

    SUBCASE("crest in every row sits on the revival curve")
    {
        for (std::size_t ix = 0; ix < m.x_axis.size(); ++ix)
        {
            std::size_t best = 0;
            for (std::size_t ir = 0; ir < m.rho_axis.size(); ++ir)
            {
                if (m.at(ix, ir) && (!m.at(ix, best) || *m.at(ix, ir) > *m.at(ix, best)))
                    best = ir;
            }
            CHECK(m.rho_axis[best] == doctest::Approx(asymptotics::revival_rho(m.x_axis[ix])).epsilon(0.05));
        }
    }

    SUBCASE("markers")
    {
        bool revival = false;
        for (auto const& mk : m.markers)
        {
            CHECK(mk.rho >= 0.02);
            CHECK(mk.rho <= 1.0);
            if (mk.family == MarkerFamily::revival)
            {
                revival = true;
                CHECK(std::abs(asymptotics::revival_residual(mk.rho, mk.x)) < 1e-10);
            }
        }
        CHECK(revival);
    }
}

TEST_CASE("Strong-regime markers")
{
    auto const m = map({1.0, 6.0}, {0.005, 0.1}, 3, 3, spin1);
    int j0 = 0;
    int j1 = 0;
    for (auto const& mk : m.markers)
    {
        if (mk.family == MarkerFamily::j0_zero)
        {
            ++j0;
            double const shift = -mk.x * std::log(asymptotics::gamma_e * mk.x / 2);
            double const zero = mk.rho < 5.0 ? 2.404825557695773 : 5.520078110286311;
            CHECK(mk.rho == doctest::Approx(zero + shift).epsilon(1e-12));
        }
        if (mk.family == MarkerFamily::j1_zero)
            ++j1;
    }
    // Two J0 zeros (2.405, 5.520) and one J1 zero (3.832) per x row.
    CHECK(j0 == 6);
    CHECK(j1 == 3);
    CHECK(std::string(to_string(MarkerFamily::j1_zero)) == "j1_zero");
}

TEST_CASE("Spin-1/2 map stays at the Born level")
{
    auto const m = map({0.02, 1.0}, {0.005, 0.5}, 41, 21, spinhalf);
    for (std::size_t ix = 0; ix < m.x_axis.size(); ++ix)
    {
        for (std::size_t ir = 0; ir < m.rho_axis.size(); ++ir)
        {
            double const rho = m.rho_axis[ir];
            double const x = m.x_axis[ix];
            if (auto v = m.at(ix, ir); v && x < rho)
                CHECK(*v < std::log10(10.0 * pi * pi / 4.0 * rho * rho * x));
        }
    }
}

TEST_CASE("Masked degeneracy band")
{
    auto const m = map({0.1, 0.3}, {0.1, 0.3}, 5, 5, spin1);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK_FALSE(m.at(i, i).has_value());
    CHECK(m.at(0, 1).has_value());
    CHECK(m.failed.empty());
}

TEST_CASE("Axes")
{
    auto const lin = linear_axis({1.0, 2.0}, 5);
    CHECK(lin[2] == 1.5);
    CHECK(linear_axis({1.0, 2.0}, 1)[0] == 1.5);
    auto const lg = log_axis({1e-3, 1e-1}, 3);
    CHECK(lg[1] == doctest::Approx(1e-2));
    CHECK(lg.back() == 1e-1);
    CHECK_THROWS_AS(log_axis({0.0, 1.0}, 3), DomainError);
    CHECK_THROWS_AS(linear_axis({2.0, 1.0}, 3), DomainError);
    CHECK_THROWS_AS(linear_axis({1.0, 2.0}, 0), DomainError);
    CHECK_THROWS_AS(map({0.1, 0.2}, {0.0, 0.1}, 3, 3, spin1), DomainError);
}
