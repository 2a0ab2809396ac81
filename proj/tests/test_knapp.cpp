#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "slab/knapp.hpp"
#include "slab/report.hpp"

using namespace slab;

namespace {

KnappConfig reduced(int d = 2, double a = 2.0) {
    KnappConfig cfg;
    cfg.d = d;
    cfg.a = a;
    cfg.n_t = 24;
    cfg.n_rho = 24;
    cfg.n_theta = 32;
    cfg.n_theta_tail = 24;
    return cfg;
}

} // namespace

TEST_CASE("config guards") {
    CHECK_THROWS_AS(
        [] { KnappConfig c; c.d = 4; c.validate(); }(), std::domain_error);
    CHECK_THROWS_AS(
        [] { KnappConfig c; c.delta = 0.3; c.validate(); }(), std::domain_error);
    CHECK_THROWS_AS(
        [] { KnappConfig c; c.d = 3; c.delta = 1.0 / 32.0; c.validate(); }(),
        std::domain_error);
    CHECK_THROWS_AS(
        [] { KnappConfig c; c.a = 1.0; c.validate(); }(), std::domain_error);
    CHECK_NOTHROW([] { KnappConfig c; c.validate(); }());
}

TEST_CASE("box measure") {
    // half-width c delta in every direction, c = 1/2
    CHECK(knapp_box_measure(2, 0.1) == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(knapp_box_measure(3, 0.1) ==
          doctest::Approx(M_PI * 1e-3 / 4.0).epsilon(1e-14));
    CHECK(knapp_f_l2(2, 0.1) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("extension at the origin is the box measure") {
    for (int d : {2, 3}) {
        KnappConfig cfg = reduced(d);
        cfg.delta = 1.0 / 16.0;
        auto v = knapp_extension(cfg, 0.0, 0.0, 0.0);
        CHECK(v.real() ==
              doctest::Approx(knapp_box_measure(d, cfg.delta)).epsilon(1e-10));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("extension modulus never exceeds the box measure") {
    KnappConfig cfg = reduced(2);
    cfg.delta = 1.0 / 16.0;
    const double box = knapp_box_measure(2, cfg.delta);
    for (double t : {0.0, -40.0, -256.0}) {
        for (double x1 : {0.0, 17.0, 300.0}) {
            for (double xp : {0.0, 2.5}) {
                CHECK(std::abs(knapp_extension(cfg, t, x1, xp)) <= box * (1.0 + 1e-10));
            }
        }
    }
}

TEST_CASE("separable fast path matches direct quadrature") {
    KnappConfig cfg = reduced(2, 2.0);
    cfg.delta = 1.0 / 8.0;
    const double c = kKnappBox * cfg.delta;
    for (auto [t, x1, xp] : {std::tuple<double, double, double>{-3.0, 5.0, 1.0},
                             {-64.0, 130.0, 0.4},
                             {0.0, 2.0, 7.0}}) {
        // dense midpoint reference over the box
        const int n = 600;
        std::complex<double> ref{0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            const double xi1 = 1.0 + c * (-1.0 + (2.0 * i + 1.0) / n);
            for (int j = 0; j < n; ++j) {
                const double xi2 = c * (-1.0 + (2.0 * j + 1.0) / n);
                const double ph = t * (xi1 * xi1 + xi2 * xi2) + x1 * xi1 + xp * xi2;
                ref += std::polar(1.0, ph);
            }
        }
        ref *= (2.0 * c / n) * (2.0 * c / n);
        CHECK(std::abs(knapp_extension(cfg, t, x1, xp) - ref) < 1e-7);
    }
}

TEST_CASE("generic dispersion order stays sane") {
    KnappConfig cfg = reduced(2, 3.0);
    cfg.delta = 1.0 / 8.0;
    auto v = knapp_extension(cfg, 0.0, 0.0, 0.0);
    CHECK(v.real() == doctest::Approx(knapp_box_measure(2, cfg.delta)).epsilon(1e-10));
    const double r = knapp_ratio(cfg);
    CHECK(r > 0.0);
    CHECK(std::isfinite(r));
    cfg.delta = 1.0 / 16.0;
    CHECK(std::isfinite(knapp_ratio(cfg)));
}

TEST_CASE("verdict thresholds") {
    CHECK(knapp_verdict({0.12, 0.0, 0.01, 4}) == "consistent");
    CHECK(knapp_verdict({-0.12, 0.0, 0.01, 4}) == "violated");
    CHECK(knapp_verdict({0.005, 0.0, 0.01, 4}) == "inconclusive");
    CHECK(knapp_verdict({-0.005, 0.0, 0.01, 4}) == "inconclusive");
}

TEST_CASE("scan separates admissible from inadmissible angular exponents") {
    KnappConfig cfg = reduced(2);
    cfg.q = 2.0;
    cfg.p = 8.0;

    cfg.s = 2.0;
    KnappScanResult ok = knapp_scan(cfg, 3, 5);
    CHECK(ok.predicted == doctest::Approx(0.125));
    CHECK(ok.verdict == "consistent");
    CHECK(std::abs(ok.fit.slope - 0.125) < 0.15);

    cfg.s = 4.0;
    KnappScanResult bad = knapp_scan(cfg, 3, 5);
    CHECK(bad.predicted == doctest::Approx(-0.125));
    CHECK(bad.verdict == "violated");
    CHECK(std::abs(bad.fit.slope + 0.125) < 0.15);

    // ||f||_2 scales like delta^{d/2} by construction
    CHECK(ok.f_fit.slope == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(ok.rows.size() == 3);
    for (std::size_t i = 1; i < ok.rows.size(); ++i)
        CHECK(ok.rows[i].delta == doctest::Approx(0.5 * ok.rows[i - 1].delta));
}
