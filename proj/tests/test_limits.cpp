#include <doctest.h>

#include <cmath>
#include <functional>

#include "dephase/correlations.hpp"
#include "dephase/errors.hpp"
#include "dephase/limits.hpp"
#include "dephase/states.hpp"

using namespace dephase;

namespace {

ModelParams fig_params(double xB = 0.0) {
    ModelParams m;
    m.n_spins = 1001;
    m.coupling_angle = std::asin(std::sqrt(0.005));
    m.x1 = 100.0;
    m.xB = xB;
    return m;
}

// First point in [lo, hi] where pred flips from false to true, by bisection.
double bisect(double lo, double hi, const std::function<bool(double)>& pred) {
    REQUIRE(!pred(lo));
    REQUIRE(pred(hi));
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

XState mixture_at(const ModelParams& m, double c3, double t) {
    return evolve_two_qubit(mixture_state(c3, 1), decoherence_factors(m, Engine::limit, t));
}

}  // namespace

TEST_CASE("spin-flip probability") {
    CHECK(spin_flip_probability(0.0, FlipMode::exact) == 0.0);
    CHECK(spin_flip_probability(0.0, FlipMode::weak) == 0.0);
    CHECK(spin_flip_probability(std::sqrt(0.005), FlipMode::weak) == doctest::Approx(0.005).epsilon(1e-14));
    CHECK(spin_flip_probability(0.3, FlipMode::exact) == doctest::Approx(0.08733219254516084).epsilon(1e-14));
}

TEST_CASE("progress fraction") {
    const auto m = fig_params();
    CHECK(progress_fraction(m, Particle::A, 50.0) == 0.0);
    CHECK(progress_fraction(m, Particle::A, 1200.0) == 1.0);
    CHECK(progress_fraction(m, Particle::A, 600.0) == doctest::Approx(0.5));
    const auto d = fig_params(-200.0);
    const auto g = progress_fractions(d, 600.0);
    CHECK(g.gA == doctest::Approx(0.5));
    CHECK(g.gB == doctest::Approx(0.3));
    CHECK(g.gA >= g.gB);
}

TEST_CASE("limit single-particle factor") {
    const auto m = fig_params();
    CHECK(limit_f_single(m, 0.0) == 1.0);
    CHECK(limit_f_single(m, 5000.0) == doctest::Approx(0.08188004242933027).epsilon(1e-12));
    CHECK(limit_f_single(m, 600.0) == doctest::Approx(0.28614688960275325).epsilon(1e-12));
}

TEST_CASE("limit pair factors, same position") {
    auto m = fig_params();
    m.omegaA = 0.3;
    m.omegaB = 0.1;
    const auto f0 = limit_f_pair_same(m, 0.0);
    CHECK(std::abs(f0.f1) == doctest::Approx(1.0));
    CHECK(std::abs(f0.f2) == doctest::Approx(1.0));
    const auto fend = limit_f_pair_same(m, 1200.0);
    CHECK(std::abs(fend.f2) == doctest::Approx(4.494819291357204e-05).epsilon(1e-10));
    for (double t : {0.0, 150.0, 600.0, 1250.0}) {
        const auto f = limit_f_pair_same(m, t);
        CHECK(std::abs(f.f1) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::arg(f.f1) == doctest::Approx(std::remainder(0.2 * t, 2 * M_PI)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(limit_f_pair_same(fig_params(-200.0), 10.0), ConfigurationError);
}

TEST_CASE("limit pair factors, distinct positions") {
    const auto m = fig_params(-200.0);
    const auto f0 = limit_f_pair_distinct(m, 0.0);
    CHECK(std::abs(f0.f1) == 1.0);
    CHECK(std::abs(f0.f2) == 1.0);

    const auto fend = limit_f_pair_distinct(m, 1400.0);
    CHECK(std::abs(fend.f1) == 1.0);
    CHECK(std::abs(fend.f2) == doctest::Approx(std::exp(-2 * 5.005)).epsilon(1e-12));

    // gA = 0.3, gB = 0.1 at t = 400
    const auto f = limit_f_pair_distinct(m, 400.0);
    CHECK(std::abs(f.f1) == doctest::Approx(0.606227470186475).epsilon(1e-12));
    CHECK(std::abs(f.f2) == doctest::Approx(0.22279571580417368).epsilon(1e-12));

    SUBCASE("labels do not matter: B ahead of A gives the same moduli") {
        ModelParams swapped = m;
        std::swap(swapped.xA, swapped.xB);
        for (double t : {150.0, 400.0, 1150.0}) {
            CHECK(std::abs(limit_f_pair_distinct(swapped, t).f1) == std::abs(limit_f_pair_distinct(m, t).f1));
            CHECK(std::abs(limit_f_pair_distinct(swapped, t).f2) == std::abs(limit_f_pair_distinct(m, t).f2));
        }
    }
    SUBCASE("reduces to the same-position form") {
        const auto s = fig_params();
        for (double t : {150.0, 400.0, 1150.0}) {
            CHECK(std::abs(limit_f_pair_distinct(s, t).f2) ==
                  doctest::Approx(std::abs(limit_f_pair_same(s, t).f2)).epsilon(1e-14));
        }
    }
}

TEST_CASE("exact products converge to the limit at fixed nbar") {
    const double nbar = 5.005;
    double prev = 1.0;
    for (std::size_t n : {1000u, 10000u, 100000u}) {
        ModelParams m;
        m.n_spins = n;
        m.coupling_angle = std::asin(std::sqrt(nbar / static_cast<double>(n)));
        m.x1 = 100.0;
        double worst = 0.0;
        // integer times sit between spins, where the step count matches the ramp
        for (double t = 101.0; t <= m.x_last() + 50.0; t += std::max(1.0, std::floor(n / 2000.0))) {
            const double e = std::log(std::abs(exact_f_pair(m, t).f2));
            const double l = std::log(std::abs(limit_f_pair_same(m, t).f2));
            worst = std::max(worst, std::abs(e / l - 1.0));
        }
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("sudden death time") {
    const auto m = fig_params();
    CHECK(*sudden_death_time(m, 0.5) == doctest::Approx(209.75147738942155).epsilon(1e-12));
    CHECK_FALSE(sudden_death_time(m, -0.5).has_value());
    CHECK_FALSE(sudden_death_time(m, 0.0).has_value());
    CHECK(*sudden_death_time(m, 1e-9) == doctest::Approx(100.0).epsilon(1e-6));
    CHECK_THROWS_AS(sudden_death_time(m, 1.0), DomainError);
    CHECK_THROWS_AS(sudden_death_time(fig_params(-200.0), 0.5), ConfigurationError);
    // (1 - c3)/(1 + c3) below exp(-2 nbar): the concurrence never reaches zero
    CHECK_FALSE(sudden_death_time(m, 0.99999).has_value());

    SUBCASE("matches the zero of the concurrence") {
        for (double c3 : {0.1, 0.3, 0.5, 0.8, 0.95}) {
            const double root = bisect(0.0, 1300.0, [&](double t) { return concurrence_x(mixture_at(m, c3, t)) <= 0.0; });
            CHECK(root == doctest::Approx(*sudden_death_time(m, c3)).epsilon(1e-9));
        }
    }
}

TEST_CASE("discord sudden change time") {
    const auto m = fig_params();
    CHECK(*discord_sudden_change_time(m, 0.7) == doctest::Approx(143.48831880697762).epsilon(1e-12));
    CHECK_FALSE(discord_sudden_change_time(m, 0.2).has_value());
    CHECK_FALSE(discord_sudden_change_time(m, -0.7).has_value());
    // the switch value (3 c3 - 1)/(1 + c3) lies below exp(-2 nbar)
    CHECK_FALSE(discord_sudden_change_time(m, 1.0 / 3.0 + 1e-6).has_value());
    CHECK(*discord_sudden_change_time(m, 0.34) > 500.0);
    CHECK_THROWS_AS(discord_sudden_change_time(m, -1.0), DomainError);

    SUBCASE("matches the branch switch of chi") {
        for (double c3 : {0.4, 0.5, 0.7, 0.9}) {
            const double sw = bisect(0.0, 1300.0, [&](double t) {
                return classical_chi(mixture_at(m, c3, t)).branch == ChiBranch::c3_term;
            });
            CHECK(sw == doctest::Approx(*discord_sudden_change_time(m, c3)).epsilon(1e-9));
        }
    }
}

TEST_CASE("second-period change time") {
    const auto m = fig_params(-200.0);
    CHECK(*second_period_change_time(m, -0.8) == doctest::Approx(189.16825227341047).epsilon(1e-12));
    CHECK(*second_period_change_time(m, 0.8) == doctest::Approx(189.16825227341047).epsilon(1e-12));
    CHECK_FALSE(second_period_change_time(m, -0.5).has_value());
    CHECK_FALSE(second_period_change_time(m, 0.2).has_value());
    CHECK_FALSE(second_period_change_time(m, 0.6062).has_value());
    CHECK(second_period_change_time(m, 0.6063).has_value());
    CHECK_FALSE(second_period_change_time(m, 0.0).has_value());
    CHECK_FALSE(second_period_change_time(m, -std::exp(-0.5005)).has_value());
    CHECK_THROWS_AS(second_period_change_time(m, 1.5), DomainError);
    CHECK_THROWS_AS(second_period_change_time(fig_params(), 0.5), ConfigurationError);

    SUBCASE("matches the branch switch of chi while only A is inside") {
        for (double c3 : {-0.95, -0.8, 0.7, 0.9}) {
            const double sw = bisect(0.0, 299.0, [&](double t) {
                return classical_chi(mixture_at(m, c3, t)).branch == ChiBranch::c3_term;
            });
            CHECK(sw == doctest::Approx(*second_period_change_time(m, c3)).epsilon(1e-9));
        }
    }
}

TEST_CASE("asymptotic correlations") {
    const auto z = asymptotic_correlations(0.0);
    CHECK(z.C_0 == 0.0);
    CHECK(z.C_inf == 0.0);
    CHECK(z.D_0 == 0.0);
    CHECK(z.D_inf == doctest::Approx(0.31127812445913283).epsilon(1e-14));
    CHECK(asymptotic_correlations(-0.9).C_inf == doctest::Approx(0.9));
    CHECK(asymptotic_correlations(-0.9).C_0 == doctest::Approx(0.9));
    CHECK(asymptotic_correlations(0.9).C_inf == 0.0);
    CHECK_THROWS_AS(asymptotic_correlations(1.0), DomainError);

    SUBCASE("theta tie at c3 = 1/3 is continuous") {
        const double c = 1.0 / 3.0;
        CHECK(asymptotic_correlations(c - 1e-12).D_inf == doctest::Approx(asymptotic_correlations(c + 1e-12).D_inf));
    }

    SUBCASE("matches the long-time series once the |00><11| coherence is gone") {
        // nbar = 30 leaves exp(-60) of the coherence, far below 1e-9 bits.
        ModelParams m = fig_params();
        m.coupling_angle = std::asin(std::sqrt(30.0 / 1001.0));
        for (int k = -9; k <= 9; ++k) {
            const double c3 = 0.1 * k;
            const auto s = correlations_at(1300.0, mixture_state(c3, 1), limit_f_pair_same(m, 1300.0));
            CHECK(s.discord == doctest::Approx(asymptotic_correlations(c3).D_inf).epsilon(1e-9));
            CHECK(s.concurrence == doctest::Approx(asymptotic_correlations(c3).C_inf).epsilon(1e-12));
        }
    }

    SUBCASE("at the fig1 coupling the residual coherence shifts D by at most |f2|") {
        const auto m = fig_params();
        const double residual = std::abs(limit_f_pair_same(m, 1300.0).f2);
        for (int k = -9; k <= 9; ++k) {
            const double c3 = 0.1 * k;
            const auto s = correlations_at(1300.0, mixture_state(c3, 1), limit_f_pair_same(m, 1300.0));
            CHECK(std::abs(s.discord - asymptotic_correlations(c3).D_inf) <= residual);
        }
    }

    SUBCASE("initial values match the t = 0 series") {
        for (int k = -9; k <= 9; ++k) {
            const double c3 = 0.1 * k;
            const auto s = correlations_at(0.0, mixture_state(c3, -1), DecoherencePair{});
            CHECK(s.discord == doctest::Approx(asymptotic_correlations(c3).D_0).epsilon(1e-12));
            CHECK(s.concurrence == doctest::Approx(asymptotic_correlations(c3).C_0).epsilon(1e-12));
        }
    }

    SUBCASE("discord amplification on a left subinterval") {
        auto gain = [](double c3) {
            const auto a = asymptotic_correlations(c3);
            return a.D_inf - a.D_0;
        };
        CHECK(gain(-0.99) > 0.0);
        CHECK(gain(0.9) < 0.0);
        const double c0 = bisect(-0.99, 0.9, [&](double c3) { return gain(c3) <= 0.0; });
        CHECK(c0 > -1.0);
        CHECK(c0 < 1.0);
        for (double c3 = -0.99; c3 < c0 - 1e-6; c3 += 0.01) CHECK(gain(c3) > 0.0);
    }
}

TEST_CASE("negative c3 keeps the limit concurrence constant") {
    const auto m = fig_params();
    for (double c3 : {-0.9, -0.5, -0.1}) {
        for (double t = 0.0; t <= 1300.0; t += 10.0) {
            const double c = concurrence_x(mixture_at(m, c3, t));
            REQUIRE(c == doctest::Approx(std::abs(c3)).epsilon(1e-14));
        }
    }
}
