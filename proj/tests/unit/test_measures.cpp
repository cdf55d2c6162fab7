#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "explicit_lab/error.hpp"
#include "explicit_lab/measures.hpp"
#include "explicit_lab/special_functions.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace explicit_lab;
using std::numbers::pi;

namespace {

const ZeroTable& three_zeros() {
    static const ZeroTable t({14.134725141734694, 21.022039638771555, 25.010857580145689}, "three");
    return t;
}

double bounds(const PairingReport& r) { return r.atom_tail_bound + r.quad_err_bound; }

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("mu with sieve limit 3") {
    const auto mu = mu_prime_side(sieve_lambda(3));
    const auto atoms = mu.atoms();
    REQUIRE(atoms.size() == 4);
    const double l2 = std::log(2.0), l3 = std::log(3.0);
    CHECK(atoms[0].position == -l3);
    CHECK(atoms[1].position == -l2);
    CHECK(atoms[2].position == l2);
    CHECK(atoms[3].position == l3);
    CHECK(atoms[2].weight == doctest::Approx(-l2 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(atoms[3].weight == doctest::Approx(-l3 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(atoms[0].weight == atoms[3].weight);
    CHECK(mu.even());
    CHECK(mu.density().kind == DensityKind::cosh_half);
    CHECK(mu.density().value(1.0) == doctest::Approx(2.0 * std::cosh(0.5)));
}

TEST_CASE("mu restricted to n <= 1 is pure density") {
    const auto mu = mu_prime_side(sieve_lambda(10), 1);
    CHECK(mu.atoms().empty());
    CHECK(mu.density().kind == DensityKind::cosh_half);
}

TEST_CASE("mu atom census up to 1e6") {
    const auto mu = mu_prime_side(support::sieve_1e6());
    CHECK(mu.atoms().size() == 2 * oracle::kPrimePowers1e6);
    CHECK(mu.coverage() == doctest::Approx(std::log(1e6)));
}

TEST_CASE("nu from three ordinates") {
    const auto nu = nu_zero_side(three_zeros());
    const auto atoms = nu.atoms();
    REQUIRE(atoms.size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
        const double pos = three_zeros().ordinates()[i] / (2 * pi);
        CHECK(atoms[3 + i].position == doctest::Approx(pos).epsilon(1e-15));
        CHECK(atoms[2 - i].position == -atoms[3 + i].position);
        CHECK(atoms[3 + i].weight == 1.0);
    }
    CHECK(atoms[3].position == doctest::Approx(2.2496).epsilon(1e-4));
    CHECK(nu.density().value(0.3) == doctest::Approx(-2.0 * theta_prime(2 * pi * 0.3)));
    CHECK_THROWS_AS(nu_zero_side(ZeroTable{}), DomainError);
}

TEST_CASE("dirac comb construction") {
    CHECK(dirac_comb(0).atoms().size() == 1);
    CHECK(dirac_comb(0).atoms()[0].position == 0.0);
    CHECK(dirac_comb(2).atoms().size() == 5);
    double total = 0.0;
    const auto comb = dirac_comb(7);
    for (const auto& a : comb.atoms()) total += a.weight;
    CHECK(total == 15.0);
    CHECK_THROWS_AS(dirac_comb(-1), DomainError);
}

TEST_CASE("signed measure validation") {
    CHECK_THROWS_AS(SignedMeasure("m", {{1.0, 0.0}}, Density{}, false, 1.0, AtomTail::none, "x"), DomainError);
    CHECK_THROWS_AS(SignedMeasure("m", {{NAN, 1.0}}, Density{}, false, 1.0, AtomTail::none, "x"), DomainError);
    CHECK_THROWS_AS(SignedMeasure("m", {{1.0, INFINITY}}, Density{}, false, 1.0, AtomTail::none, "x"), DomainError);
    CHECK_THROWS_AS(SignedMeasure("m", {{1.0, 1.0}}, Density{}, true, 1.0, AtomTail::none, "x"), DomainError);
    CHECK_THROWS_AS(SignedMeasure("m", {{1.0, 1.0}, {-1.0, 2.0}}, Density{}, true, 1.0, AtomTail::none, "x"),
                    DomainError);
    Density custom;
    custom.kind = DensityKind::custom;
    CHECK_THROWS_AS(SignedMeasure("m", {}, custom, false, 1.0, AtomTail::none, "x"), DomainError);
    const SignedMeasure ok("m", {{2.0, 1.0}, {-1.0, 3.0}}, Density{}, false, 2.0, AtomTail::none, "x");
    CHECK(ok.atoms()[0].position == -1.0);
}

TEST_CASE("comb paired with the unit Gaussian") {
    const auto r = pair(dirac_comb(50), dilated_gaussian(1.0), Side::time);
    double expect = 1.0;
    for (int n = 1; n <= 6; ++n) expect += 2.0 * std::exp(-pi * n * n);
    CHECK(r.total == doctest::Approx(expect).epsilon(1e-15));
    CHECK(r.total == r.atom_sum + r.density_integral);
    CHECK(r.density_integral == 0.0);
}

TEST_CASE("Poisson summation through the pairing engine") {
    for (double a : {0.25, 1.0, 4.0}) {
        const auto comb = dirac_comb(50);
        const auto fn = dilated_gaussian(a);
        const auto t = pair(comb, fn, Side::time);
        const auto f = pair(comb, fn, Side::freq);
        CHECK(std::abs(t.total - f.total) < 1e-10);
    }
}

TEST_CASE("mu paired with the Gaussian pair matches the oracle") {
    const auto mu = mu_prime_side(support::sieve_1e6());
    const auto r = pair(mu, gaussian_pair(std::log(2.0), 0.25), Side::freq);
    CHECK(std::abs(r.total - oracle::kPrimeSidePair) <= bounds(r) + 1e-13);
    CHECK(r.total == r.atom_sum + r.density_integral);
    CHECK(r.atom_tail_bound >= 0.0);
    CHECK(r.quad_err_bound >= 0.0);
}

TEST_CASE("nu paired with the dilated Gaussian matches the oracle") {
    const auto nu = nu_zero_side(support::zeros_10k());
    const auto r = pair(nu, dilated_gaussian(4.0), Side::time);
    CHECK(std::abs(r.total - oracle::kZeroSideDgauss4) <= bounds(r) + 1e-13);
}

TEST_CASE("parity annihilation") {
    const auto nu = nu_zero_side(support::zeros_10k());
    const auto mu = mu_prime_side(support::sieve_1e6());
    const auto comb = dirac_comb(60);
    for (const auto& fn : {hermite_combo({0.0, 1.0}), hermite_combo({0.0, 0.5, 0.0, -2.0}), hermite_combo({0.0, 0.0, 0.0, 0.0, 0.0, 1.0})}) {
        const auto a = pair(nu, fn, Side::time);
        const auto b = pair(mu, fn, Side::freq);
        const auto c = pair(comb, fn, Side::time);
        const auto d = pair(mu, fn, Side::time);
        CHECK(std::abs(a.total) <= bounds(a) + 1e-15);
        CHECK(std::abs(b.total) <= bounds(b) + 1e-15);
        CHECK(std::abs(c.total) <= bounds(c) + 1e-15);
        CHECK(std::abs(d.total) <= bounds(d) + 1e-15);
    }
}

TEST_CASE("complex transforms need an even measure") {
    const SignedMeasure lopsided("m", {{0.5, 1.0}}, Density{}, false, 10.0, AtomTail::none, "x");
    CHECK_THROWS_AS(pair(lopsided, hermite_combo({0.0, 1.0}), Side::freq), AdmissibilityError);
    CHECK_NOTHROW(pair(lopsided, hermite_combo({0.0, 1.0}), Side::time));
}

TEST_CASE("coverage errors name the deficient data") {
    const auto nu = nu_zero_side(support::zeros_10k().prefix(20));
    try {
        pair(nu, dilated_gaussian(400.0), Side::time);
        FAIL("expected a coverage error");
    } catch (const CoverageError& e) {
        CHECK(e.resource() == "zeros");
    }
    const auto mu = mu_prime_side(sieve_lambda(1000));
    try {
        pair(mu, dilated_gaussian(0.01), Side::freq);
        FAIL("expected a coverage error");
    } catch (const CoverageError& e) {
        CHECK(e.resource() == "primes");
    }
}

TEST_CASE("budget honesty under a coarser cutoff and a tighter quadrature") {
    const auto nu = nu_zero_side(support::zeros_10k());
    const auto mu = mu_prime_side(support::sieve_1e6());
    const auto comb = dirac_comb(80);
    struct Case {
        const SignedMeasure* m;
        TestFunction fn;
        Side side;
    };
    const std::vector<Case> cases{{&nu, gaussian_pair(std::log(2.0), 0.25), Side::time},
                                  {&nu, dilated_gaussian(4.0), Side::time},
                                  {&mu, gaussian_pair(std::log(2.0), 0.25), Side::freq},
                                  {&mu, dilated_gaussian(4.0), Side::freq},
                                  {&comb, dilated_gaussian(0.25), Side::time},
                                  {&comb, dilated_gaussian(4.0), Side::freq}};
    for (const auto& c : cases) {
        PairOptions coarse;
        coarse.cutoff = 1e-8;
        const auto rough = pair(*c.m, c.fn, c.side, coarse);
        const auto fine = pair(*c.m, c.fn, c.side);
        CHECK(std::abs(rough.total - fine.total) <= bounds(rough));
        PairOptions tight;
        tight.quad_abs_tol = 5e-13;
        const auto tighter = pair(*c.m, c.fn, c.side, tight);
        CHECK(std::abs(tighter.total - fine.total) <= bounds(fine));
    }
}

TEST_CASE("larger data never moves the pairing beyond the earlier budget") {
    const auto fn = gaussian_pair(std::log(2.0), 0.25);
    const auto small = pair(nu_zero_side(support::zeros_10k().prefix(1000)), fn, Side::time);
    const auto large = pair(nu_zero_side(support::zeros_10k()), fn, Side::time);
    CHECK(std::abs(small.total - large.total) <= bounds(small));
    const auto mu5 = pair(mu_prime_side(sieve_lambda(100'000)), fn, Side::freq);
    const auto mu6 = pair(mu_prime_side(support::sieve_1e6()), fn, Side::freq);
    CHECK(std::abs(mu5.total - mu6.total) <= bounds(mu5));
}

TEST_CASE("growth profile of mu") {
    const auto& t = support::sieve_1e6();
    const auto mu = mu_prime_side(t);
    const std::vector<double> xs{0.5};
    CHECK(growth_profile(mu, xs)[0].net_mass == doctest::Approx(4 * std::sinh(0.25)).epsilon(1e-13));

    std::vector<double> grid;
    for (double x = -13.0; x <= 13.0; x += 0.173) grid.push_back(x);
    const auto g = growth_profile(mu, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = alpha(grid[i], t);
        const double scale = std::max(1.0, weighted_psum(std::exp(std::abs(grid[i])), t));
        REQUIRE(std::abs(g[i].net_mass + a) <= 1e-12 * scale);
        if (std::abs(grid[i]) >= 1.0)
            REQUIRE(std::abs(g[i].net_mass) <= oracle::kAlphaGrowth * std::pow(std::abs(grid[i]), 3));
    }
    const std::vector<double> far{14.0};
    CHECK_THROWS_AS(growth_profile(mu, far), CoverageError);
    const std::vector<double> unsorted{1.0, 0.5};
    CHECK_THROWS_AS(growth_profile(mu, unsorted), DomainError);
}

TEST_CASE("growth profile of mu is right-continuous at atoms") {
    const auto& t = support::sieve_1e6();
    const auto mu = mu_prime_side(t);
    const double l2 = std::log(2.0);
    const std::vector<double> xs{std::nextafter(l2, 0.0), l2};
    const auto g = growth_profile(mu, xs);
    CHECK(g[0].net_mass - g[1].net_mass == doctest::Approx(l2 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("growth profile of nu below the first atom") {
    const auto nu = nu_zero_side(support::zeros_10k());
    for (double x : {0.3, 1.0, 2.2}) {
        const std::vector<double> xs{x};
        CHECK(growth_profile(nu, xs)[0].net_mass ==
              doctest::Approx(-riemann_siegel_theta(2 * pi * x) / pi).epsilon(1e-12));
    }
    const std::vector<double> xs{3.4};
    CHECK(growth_profile(nu, xs)[0].net_mass ==
          doctest::Approx(2.0 - riemann_siegel_theta(2 * pi * 3.4) / pi).epsilon(1e-12));
}

}
