#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "h8/errors.hpp"
#include "h8/zeta.hpp"
#include "test_util.hpp"

using h8::cplx;
using h8test::near;

TEST_CASE("zeta at classical real points") {
    CHECK(near(h8::zeta_eval(2.0), cplx{1.6449340668482264, 0.0}, 1e-12));
    CHECK(near(h8::zeta_eval(0.0), cplx{-0.5, 0.0}, 1e-12));
    CHECK(near(h8::zeta_eval(-1.0), cplx{-1.0 / 12.0, 0.0}, 1e-12));
    CHECK(near(h8::zeta_eval(3.0), cplx{1.2020569031595943, 0.0}, 1e-12));
}

TEST_CASE("zeta near s = 1 matches the Laurent expansion on both branches") {
    // |s-1| below 1e-6 goes through the series, above it through the main
    // continuation; the leading behaviour 1/(s-1) + euler_gamma pins both.
    for (double u : {1e-7, 1e-5}) {
        cplx v = h8::zeta_eval(1.0 + u);
        CHECK(near(v, cplx{1.0 / u + 0.5772156649015329, 0.0}, 2e-5 * std::abs(v)));
    }
    CHECK_THROWS_AS(h8::zeta_eval(1.0), h8::PoleError);
    CHECK_THROWS_AS(h8::zeta_eval(cplx{1.0, 1e-13}), h8::PoleError);
}

TEST_CASE("zeta rejects arguments outside the continued region") {
    CHECK_THROWS_AS(h8::zeta_eval(-2.5), h8::RangeError);
    CHECK_THROWS_AS(h8::zeta_eval(cplx{0.5, 2e4}), h8::RangeError);
}

TEST_CASE("hurwitz_zeta reduces to zeta at a = 1 and obeys the dyadic identity") {
    for (cplx s : {cplx{2.0, 0.0}, cplx{0.5, 12.0}, cplx{-1.5, 3.0}}) {
        CHECK(near(h8::hurwitz_zeta(s, 1.0), h8::zeta_eval(s), 1e-11));
        // zeta(s, 1/2) = (2^s - 1) zeta(s)
        cplx rhs = (std::pow(cplx{2.0, 0.0}, s) - 1.0) * h8::zeta_eval(s);
        CHECK(std::abs(h8::hurwitz_zeta(s, 0.5) - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
    CHECK_THROWS_AS(h8::hurwitz_zeta(2.0, 0.0), h8::ArgumentError);
    CHECK_THROWS_AS(h8::hurwitz_zeta(2.0, 1.5), h8::ArgumentError);
}

TEST_CASE("xi is symmetric under s -> 1-s and takes its known boundary values") {
    CHECK(near(h8::xi_eval(0.5), cplx{0.49712077818831411, 0.0}, 1e-12));
    CHECK(near(h8::xi_eval(0.0), cplx{0.5, 0.0}, 1e-12));
    CHECK(near(h8::xi_eval(1.0), cplx{0.5, 0.0}, 1e-12));
    for (cplx s : {cplx{0.3, 7.0}, cplx{0.8, 21.3}, cplx{-0.1, 2.0}}) {
        cplx a = h8::xi_eval(s), b = h8::xi_eval(1.0 - s);
        CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("functional equation residual is tiny away from the poles") {
    for (cplx s : {cplx{0.3, 7.0}, cplx{0.5, 30.0}, cplx{0.9, 3.0}, cplx{-0.4, 11.0}}) {
        CHECK(h8::functional_eq_residual_zeta(s) < 1e-9);
    }
    CHECK_THROWS_AS(h8::functional_eq_residual_zeta(cplx{0.0, 0.0}), h8::PoleError);
    CHECK_THROWS_AS(h8::functional_eq_residual_zeta(cplx{1.0, 0.0}), h8::PoleError);
}

TEST_CASE("hardy_z has the modulus of zeta on the line and flags the first zero") {
    for (double t : {5.0, 20.0, 77.7}) {
        CHECK(near(std::abs(h8::hardy_z(t)), std::abs(h8::zeta_eval(cplx{0.5, t})), 1e-12));
    }
    CHECK(std::abs(h8::hardy_z(14.134725141734694)) < 1e-8);
    // theta is odd and vanishes at t = 0
    CHECK(h8::hardy_theta(0.0) == 0.0);
}

TEST_CASE("zeta_log_deriv matches the von Mangoldt series at s = 3") {
    // -zeta'/zeta(3) = sum Lambda(n)/n^3, computed here by trial division; the
    // dropped tail is below 2e-10.
    double sum = 0.0;
    const int limit = 200000;
    std::vector<int> least(limit + 1, 0);
    for (int p = 2; p <= limit; ++p) {
        if (least[p])
            continue;
        for (long long m = p; m <= limit; m += p)
            if (!least[m])
                least[m] = p;
    }
    for (int n = 2; n <= limit; ++n) {
        int p = least[n], m = n;
        while (m % p == 0)
            m /= p;
        if (m == 1)
            sum += std::log(double(p)) / (double(n) * n * n);
    }
    CHECK(near(h8::zeta_log_deriv(3.0), cplx{-sum, 0.0}, 1e-7));
}

TEST_CASE("lemma3_residual is small off the zero set and guarded on it") {
    CHECK(h8::lemma3_residual(cplx{0.6, 5.0}) < 1e-6);
    CHECK(h8::lemma3_residual(cplx{0.4, 17.3}) < 1e-6);
    CHECK_THROWS_AS(h8::lemma3_residual(cplx{0.5, 14.134725141734694}), h8::NearZeroError);
}

TEST_CASE("the first three zeros come out at the catalogued heights") {
    auto records = h8::find_zeta_zeros(0.0, 30.0);
    REQUIRE(records.size() == 3);
    const double expected[3] = {14.1347251417347, 21.0220396387716, 25.0108575801457};
    for (int i = 0; i < 3; ++i) {
        CHECK(near(records[i].gamma_height, expected[i], 1e-6));
        CHECK(records[i].residual_abs <= 1e-8);
        CHECK(records[i].refinement_width <= 1e-9);
        CHECK(records[i].source == "zeta");
    }
}

TEST_CASE("zero counts to 100 and 144 match the catalogue") {
    auto to100 = h8::find_zeta_zeros(0.0, 100.0);
    CHECK(to100.size() == 29);
    CHECK(near(to100.front().gamma_height, 14.134725, 1e-4));
    for (std::size_t i = 1; i < to100.size(); ++i)
        CHECK(to100[i - 1].gamma_height < to100[i].gamma_height);

    auto to144 = h8::find_zeta_zeros(0.0, 144.0);
    REQUIRE(to144.size() == 50);
    CHECK(near(to144.back().gamma_height, 143.111845807621, 1e-6));
}

TEST_CASE("scan bounds are validated") {
    CHECK_THROWS_AS(h8::find_zeta_zeros(0.0, 1001.0), h8::RangeError);
    CHECK_THROWS_AS(h8::find_zeta_zeros(-1.0, 10.0), h8::ArgumentError);
    CHECK_THROWS_AS(h8::find_zeta_zeros(11.0, 10.0), h8::ArgumentError);
    CHECK(h8::find_zeta_zeros(10.0, 10.0).empty());
}

TEST_CASE("rectangle count agrees with the line count") {
    CHECK(h8::count_zeros_rectangle(10.0) == 0);
    CHECK(h8::count_zeros_rectangle(29.5) == 3);
    CHECK(h8::count_zeros_rectangle(50.5) == 10);
    CHECK(h8::count_zeros_rectangle(100.0) == 29);
    CHECK_THROWS_AS(h8::count_zeros_rectangle(0.0), h8::RangeError);
    CHECK_THROWS_AS(h8::count_zeros_rectangle(1.0e3 + 1.0), h8::RangeError);
}

TEST_CASE("zero CSV uses the fixed four-column schema") {
    std::ostringstream os;
    h8::write_zero_csv(os, {{1.5, 1e-10, "zeta", 2e-11}});
    CHECK(os.str() == "source,gamma_height,residual_abs,refinement_width\n"
                      "zeta,1.5,1e-10,2e-11\n");
}
