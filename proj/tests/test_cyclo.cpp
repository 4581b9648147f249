#include <cmath>
#include <atomic>
#include <complex>
#include <thread>
#include <vector>

#include "doctest.h"
#include "logverlinde/cyclo.hpp"

using namespace verlinde;

namespace {
bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
    return std::abs(a - b) < tol;
}
}  // namespace

TEST_CASE("powers of the generator") {
    // zeta * zeta^{2p-1} = 1
    int p = 3;
    CHECK(CycloNum::zeta_pow(p, 1) * CycloNum::zeta_pow(p, 2 * p - 1) == CycloNum::one(p));
    // zeta + zeta^{-1} = 0 at p = 2 (zeta = i)
    CHECK((CycloNum::zeta_pow(2, 1) + CycloNum::zeta_pow(2, -1)).is_zero());
    // x / x = 1
    CycloNum x = CycloNum::zeta_pow(5, 1) - CycloNum::zeta_pow(5, -1);
    CHECK(x / x == CycloNum::one(5));
}

TEST_CASE("field arithmetic") {
    int p = 5;
    CycloNum a = CycloNum::zeta_pow(p, 3) + CycloNum(p, Rational(2));
    CycloNum b = CycloNum::zeta_pow(p, 7) - CycloNum(p, make_rational(1, 3));
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK(a * a.inverse() == CycloNum::one(p));
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(a / CycloNum::zero(p), std::domain_error);
    CHECK_THROWS_AS(a + CycloNum::one(3), std::invalid_argument);
}

TEST_CASE("non-canonical rationals are normalized on entry") {
    Rational two_fourths(2, 4);  // gmp does not canonicalize two-int construction
    CycloNum v(4, two_fourths);
    CHECK(v == CycloNum(4, make_rational(1, 2)));
    CHECK(v * Rational(2) == CycloNum::one(4));
}

TEST_CASE("sin_ratio") {
    CHECK(sin_ratio(2, 1, 3) == CycloNum::one(3));  // sin(2pi/3) = sin(pi/3)
    CHECK(sin_ratio(0, 1, 4).is_zero());
    CHECK(sin_ratio(0, 1, 5).is_zero());
    CHECK(close(sin_ratio(2, 1, 4).embed(), {1.4142135623730951, 0.0}, 1e-9));
    CHECK_THROWS_AS(sin_ratio(1, 4, 4), std::domain_error);
    CHECK_THROWS_AS(sin_ratio(1, 3, 3), std::domain_error);
}

TEST_CASE("sin_ratio inversion and reflection") {
    for (int p : {2, 3, 4, 5, 6})
        for (int a = 1; a < p; ++a)
            for (int b = 1; b < p; ++b) {
                CHECK(sin_ratio(a, b, p) * sin_ratio(b, a, p) == CycloNum::one(p));
                CHECK(sin_ratio(p - a, b, p) == sin_ratio(a, b, p));
            }
}

TEST_CASE("embedding") {
    CHECK(close(CycloNum::one(4).embed(), {1.0, 0.0}, 1e-14));
    CHECK(close(CycloNum::zeta_pow(2, 1).embed(), {0.0, 1.0}, 1e-14));
    CHECK(close(two_cos(5, 1).embed(), {1.6180339887498949, 0.0}, 1e-10));
    CHECK_THROWS_AS(CycloNum::one(3).embed(32), std::invalid_argument);
    // canonical representative of zeta^{2p} is 1
    CHECK(close(CycloNum::zeta_pow(7, 14).embed(), {1.0, 0.0}, 1e-14));

    // embedding is multiplicative within tolerance
    CycloNum a = CycloNum(6, Rational(1000000)) * CycloNum::zeta_pow(6, 5) + CycloNum(6, Rational(3));
    CycloNum b = CycloNum::zeta_pow(6, 2) - CycloNum(6, Rational(17));
    CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) <
          1e-12 * std::max(1.0, std::abs(a.embed() * b.embed())));
    // higher requested precision stays consistent
    CHECK(close(a.embed(200), a.embed(64), 1e-9));
}

TEST_CASE("lift into the doubled field") {
    for (int p : {2, 3, 5}) {
        CycloNum x = CycloNum::zeta_pow(p, 1) + CycloNum(p, make_rational(3, 7));
        CHECK(close(x.lift(2).embed(), x.embed(), 1e-13));
        CHECK(x.lift(2) * x.lift(2) == (x * x).lift(2));
    }
}

TEST_CASE("half-angle helpers live in the doubled field") {
    for (int p : {2, 3, 4, 5}) {
        for (int a = 0; a <= 2 * p; ++a) {
            auto s = sin_in_double_field(p, a).embed();
            auto c = cos_in_double_field(p, a).embed();
            CHECK(close(s, {std::sin(M_PI * a / p), 0.0}, 1e-12));
            CHECK(close(c, {std::cos(M_PI * a / p), 0.0}, 1e-12));
        }
    }
}

TEST_CASE("wire format") {
    CycloNum x = CycloNum::zeta_pow(3, 1) * make_rational(1, 2) + CycloNum(3, Rational(4));
    CHECK(x.to_string() == "4,1/2");
}

TEST_CASE("values are safe to use from concurrent workers") {
    std::vector<std::thread> workers;
    std::atomic<int> bad{0};
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([&bad, w] {
            int p = 2 + (w % 5);
            for (int i = 0; i < 200; ++i) {
                CycloNum a = CycloNum::zeta_pow(p, i) + CycloNum(p, Rational(i));
                if (!(a * a.inverse() == CycloNum::one(p)) && !a.is_zero()) ++bad;
            }
        });
    for (auto& t : workers) t.join();
    CHECK(bad == 0);
}
