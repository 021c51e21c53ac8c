#include "metallic/polynomial.hpp"

#include "random_support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace metallic;

namespace {
const Polynomial kZero;
}

TEST_CASE("canonical representation", "[polynomial]") {
    CHECK(Polynomial{}.is_zero());
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(!Polynomial{}.degree().has_value());  // no integer stands in for -inf
    CHECK(Polynomial{1, -1, 0, 0} == Polynomial{1, -1});
    CHECK(Polynomial{1, -1}.degree() == 1);
    CHECK(Polynomial::monomial(4).degree() == 4);
    CHECK(Polynomial::monomial(4, Rat(0)).is_zero());
    CHECK(Polynomial{5}.coefficient(0) == 5);
    CHECK(Polynomial{5}.coefficient(3) == 0);  // beyond the stored range
}

TEST_CASE("addition", "[polynomial]") {
    CHECK(Polynomial{1, -1} + Polynomial{1, 1} == Polynomial{2});
    // f1 + d1 gives the first s row: (2 - X) + (2 - 2X + X^2) = 4 - 3X + X^2
    CHECK(Polynomial{2, -1} + Polynomial{2, -2, 1} == Polynomial{4, -3, 1});

    std::mt19937 rng(11);
    for (int round = 0; round < 100; ++round) {
        Polynomial p = testing::random_polynomial(rng, 9, 1000, 40);
        CHECK(p + kZero == p);
        CHECK(p - p == kZero);
    }
}

TEST_CASE("scaling", "[polynomial]") {
    CHECK(Rat(-1) * Polynomial{1, -1} == Polynomial{-1, 1});
    // the fourth t row scaled by 1/16: (48 + 2X^2)/16 = 3 + X^2/8
    CHECK(make_rat(1, 16) * Polynomial{48, 0, 2} ==
          Polynomial{3, 0, make_rat(1, 8)});

    std::mt19937 rng(13);
    for (int round = 0; round < 50; ++round) {
        CHECK((testing::random_polynomial(rng, 9, 1000, 40) * Rat(0)).is_zero());
    }
}

TEST_CASE("multiplication", "[polynomial]") {
    CHECK(Polynomial::monomial(1) * Polynomial{2, -1} == Polynomial{0, 2, -1});
    CHECK(Polynomial{1, -1} * Polynomial{1, -1} == Polynomial{1, -2, 1});
    CHECK((Polynomial{1, 2} * kZero).is_zero());

    // the t recursion at index 2 collapses to a constant:
    // C(2,0) X^2 f0 + C(2,1) X f1 + C(2,2) f2 = 8
    Polynomial t2 = Polynomial::monomial(2) * Polynomial{1} +
                    Rat(2) * (Polynomial::monomial(1) * Polynomial{2, -1}) +
                    Polynomial{8, -4, 1};
    CHECK(t2 == Polynomial{8});

    std::mt19937 rng(17);
    for (int round = 0; round < 100; ++round) {
        Polynomial a = testing::random_polynomial(rng, 7, 500, 20);
        Polynomial b = testing::random_polynomial(rng, 7, 500, 20);
        if (!a.is_zero() && !b.is_zero()) {
            REQUIRE((a * b).degree() == *a.degree() + *b.degree());
        }
        // evaluation is a ring homomorphism
        Rat x = testing::random_rational(rng, 50, 10);
        CHECK((a + b)(x) == a(x) + b(x));
        CHECK((a * b)(x) == a(x) * b(x));
    }
}

TEST_CASE("evaluation", "[polynomial]") {
    CHECK(Polynomial{2, -1}(Rat(1)) == 1);
    // fourth f row at 2: 48 - 48 + 32 - 8
    CHECK(Polynomial{48, -24, 8, -1}(Rat(2)) == 24);
    CHECK(kZero(Rat(3)) == 0);
    // the constant term contributes at x = 0; no 0^0 ambiguity
    CHECK(Polynomial{7, 9, 4}(Rat(0)) == 7);
    CHECK(Polynomial{make_rat(1, 3), 1}(make_rat(-1, 3)) == 0);
}

TEST_CASE("argument shift", "[polynomial]") {
    // X^2 shifted down: (X-1)^2 = X^2 - 2X + 1
    CHECK(Polynomial::monomial(2).shifted(-1) == Polynomial{1, -2, 1});
    // 3 - 2X shifted down: -2(X-1) + 3 = 5 - 2X
    CHECK(Polynomial{3, -2}.shifted(-1) == Polynomial{5, -2});
    CHECK(kZero.shifted(-5).is_zero());
    CHECK(Polynomial{42}.shifted(9) == Polynomial{42});

    std::mt19937 rng(19);
    std::uniform_int_distribution<long long> deltas(-6, 6);
    for (int round = 0; round < 200; ++round) {
        Polynomial p = testing::random_polynomial(rng, 10, 1000, 30);
        Polynomial q = testing::random_polynomial(rng, 10, 1000, 30);
        long long delta = deltas(rng);
        Rat x = testing::random_rational(rng, 40, 8);
        Rat c = testing::random_rational(rng, 40, 8);

        // shifting substitutes the argument
        CHECK(p.shifted(delta)(x) == p(x + Rat(delta)));
        // linearity
        CHECK((p + q).shifted(delta) == p.shifted(delta) + q.shifted(delta));
        CHECK((c * p).shifted(delta) == c * p.shifted(delta));
        // down then up is the identity
        CHECK(p.shifted(-1).shifted(1) == p);
        // the leading coefficient never moves
        CHECK(p.shifted(delta).leading_coefficient() == p.leading_coefficient());
        CHECK(p.shifted(delta).degree() == p.degree());
    }
}
