#include "isobaric/isopoly.hpp"
#include "isobaric/json.hpp"
#include "isobaric/roots.hpp"

#include "oracles.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

using namespace isobaric;

namespace {

IsobaricPoly poly(int k, int n, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    IsobaricPoly p(k, n);
    for (const auto& [a, c] : terms) p.add_term(ExponentVector(a), c);
    return p;
}

WeightVector unit_weight(int i, int len) {
    std::vector<Rational> w(static_cast<std::size_t>(len), 0);
    w[static_cast<std::size_t>(i - 1)] = 1;
    return WeightVector::from_list(w);
}

std::vector<Rational> ones(int k) { return std::vector<Rational>(static_cast<std::size_t>(k), 1); }

const WeightVector kRandomWeights =
    WeightVector::from_list({Rational(3), Rational(-1), Rational(4), Rational(1), Rational(-5), Rational(9)});

} // namespace

TEST(WipClosed, DegreeFourPolynomialIsLinearInWeights) {
    // w1 t1^4 + (2w1+w2) t1^2 t2 + w2 t2^2 + (w1+w3) t1 t3 + w4 t4, checked
    // on the basis vectors e_1..e_4 of the weight space
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> expected = {
        {{4, 0, 0, 0}, {1, 0, 0, 0}}, {{2, 1, 0, 0}, {2, 1, 0, 0}}, {{0, 2, 0, 0}, {0, 1, 0, 0}},
        {{1, 0, 1, 0}, {1, 0, 1, 0}}, {{0, 0, 0, 1}, {0, 0, 0, 1}},
    };
    for (int i = 1; i <= 4; ++i) {
        const IsobaricPoly p = wip_closed(unit_weight(i, 4), 4, 4);
        IsobaricPoly want(4, 4);
        for (const auto& [alpha, form] : expected) want.add_term(ExponentVector(alpha), form[i - 1]);
        EXPECT_EQ(p, want) << "weight e_" << i;
    }
}

TEST(WipClosed, FibonacciAndLucasSmallDegrees) {
    EXPECT_EQ(to_string(wip_closed(WeightVector::ones(), 3, 3)), "t1^3 + 2 t1 t2 + t3");
    EXPECT_EQ(to_string(wip_closed(WeightVector::ones(), 5, 3)), "t1^3 + 2 t1 t2 + t3");
    EXPECT_EQ(wip_closed(WeightVector::identity(), 2, 2), poly(2, 2, {{{2, 0}, 1}, {{0, 1}, 2}}));
    EXPECT_EQ(wip_closed(WeightVector::identity(), 4, 2), poly(4, 2, {{{2, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 2}}));
}

TEST(WipClosed, DegreeZeroConventions) {
    for (int k = 1; k <= 5; ++k) {
        EXPECT_EQ(gfp(k, 0), IsobaricPoly::constant(k, 1));
        EXPECT_EQ(glp(k, 0), IsobaricPoly::constant(k, k));
        EXPECT_EQ(wip_closed(kRandomWeights, k, 0), IsobaricPoly::constant(k, kRandomWeights(k)));
        EXPECT_EQ(wip_closed(kRandomWeights, k, 0, Rational(1)), IsobaricPoly::constant(k, 1));
    }
}

TEST(Gfp, ClassicalFibonacciAndLucas) {
    EXPECT_EQ(evaluate(gfp(2, 4), ones(2)), 5);
    EXPECT_EQ(evaluate(gfp(2, 6), ones(2)), 13);
    EXPECT_EQ(evaluate(glp(2, 3), ones(2)), 4);

    const auto fib = oracle::linear_recurrence({1, 1}, {1, 1}, 15);
    const auto lucas = oracle::linear_recurrence({1, 1}, {2, 1}, 15);
    for (int n = 0; n < 15; ++n) {
        EXPECT_EQ(evaluate(gfp(2, n), ones(2)), fib[n]) << n;
        EXPECT_EQ(evaluate(glp(2, n), ones(2)), lucas[n]) << n;
    }
}

TEST(Gfp, AllOnesWithLargeKDoubles) {
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(evaluate(gfp(n, n), ones(n)), Integer(1) << (n - 1)) << n;
}

TEST(WipRecursive, AgreesWithClosedForm) {
    for (const auto& w : {WeightVector::ones(), WeightVector::identity(), kRandomWeights})
        for (int k = 1; k <= 4; ++k)
            for (int n = 0; n <= 10; ++n) EXPECT_EQ(wip_recursive(w, k, n), wip_closed(w, k, n)) << w.describe() << " " << k << " " << n;
    EXPECT_EQ(evaluate(wip_recursive(WeightVector::ones(), 2, 5), ones(2)), 8);
}

TEST(PolyArithmetic, BasicOperations) {
    const IsobaricPoly t1sq = poly(2, 2, {{{2, 0}, 1}});
    EXPECT_TRUE(poly_add(t1sq, poly_scale(t1sq, -1)).is_zero());
    EXPECT_EQ(poly_add(t1sq, poly_scale(t1sq, -1)).degree(), 2);

    const IsobaricPoly t1 = IsobaricPoly::monomial(3, 1);
    const IsobaricPoly bumped = monomial_mul(t1, 2);
    EXPECT_EQ(bumped.degree(), 3);
    EXPECT_EQ(bumped, poly(3, 3, {{{1, 1, 0}, 1}}));

    EXPECT_EQ(to_string(poly_scale(IsobaricPoly::monomial(3, 3), Rational(1, 3))), "1/3 t3");
    EXPECT_TRUE(monomial_mul(t1, 4).is_zero());
    EXPECT_EQ(monomial_mul(t1, 4).degree(), 5);
}

TEST(PolyArithmetic, MismatchIsAnError) {
    EXPECT_THROW(poly_add(gfp(2, 2), gfp(2, 3)), Error);
    EXPECT_THROW(poly_add(gfp(2, 2), gfp(3, 2)), Error);
    EXPECT_THROW(gfp(2, 2) * gfp(3, 1), Error);
    IsobaricPoly p(2, 3);
    EXPECT_THROW(p.add_term(ExponentVector({2, 0}), 1), Error);
}

TEST(Evaluate, ZeroPointAndShortInput) {
    const std::vector<Rational> zeros(4, 0);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(evaluate(wip_closed(kRandomWeights, 4, n), zeros), 0);
    EXPECT_THROW(evaluate(gfp(3, 2), ones(2)), Error);
}

TEST(TextFormat, SignsAndCoefficients) {
    EXPECT_EQ(to_string(IsobaricPoly(2, 3)), "0");
    EXPECT_EQ(to_string(IsobaricPoly::constant(2, Rational(-7, 2))), "-7/2");
    EXPECT_EQ(to_string(poly(2, 2, {{{2, 0}, -1}, {{0, 1}, Rational(-4)}})), "-t1^2 - 4 t2");
    EXPECT_EQ(to_string(gfp(3, 4)), "t1^4 + 3 t1^2 t2 + 2 t1 t3 + t2^2");
}

TEST(NewtonIdentity, FibonacciAndLucas) {
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 8; ++n) {
            IsobaricPoly rhs(k, n);
            for (int i = 1; i <= n; ++i) rhs += glp(k, i) * gfp(k, n - i);
            EXPECT_EQ(gfp(k, n) * Rational(n), rhs) << k << " " << n;
        }
}

TEST(Convolve, SpecExamples) {
    PolySequence f(2, [](int n) { return gfp(2, n); });
    EXPECT_EQ(convolve(f, f, 2), poly(2, 2, {{{2, 0}, 3}, {{0, 1}, 2}}));

    for (int k = 1; k <= 3; ++k) {
        PolySequence a(k, [k](int n) { return gfp(k, n); });
        PolySequence inv(k, [k](int n) { return gfp_root_closed(Rational(-1), k, n); });
        EXPECT_EQ(convolve(a, inv, 0), IsobaricPoly::constant(k, 1));
        for (int n = 1; n <= 8; ++n) EXPECT_TRUE(convolve(a, inv, n).is_zero()) << k << " " << n;

        PolySequence half(k, [k](int n) { return gfp_root_closed(Rational(1, 2), k, n); });
        for (int n = 0; n <= 8; ++n) EXPECT_EQ(convolve(half, half, n), gfp(k, n)) << k << " " << n;
    }
}

TEST(Convolve, KMismatch) {
    PolySequence a(2, [](int n) { return gfp(2, n); });
    PolySequence b(3, [](int n) { return gfp(3, n); });
    EXPECT_THROW(convolve(a, b, 2), Error);
}

TEST(Convolve, CommutativeAndAssociative) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 6; ++trial) {
        const int k = 2 + trial % 2;
        std::vector<WeightVector> ws;
        for (int s = 0; s < 3; ++s) {
            std::vector<Rational> w;
            for (int j = 0; j < 4; ++j) w.push_back(oracle::random_rational(rng, -4, 4, 3));
            ws.push_back(WeightVector::from_list(w));
        }
        auto series = [&](const WeightVector& w) {
            PolySeries s;
            for (int n = 0; n <= 6; ++n) s.push_back(wip_closed(w, k, n));
            return s;
        };
        const auto a = series(ws[0]), b = series(ws[1]), c = series(ws[2]);
        EXPECT_EQ(convolve(a, b), convolve(b, a));
        EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
    }
}

TEST(Json, SchemaAndRoundTrip) {
    const IsobaricPoly p = poly_scale(gfp(3, 3), Rational(-2, 3));
    const auto j = to_json(p);
    EXPECT_EQ(j.dump(),
              R"({"k":3,"n":3,"terms":[{"alpha":[3,0,0],"coeff":"-2/3"},{"alpha":[1,1,0],"coeff":"-4/3"},{"alpha":[0,0,1],"coeff":"-2/3"}]})");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + trial % 4, n = trial % 7;
        const IsobaricPoly q = gfp_root_closed(oracle::random_rational(rng, -9, 9, 7), k, n);
        EXPECT_EQ(poly_from_json(nlohmann::json::parse(to_json(q).dump())), q);
    }
    EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"k":2})")), Error);
}

TEST(WeightVector, ParsingAndExtension) {
    const auto w = WeightVector::parse("1,2,3");
    EXPECT_EQ(w(1), 1);
    EXPECT_EQ(w(3), 3);
    EXPECT_EQ(w(10), 3);
    EXPECT_EQ(WeightVector::parse("id")(7), 7);
    EXPECT_EQ(WeightVector::parse("ones")(7), 1);
    EXPECT_THROW(WeightVector::parse("1,x"), Error);
    EXPECT_THROW(w(0), Error);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational(" -10/5 ")), "-2");
    EXPECT_EQ(to_string(parse_rational("+0/7")), "0");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("0.5"), Error);
    EXPECT_THROW(parse_rational(""), Error);
    EXPECT_EQ(join(parse_rational_list("1,2/4,-3")), "1,1/2,-3");
}
