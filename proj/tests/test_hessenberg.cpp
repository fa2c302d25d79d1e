#include "isobaric/hessenberg.hpp"
#include "isobaric/json.hpp"

#include "oracles.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

using namespace isobaric;

namespace {

const WeightVector kRandomWeights = WeightVector::from_list(
    {Rational(3), Rational(-1), Rational(4), Rational(1), Rational(-5), Rational(9), Rational(2), Rational(-6), Rational(5)});

HessenbergMatrix random_numeric(std::mt19937& rng, int n, int super) {
    HessenbergMatrix m(n, super);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) m.set(i, j, Cell::constant(oracle::random_rational(rng, -5, 5, 4)));
    return m;
}

oracle::Mat dense(const HessenbergMatrix& m) {
    oracle::Mat out(static_cast<std::size_t>(m.size()));
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) out[i - 1].push_back(m.cell(i, j).coeff);
    return out;
}

} // namespace

TEST(Build, FourByFourExample) {
    const auto w = WeightVector::from_list({Rational(2), Rational(3), Rational(5), Rational(7)});
    const HessenbergMatrix m = build_plus(w, 4, 4);
    EXPECT_EQ(m.super(), 1);
    // t1 1 0 0 / t2 t1 1 0 / t3 t2 t1 1 / w4 t4  w3 t3  w2 t2  w1 t1
    const int vars[4][4] = {{1, 0, 0, 0}, {2, 1, 0, 0}, {3, 2, 1, 0}, {4, 3, 2, 1}};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const Cell c = m.cell(i, j);
            if (j == i + 1) {
                EXPECT_EQ(c, Cell::constant(1));
            } else if (j > i + 1) {
                EXPECT_TRUE(c.is_zero());
            } else {
                const int v = vars[i - 1][j - 1];
                EXPECT_EQ(c, Cell::term(i == 4 ? w(v) : Rational(1), v)) << i << "," << j;
            }
        }
    EXPECT_EQ(to_text(m), "[   t1     1     0     0 ]\n"
                          "[   t2    t1     1     0 ]\n"
                          "[   t3    t2    t1     1 ]\n"
                          "[ 7 t4  5 t3  3 t2  2 t1 ]\n");
}

TEST(Build, SmallAndTruncated) {
    const auto w = WeightVector::from_list({Rational(5, 2)});
    const HessenbergMatrix one = build_minus(w, 3, 1);
    EXPECT_EQ(one.size(), 1);
    EXPECT_EQ(one.cell(1, 1), Cell::term(Rational(5, 2), 1));
    EXPECT_EQ(hessenberg_value(one, 3), IsobaricPoly::monomial(3, 1, Rational(5, 2)));

    const HessenbergMatrix m = build_minus(WeightVector::ones(), 2, 3);
    EXPECT_TRUE(m.cell(3, 1).is_zero());
    EXPECT_EQ(m.cell(3, 2), Cell::term(1, 2));
    EXPECT_EQ(m.cell(3, 3), Cell::term(1, 1));
    EXPECT_EQ(m.cell(1, 2), Cell::constant(-1));
    EXPECT_THROW(build_minus(WeightVector::ones(), 2, 0), Error);
}

TEST(Value, DegreeFourPolynomialForBothSigns) {
    // w1 t1^4 + (2w1+w2) t1^2 t2 + w2 t2^2 + (w1+w3) t1 t3 + w4 t4 on basis weights
    const int forms[5][4] = {{1, 0, 0, 0}, {2, 1, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
    const std::vector<int> alphas[5] = {{4, 0, 0, 0}, {2, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}};
    for (int i = 1; i <= 4; ++i) {
        std::vector<Rational> e(4, 0);
        e[i - 1] = 1;
        const auto w = WeightVector::from_list(e);
        IsobaricPoly want(4, 4);
        for (int t = 0; t < 5; ++t) want.add_term(ExponentVector(alphas[t]), forms[t][i - 1]);
        EXPECT_EQ(hessenberg_value(build_minus(w, 4, 4), 4), want);
        EXPECT_EQ(hessenberg_value(build_plus(w, 4, 4), 4), want);
    }
}

TEST(RepCheck, SpecExamples) {
    EXPECT_TRUE(rep_check(WeightVector::ones(), 2, 6));
    EXPECT_TRUE(rep_check(WeightVector::identity(), 3, 5));
    EXPECT_TRUE(rep_check(kRandomWeights, 4, 7));
}

TEST(RepCheck, Grid) {
    for (const auto& w : {WeightVector::ones(), WeightVector::identity(), kRandomWeights,
                          WeightVector::from_list({Rational(1, 2), Rational(-2, 3), Rational(0)})})
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 9; ++n) EXPECT_TRUE(rep_check(w, k, n)) << w.describe() << " k=" << k << " n=" << n;
}

TEST(Value, NumericAgreesWithLeibnizExpansion) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 7;
        const HessenbergMatrix minus = random_numeric(rng, n, -1);
        EXPECT_EQ(hessenberg_value_at(minus, {}), oracle::naive_det(dense(minus)));
        const HessenbergMatrix plus = random_numeric(rng, n, +1);
        EXPECT_EQ(hessenberg_value_at(plus, {}), oracle::naive_perm(dense(plus)));
    }
}

TEST(Value, SubstitutionCommutesWithSymbolicValue) {
    std::mt19937 rng(99);
    for (int n = 1; n <= 7; ++n) {
        std::vector<Rational> t;
        for (int j = 0; j < 3; ++j) t.push_back(oracle::random_rational(rng, -3, 3, 2));
        const HessenbergMatrix m = build_minus(kRandomWeights, 3, n);
        EXPECT_EQ(hessenberg_value_at(m, t), evaluate(hessenberg_value(m, 3), t));
    }
}

TEST(Value, SymbolicNeedsIsobaricCells) {
    HessenbergMatrix m(2, -1);
    m.set(1, 1, Cell::term(1, 1));
    m.set(2, 1, Cell::term(1, 1));  // should be t2 for degree 2
    EXPECT_THROW(hessenberg_value(m, 2), Error);
    m.set(2, 1, Cell::constant(3));
    EXPECT_THROW(hessenberg_value(m, 2), Error);
}

TEST(Matrix, ShapeIsEnforced) {
    EXPECT_THROW(HessenbergMatrix(0, 1), Error);
    EXPECT_THROW(HessenbergMatrix(3, 2), Error);
    HessenbergMatrix m(3, 1);
    EXPECT_THROW(m.set(1, 2, Cell::constant(1)), Error);
    EXPECT_THROW(m.cell(4, 1), Error);
    EXPECT_TRUE(m.cell(1, 3).is_zero());
}

TEST(Json, RoundTripAndShape) {
    const HessenbergMatrix m = build_plus(kRandomWeights, 3, 4);
    const auto j = to_json(m);
    EXPECT_EQ(j.at("super"), 1);
    EXPECT_EQ(j.at("cells").at(0).at(0).dump(), R"({"coeff":"1","t":1})");
    EXPECT_EQ(j.at("cells").at(0).at(1).dump(), R"({"coeff":"1","t":null})");
    EXPECT_EQ(hessenberg_from_json(nlohmann::json::parse(j.dump())), m);

    auto broken = j;
    broken["cells"][0][2] = {{"coeff", "5"}, {"t", nullptr}};
    EXPECT_THROW(hessenberg_from_json(broken), Error);
}
