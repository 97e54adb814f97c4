#include <isoring/logexp.hpp>
#include <isoring/matrices.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

using namespace isoring;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

/// Core of the product of two core polynomials: 1 - sum s_j x^j = (1 - sum a_j x^j)(1 - sum b_j x^j).
Core<TPoly> product_core(std::vector<TPoly> const& a, std::vector<TPoly> const& b) {
    std::size_t n = a.size() + b.size();
    std::vector<TPoly> ua{TPoly(1)}, ub{TPoly(1)};
    for (auto const& x : a) ua.push_back(-x);
    for (auto const& x : b) ub.push_back(-x);
    auto u = oracle::series_mul(ua, ub, n);
    std::vector<TPoly> s;
    for (std::size_t j = 1; j <= n; ++j) s.push_back(-u[j]);
    return Core<TPoly>::finite(s);
}

} // namespace

TEST(Convolution, DeltaIsIdentity) {
    auto f = gfp_sequence(generic_core(3), 6);
    EXPECT_EQ(conv(f, delta_seq<TPoly>(6), 6), f);
    EXPECT_EQ(conv(delta_seq<TPoly>(6), f, 6), f);
}

TEST(Convolution, InverseOfFibonacciIsCoreVector) {
    auto inv = conv_inverse(gfp_sequence(generic_core(3), 7), 7);
    std::vector<TPoly> expected{TPoly(1), -TPoly::var(1), -TPoly::var(2), -TPoly::var(3), TPoly(), TPoly(), TPoly(), TPoly()};
    EXPECT_EQ(inv, expected);
}

TEST(Convolution, InverseOfConstantOnes) {
    EXPECT_EQ(conv_inverse(rationals({1, 1, 1, 1, 1}), 4), rationals({1, -1, 0, 0, 0}));
    EXPECT_EQ(conv_inverse(rationals({2, 1}), 1), (std::vector<Rational>{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(4))}));
}

TEST(Convolution, NonUnitRejected) {
    EXPECT_THROW(conv_inverse(rationals({0, 1, 1}), 2), domain_error);
    std::vector<TPoly> p{TPoly::var(1), TPoly(1)};
    EXPECT_THROW(conv_inverse(p, 1), domain_error);
}

TEST(Convolution, ShortInputRejected) {
    EXPECT_THROW(conv(rationals({1, 2}), rationals({1, 2, 3}), 2), domain_error);
    EXPECT_THROW(log_op(rationals({1, 2}), 3), domain_error);
}

TEST(Convolution, PowerMatchesRepeatedProduct) {
    auto f = gfp_sequence(generic_core(2), 6);
    EXPECT_EQ(conv_power(f, 1, 6), f);
    EXPECT_EQ(conv_power(f, 3, 6), conv(conv(f, f, 6), f, 6));
    EXPECT_THROW(conv_power(f, 0, 6), domain_error);
}

TEST(Log, FibonacciToLucas) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto core = generic_core(k);
        EXPECT_EQ(log_op(gfp_sequence(core, 8), core, 8), glp_sequence(core, 8)) << k;
        EXPECT_EQ(log_op_kterm(gfp_sequence(core, 8), core, 8), glp_sequence(core, 8)) << k;
        EXPECT_EQ(log_via_inverse(gfp_sequence(core, 8), k, 8), glp_sequence(core, 8)) << k;
        EXPECT_EQ(log_op(gfp_sequence(core, 8), 8), glp_sequence(core, 8)) << k;
    }
}

TEST(Log, AgreesWithLogarithmicDerivative) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto t = oracle::generic_parameters(k);
        EXPECT_EQ(log_op(oracle::fibonacci_series(t, 7), generic_core(k), 7), oracle::lucas_series(t, 7));
    }
}

TEST(Exp, LucasToFibonacci) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto core = generic_core(k);
        EXPECT_EQ(exp_op(glp_sequence(core, 8), 8), gfp_sequence(core, 8)) << k;
    }
}

TEST(Exp, Examples) {
    EXPECT_EQ(exp_op(rationals({0, 2, 2, 2, 2}), 4), rationals({1, 2, 3, 4, 5}));
    EXPECT_EQ(exp_op(rationals({3, 0, 0, 0}), 3), rationals({1, 0, 0, 0}));
    EXPECT_EQ(log_op(rationals({1, 2, 3, 4, 5}), 4), rationals({2, 2, 2, 2, 2}));
    EXPECT_EQ(log_op(rationals({1, 1, 1, 1}), 3), rationals({1, 1, 1, 1}));
}

TEST(LogExp, InverseOnArbitrarySequences) {
    std::vector<Rational> g{Rational(0), Rational(3), Rational(Integer(-1), Integer(2)), Rational(7), Rational(0), Rational(-2)};
    auto f = exp_op(g, 5);
    auto back = log_op(f, 5);
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(back[n], g[n]);
}

TEST(LogExp, HomomorphismOverIndependentCores) {
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b) {
            auto c1 = generic_core(a), c2 = generic_core(b, a);
            auto f1 = gfp_sequence(c1, 6), f2 = gfp_sequence(c2, 6);
            auto prod = conv(f1, f2, 6);
            auto pc = product_core(c1.values(), c2.values());
            EXPECT_EQ(gfp_sequence(pc, 6), prod);
            auto lhs = log_op(prod, pc, 6);
            auto g1 = log_op(f1, c1, 6), g2 = log_op(f2, c2, 6);
            for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(lhs[n], g1[n] + g2[n]) << a << b << n;
            // and EXP carries sums back to products
            std::vector<TPoly> sum;
            for (unsigned n = 0; n <= 6; ++n) sum.push_back(g1[n] + g2[n]);
            EXPECT_EQ(exp_op(sum, 6), prod);
        }
}

TEST(LogExp, PowersScaleTheLog) {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto core = generic_core(k);
        auto f = gfp_sequence(core, 6);
        auto g = log_op(f, core, 6);
        std::vector<TPoly> pc = core.values();
        for (unsigned r = 2; r <= 4; ++r) {
            auto power_core = product_core(pc, core.values());
            pc = power_core.values();
            auto lhs = log_op(conv_power(f, r, 6), power_core, 6);
            for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(lhs[n], g[n] * Rational(r)) << k << " " << r << " " << n;
        }
    }
}

TEST(LogExp, InverseAsLambdaConvolution) {
    // L(F) = conj(F) * lambda(F) on n >= 1.
    auto core = generic_core(3);
    auto f = gfp_sequence(core, 7);
    auto rhs = conv(conv_inverse(f, 7), lambda(f), 7);
    auto g = log_op(f, core, 7);
    for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(g[n], rhs[n]);
}

TEST(LogExp, DegreeOneFixedPoint) {
    TPoly t1 = TPoly::var(1);
    auto core = Core<TPoly>::finite({t1});
    auto f = gfp_sequence(core, 6);
    auto g = log_op(f, core, 6);
    for (unsigned n = 0; n <= 6; ++n) {
        EXPECT_EQ(f[n], t1.pow(n));
        EXPECT_EQ(g[n], f[n]);
    }
}

TEST(LogExp, ProductRule) {
    // lambda(P * Q) = lambda(P) * Q + P * lambda(Q)
    auto p = gfp_sequence(generic_core(2), 6);
    auto q = glp_sequence(generic_core(2, 2), 6);
    auto lhs = lambda(conv(p, q, 6));
    auto a = conv(lambda(p), q, 6), b = conv(p, lambda(q), 6);
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(lhs[n], a[n] + b[n]);
}

TEST(TriangularOperators, LTimesEIsIdentity) {
    for (unsigned n = 1; n <= 8; ++n) {
        auto core = generic_core(n);
        auto L = build_L_matrix(n, core).entries, E = build_E_matrix(n, core).entries;
        auto I = Matrix<TPoly>::identity(n);
        EXPECT_EQ((L * E).to_rows(), I.to_rows()) << n;
        EXPECT_EQ((E * L).to_rows(), I.to_rows()) << n;
    }
}

TEST(TriangularOperators, RowThreeOfL) {
    auto L = build_L_matrix(3, generic_core(3)).entries;
    EXPECT_EQ(L.row(2), (std::vector<TPoly>{TPoly::parse("-t2"), TPoly::parse("-2*t1"), TPoly(3)}));
    EXPECT_EQ(L.row(2), different_vector(generic_core(3)));
}

TEST(TriangularOperators, ApplyMatchesOperators) {
    auto core = generic_core(3);
    auto f = gfp_sequence(core, 6), g = glp_sequence(core, 6);
    auto lg = build_L_matrix(6, core).apply(f);
    auto ef = build_E_matrix(6, core).apply(g);
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_EQ(lg[n - 1], g[n]);
        EXPECT_EQ(ef[n - 1], f[n]);
    }
    EXPECT_THROW(build_L_matrix(6, core).apply(std::vector<TPoly>(6)), domain_error);
}

TEST(BasisChange, SmallCases) {
    EXPECT_EQ(g_from_f(1).str(), "F1");
    EXPECT_EQ(g_from_f(2).str(), "-F1^2 + 2*F2");
    EXPECT_EQ(g_from_f(3).str(), "F1^3 - 3*F1*F2 + 3*F3");
    EXPECT_EQ(f_from_g(2).str(), "1/2*G1^2 + 1/2*G2");
    EXPECT_EQ(f_from_g(3).str(), "1/6*G1^3 + 1/2*G1*G2 + 1/3*G3");
    EXPECT_EQ(f_from_g(4).str(), "1/24*G1^4 + 1/4*G1^2*G2 + 1/8*G2^2 + 1/3*G1*G3 + 1/4*G4");
    EXPECT_EQ(f_from_g(0), GPoly(1));
    EXPECT_THROW(g_from_f(0), domain_error);
}

TEST(BasisChange, SubstitutionRecoversSequences) {
    auto core = generic_core(8);
    auto f = gfp_sequence(core, 8), g = glp_sequence(core, 8);
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_EQ(substitute<TPoly>(g_from_f(n), [&](std::size_t j) { return f[j]; }), g[n]) << n;
        EXPECT_EQ(substitute<TPoly>(f_from_g(n), [&](std::size_t j) { return g[j]; }), f[n]) << n;
    }
}

TEST(CoreInference, PeelAndTrim) {
    auto f = gfp_sequence(evaluated_core(rationals({2, -1})), 8);
    EXPECT_EQ(infer_finite_core(f, 8).values(), rationals({2, -1}));
    EXPECT_EQ(peel_core(rationals({1, 1, 2, 5, 14}), 4), rationals({1, 1, 2, 5}));
    EXPECT_THROW(peel_core(rationals({2, 1}), 1), domain_error);
}
