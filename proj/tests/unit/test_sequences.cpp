#include <isoring/matrices.hpp>
#include <isoring/schur.hpp>
#include <isoring/sequences.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace isoring;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

} // namespace

TEST(Sequences, FibonacciListing) {
    auto f = gfp_sequence(generic_core(5), 5);
    std::vector<std::string> tex{"1",
                                 "t_1",
                                 "t_1^2 + t_2",
                                 "t_1^3 + 2t_1t_2+t_3",
                                 "t_1^4 + 3t_1^2t_2 + t_2^2+2t_1t_3+t_4",
                                 "t_1^5 + 4t_1^3t_2 +  3t_1t_2^2 +3t_1^2t_3+2 t_2t_3+2t_1t_4+t_5"};
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(f[n].str(), oracle::canonical_from_tex(tex[n])) << n;
}

TEST(Sequences, LucasListing) {
    auto g = glp_sequence(generic_core(5), 5);
    std::vector<std::string> tex{"5",
                                 "t_1",
                                 "t_1^2 + 2t_2",
                                 "t_1^3 + 3t_1t_2+3t_3",
                                 "t_1^4 + 4t_1^2t_2 + 2t_2^2+4t_1t_3+4t_4",
                                 "t_1^5 + 5t_1^3t_2 +  5t_1t_2^2 +5t_1^2t_3+5 t_2t_3+5t_1t_4+5t_5"};
    for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(g[n].str(), oracle::canonical_from_tex(tex[n])) << n;
}

TEST(Sequences, ClosedFormMatchesRecursion) {
    std::vector<Weight> weights{Weight::all_ones(), Weight::ramp(), Weight::shifted_ones(1), Weight::signed_hook(2)};
    for (std::size_t k = 1; k <= 5; ++k) {
        auto core = generic_core(k);
        for (auto const& w : weights) {
            auto rec = weighted_sequence(core, w, 10);
            for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(weighted_closed(w, k, n), rec[n]) << w.name() << " k=" << k << " n=" << n;
        }
        std::vector<Rational> ex;
        for (std::size_t j = 1; j <= k; ++j) ex.push_back(Rational(Integer(static_cast<long>(j * j) - 3), Integer(2)));
        auto w = Weight::of(ex);
        auto rec = weighted_sequence(core, w, 10);
        for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(weighted_closed(w, k, n), rec[n]);
    }
}

TEST(Sequences, AgreeWithGeneratingFunctions) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto t = oracle::generic_parameters(k);
        EXPECT_EQ(gfp_sequence(generic_core(k), 8), oracle::fibonacci_series(t, 8)) << k;
        EXPECT_EQ(glp_sequence(generic_core(k), 8), oracle::lucas_series(t, 8)) << k;
    }
}

TEST(Sequences, ConservationInK) {
    for (unsigned n = 0; n <= 6; ++n)
        for (std::size_t k = std::max(1u, n); k <= 8; ++k) {
            EXPECT_EQ(gfp(generic_core(k), n), gfp(generic_core(std::max(1u, n)), n));
            if (n >= 1) {
                EXPECT_EQ(glp(generic_core(k), n), glp(generic_core(n), n));
            }
        }
}

TEST(Sequences, DerivativeIdentity) {
    auto core = generic_core(6);
    auto f = gfp_sequence(core, 6);
    auto g = glp_sequence(core, 6);
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned j = 1; j <= n; ++j) EXPECT_EQ(partial_derivative(g[n], j), f[n - j] * Rational(n)) << n << "," << j;
    EXPECT_THROW(partial_derivative(g[2], 0), domain_error);
}

TEST(Sequences, EvaluationCommutes) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial)
        for (std::size_t k = 1; k <= 4; ++k) {
            std::vector<Rational> vals;
            for (std::size_t j = 0; j < k; ++j) vals.push_back(Rational(d(rng)));
            auto sym = gfp_sequence(generic_core(k), 8);
            auto num = gfp_sequence(evaluate_core(generic_core(k), vals), 8);
            for (unsigned n = 0; n <= 8; ++n)
                EXPECT_EQ(substitute<Rational>(sym[n], [&](std::size_t j) { return vals[j - 1]; }), num[n]);
        }
}

TEST(Sequences, EvaluatedExamples) {
    EXPECT_EQ(gfp(evaluated_core(rationals({2, -1})), 5), Rational(6));
    EXPECT_EQ(glp(evaluated_core(rationals({6, -5})), 3), Rational(126));
    EXPECT_EQ(gfp_sequence(evaluated_core(rationals({1, 1})), 10).back(), Rational(89));
    EXPECT_EQ(glp_sequence(evaluated_core(rationals({1, 1})), 10).back(), Rational(123));
    EXPECT_EQ(glp(generic_core(3), 0), TPoly(3));
}

TEST(Sequences, WeightLengthMismatch) {
    EXPECT_THROW(weighted_sequence(generic_core(3), Weight::of(rationals({1, 2})), 4), domain_error);
    EXPECT_THROW(weighted_closed(Weight::of(rationals({1})), 2, 3), domain_error);
    EXPECT_THROW(Seq<TPoly>(generic_core(2), Weight::of(rationals({1, 2, 3}))), domain_error);
}

TEST(Sequences, ShiftedOnesAreCompanionColumns) {
    for (std::size_t k = 2; k <= 4; ++k) {
        auto core = generic_core(k);
        auto w = infinite_companion(core, 0, 10);
        for (unsigned z = 0; z < k; ++z) {
            auto p = weighted_sequence(core, Weight::shifted_ones(z), 10);
            std::size_t col = k - 1 - z;
            for (unsigned n = z; n <= 10; ++n) EXPECT_EQ(p[n], w.at(static_cast<long>(n - z), col)) << k << " " << z << " " << n;
        }
    }
}

TEST(Sequences, SignedHooksAreSchurHooks) {
    auto core = generic_core(5);
    for (unsigned r = 0; r <= 3; ++r) {
        auto p = weighted_sequence(core, Weight::signed_hook(r), 7);
        for (unsigned n = r + 1; n <= 7; ++n) {
            std::vector<unsigned> parts{n - r};
            parts.insert(parts.end(), r, 1u);
            EXPECT_EQ(p[n], schur(Partition(parts), core).expanded) << r << " " << n;
        }
    }
}

TEST(Sequences, InfiniteCoreTruncatesAtN) {
    auto ones = Core<Rational>::infinite([](std::size_t) { return Rational(1); }, "1 for all j");
    auto f = gfp_sequence(ones, 6);
    EXPECT_EQ(f, rationals({1, 1, 2, 4, 8, 16, 32}));
    auto g = glp_sequence(ones, 6, 3);
    EXPECT_EQ(g[0], Rational(3));
    EXPECT_EQ(g[1], Rational(1));
}

TEST(NegativeIndices, FibonacciBackwards) {
    Seq<Rational> fib(evaluated_core(rationals({1, 1})), Weight::all_ones());
    EXPECT_EQ(fib.at(-1), Rational(0));
    EXPECT_EQ(fib.at(-2), Rational(1));
    EXPECT_EQ(fib.at(-3), Rational(-1));
    EXPECT_EQ(fib.at(-6), Rational(5));
    Seq<Rational> luc(evaluated_core(rationals({1, 1})), Weight::ramp());
    EXPECT_EQ(luc.at(-1), Rational(-1));
    EXPECT_EQ(luc.at(-4), Rational(7));
}

TEST(NegativeIndices, RecursionHoldsAcrossZero) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> t{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
        if (t[2].is_zero()) t[2] = Rational(1);
        auto core = evaluated_core(t);
        for (auto w : {Weight::all_ones(), Weight::ramp()}) {
            Seq<Rational> s(core, w);
            for (long n = -6; n <= 6; ++n)
                EXPECT_EQ(s.at(n), t[0] * s.at(n - 1) + t[1] * s.at(n - 2) + t[2] * s.at(n - 3)) << n;
        }
    }
}

TEST(NegativeIndices, ExtendNegativeRoundTrip) {
    auto core = evaluated_core(rationals({3, -2, 5}));
    auto fwd = gfp_sequence(core, 12);
    auto neg = extend_negative(core, fwd, 6);
    // Run forward again from P_{-6}..P_{-4} and land on the original values.
    std::vector<Rational> v{neg[5], neg[4], neg[3]};
    for (long n = -3; n <= 12; ++n) {
        std::size_t m = v.size();
        v.push_back(Rational(3) * v[m - 1] + Rational(-2) * v[m - 2] + Rational(5) * v[m - 3]);
    }
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(v[n + 6], fwd[n]);
}

TEST(NegativeIndices, Errors) {
    Seq<Rational> singular(evaluated_core(rationals({1, 0})), Weight::all_ones());
    EXPECT_THROW(singular.at(-1), domain_error);
    Seq<TPoly> sym(generic_core(2), Weight::all_ones());
    EXPECT_THROW(sym.at(-1), domain_error);
    Seq<Rational> hook(evaluated_core(rationals({1, 1})), Weight::shifted_ones(1));
    EXPECT_THROW(hook.at(-1), domain_error);
    EXPECT_THROW(extend_negative(generic_core(2), {}, 1), domain_error);
}

TEST(SeqCache, ConcurrentReadersAgree) {
    Seq<TPoly> s(generic_core(4), Weight::ramp());
    auto expected = glp_sequence(generic_core(4), 14);
    std::vector<std::thread> threads;
    std::vector<int> bad(8, 0);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] {
            for (long n = 14; n >= 0; n -= 1 + i % 3)
                if (!(s.at(n) == expected[static_cast<std::size_t>(n)])) ++bad[i];
        });
    for (auto& t : threads) t.join();
    for (int b : bad) EXPECT_EQ(b, 0);
}
