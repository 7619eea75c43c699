#include "stein/error.hpp"
#include "stein/ring.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace stein;

namespace {

RingPtr golden() { return RingSpec::single_algebraic({-1, 1, 1}, 0, 1); }
RingPtr cubic() { return RingSpec::single_algebraic({-1, 1, 0, 1}, 0, 1); }
RingPtr two() { return RingSpec::single_algebraic({-2, 1}, 1, 3); }
RingPtr three() { return RingSpec::single_algebraic({-3, 1}, 2, 4); }
RingPtr sixth() { return RingSpec::multi_integer({2, 3}); }

RingElement T(const RingPtr& r, long e = 1) { return RingElement::laurent(r, {{e, 1}}); }
RingElement Q(const RingPtr& r, long p, long q = 1) { return RingElement::rational(r, mpq_class(p, q)); }

}  // namespace

TEST(Reduce, SquareOfGoldenRoot) {
    auto r = golden();
    auto x = reduce({{2, 1}}, r);
    EXPECT_EQ(x, reduce({{0, 1}, {1, -1}}, r));
    EXPECT_EQ(x.str(), "-t+1");
}

TEST(Reduce, InverseOfGoldenRoot) {
    auto r = golden();
    // brute force: the only p of degree < 2 with small coefficients and t*p = 1
    std::optional<RingElement> found;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            auto p = reduce({{0, a}, {1, b}}, r);
            if (p * T(r) == RingElement::one(r)) found = p;
        }
    ASSERT_TRUE(found);
    EXPECT_EQ(*found, reduce({{0, 1}, {1, 1}}, r));
    EXPECT_EQ(reduce({{-1, 1}}, r), *found);
}

TEST(Reduce, ZeroIsFixed) {
    auto r = golden();
    EXPECT_TRUE(reduce({}, r).is_zero());
    EXPECT_TRUE(reduce({{2, 1}, {1, 1}, {0, -1}}, r).is_zero());
}

TEST(Reduce, IdempotentAndValuePreserving) {
    auto g = oracle::rng(1);
    for (auto r : {two(), golden(), cubic()}) {
        for (int n = 0; n < 1000; ++n) {
            auto t = oracle::laurent(g);
            auto x = reduce(t, r);
            EXPECT_EQ(reduce(x.terms(), r), x);
            mpf_class diff = oracle::value(x) - oracle::laurent_value(t, r);
            EXPECT_LT(abs(diff), mpf_class(1e-100)) << x;
        }
    }
}

TEST(Arith, GoldenSquare) {
    auto r = golden();
    EXPECT_EQ(T(r) * T(r), Q(r, 1) - T(r));
}

TEST(Arith, Rational) {
    auto r = sixth();
    EXPECT_EQ(Q(r, 1, 2) * Q(r, 1, 3), Q(r, 1, 6));
    auto x = Q(r, 5, 6);
    EXPECT_TRUE((x + (-x)).is_zero());
}

TEST(Arith, RingAxiomsOnRandomElements) {
    auto g = oracle::rng(2);
    for (auto r : {golden(), cubic(), two()}) {
        for (int n = 0; n < 200; ++n) {
            auto a = reduce(oracle::laurent(g), r), b = reduce(oracle::laurent(g), r),
                 c = reduce(oracle::laurent(g), r);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a - a).is_zero());
        }
    }
}

TEST(Arith, UnitsInvert) {
    for (auto r : {golden(), cubic(), two(), three()}) {
        for (long e = -5; e <= 5; ++e) {
            for (long s : {1, -1}) {
                auto u = T(r, e) * s;
                EXPECT_EQ(u * u.inverse(), RingElement::one(r));
            }
        }
    }
    auto r = sixth();
    for (long p : {1, 2, 3, 4, 6, 9, 12}) {
        for (long q : {1, 2, 3, 8, 27}) {
            auto u = Q(r, p, q);
            EXPECT_EQ(u * u.inverse(), RingElement::one(r));
        }
    }
}

TEST(Arith, NonUnitsRejected) {
    EXPECT_THROW(Q(sixth(), 5).inverse(), Error);
    EXPECT_THROW(Q(two(), 3).inverse(), Error);
    EXPECT_THROW(Q(golden(), 2).inverse(), Error);
    try {
        Q(three(), 2).inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
    }
}

TEST(Arith, RationalMembership) {
    EXPECT_NO_THROW(Q(two(), 3, 8));
    EXPECT_THROW(Q(two(), 1, 3), Error);
    EXPECT_NO_THROW(Q(sixth(), 5, 72));
    EXPECT_THROW(Q(sixth(), 1, 5), Error);
    // golden root is a unit, so no proper denominators occur
    EXPECT_THROW(Q(golden(), 1, 2), Error);
    // 1/2 in Z[l, 1/l] for l^2 - 2l - 2 ... not monic-invertible; check via t^2+2t-2
    auto r = RingSpec::single_algebraic({-2, 2, 1}, 0, 1);
    auto half = Q(r, 1, 2);
    EXPECT_EQ(half * 2, RingElement::one(r));
}

TEST(Compare, GoldenAgainstHalf) {
    auto r = golden();
    // 1/2 is not in this ring, so compare 2*t with 1
    EXPECT_GT(T(r) * 2, Q(r, 1));
    EXPECT_EQ(T(r) <=> T(r), std::strong_ordering::equal);
    auto s = sixth();
    EXPECT_LT(Q(s, 2, 3), Q(s, 1));
}

TEST(Compare, AgreesWithFloatOracle) {
    auto g = oracle::rng(3);
    for (auto r : {golden(), cubic(), two()}) {
        for (int n = 0; n < 300; ++n) {
            auto a = reduce(oracle::laurent(g), r), b = reduce(oracle::laurent(g), r);
            mpf_class d = oracle::value(a) - oracle::value(b);
            int expect = a == b ? 0 : sgn(d);
            auto c = a <=> b;
            int got = c < 0 ? -1 : (c > 0 ? 1 : 0);
            EXPECT_EQ(got, expect) << a << " vs " << b;
        }
    }
}

TEST(Compare, OrderCompatibleWithArithmetic) {
    auto g = oracle::rng(4);
    for (auto r : {golden(), cubic()}) {
        for (int n = 0; n < 200; ++n) {
            auto a = reduce(oracle::laurent(g), r), b = reduce(oracle::laurent(g), r),
                 c = reduce(oracle::laurent(g), r);
            if (a < b) {
                EXPECT_LT(a + c, b + c);
                if (c.sign() > 0) EXPECT_LT(a * c, b * c);
                if (b < c) EXPECT_LT(a, c);
            }
            EXPECT_TRUE((a < b) + (a == b) + (a > b) == 1);
        }
    }
}

TEST(Compare, NearlyEqualValues) {
    // Fibonacci approximants F(n+1)/F(n+2) get within 1/F^2 of the root
    auto r = golden();
    mpz_class a = 1, b = 1;
    for (int n = 0; n < 60; ++n) {
        mpz_class c = a + b;
        a = b;
        b = c;
        auto x = T(r) * RingElement::integer(r, b) - RingElement::integer(r, a);
        EXPECT_EQ(x.sign(), sgn(oracle::value(x))) << n;
    }
}

TEST(Floor, Examples) {
    auto r = golden();
    EXPECT_EQ(T(r, -1).floor(), 1);
    EXPECT_EQ(Q(r, 1).floor(), 1);
    EXPECT_EQ(T(r, -4).floor(), 6);
    auto q = RingSpec::multi_integer({2, 3});
    EXPECT_EQ(Q(q, 81, 16).floor(), 5);
    EXPECT_EQ(Q(q, -1, 2).floor(), -1);
}

TEST(Floor, MatchesOracle) {
    auto g = oracle::rng(5);
    for (auto r : {golden(), cubic()}) {
        for (int n = 0; n < 200; ++n) {
            auto x = reduce(oracle::laurent(g), r);
            mpf_class v = oracle::value(x);
            mpf_class f = ::floor(v);
            EXPECT_EQ(mpz_class(f), x.floor()) << x;
        }
    }
}

TEST(EvalAtOne, Examples) {
    auto r3 = RingSpec::multi_integer({3});
    EXPECT_EQ(eval_at_one_mod(Q(r3, 2), 2), 0);
    EXPECT_EQ(eval_at_one_mod(Q(r3, 5, 3), 2), 1);
    EXPECT_EQ(eval_at_one_mod(T(three()), 2), 1);
}

TEST(EvalAtOne, Errors) {
    EXPECT_THROW(eval_at_one_mod(Q(sixth(), 1), 2), Error);
    EXPECT_THROW(eval_at_one_mod(Q(three(), 1), 0), Error);
    EXPECT_THROW(eval_at_one_mod(Q(three(), 1), 4), Error);
}

TEST(EvalAtOne, Homomorphism) {
    auto g = oracle::rng(6);
    auto r = RingSpec::single_algebraic({-3, 1}, 2, 4);
    auto q = RingSpec::single_algebraic({1, -5, 1}, 0, 1);  // f(1) = -3
    for (auto ring : {r, q}) {
        mpz_class m = ring == r ? 2 : 3;
        for (int n = 0; n < 200; ++n) {
            auto a = reduce(oracle::laurent(g), ring), b = reduce(oracle::laurent(g), ring);
            mpz_class lhs = eval_at_one_mod(a * b, m);
            mpz_class rhs = (eval_at_one_mod(a, m) * eval_at_one_mod(b, m)) % m;
            EXPECT_EQ(lhs, rhs);
            EXPECT_EQ(eval_at_one_mod(a + b, m), (eval_at_one_mod(a, m) + eval_at_one_mod(b, m)) % m);
        }
    }
    auto z = RingSpec::multi_integer({3, 5});
    for (int n = 0; n < 200; ++n) {
        long p1 = oracle::uniform(g, -40, 40), e1 = oracle::uniform(g, 0, 3);
        long p2 = oracle::uniform(g, -40, 40), e2 = oracle::uniform(g, 0, 3);
        auto a = Q(z, p1, static_cast<long>(std::pow(3, e1))), b = Q(z, p2, static_cast<long>(std::pow(5, e2)));
        EXPECT_EQ(eval_at_one_mod(a * b, 2), (eval_at_one_mod(a, 2) * eval_at_one_mod(b, 2)) % 2);
    }
}

TEST(Spec, Validation) {
    EXPECT_THROW(RingSpec::single_algebraic({-1, 0, 1}, 0, 2), Error);  // t^2-1 reducible
    EXPECT_THROW(RingSpec::single_algebraic({-1, 1}, 0, 2), Error);     // root 1
    EXPECT_THROW(RingSpec::single_algebraic({-1, 1, 1}, -2, 1), Error); // two roots
    EXPECT_THROW(RingSpec::single_algebraic({-1, 1, 2}, 0, 1), Error);  // not monic
    EXPECT_THROW(RingSpec::multi_integer({2, 2}), Error);
    EXPECT_THROW(RingSpec::multi_integer({1}), Error);
    auto quartic = RingSpec::single_algebraic({-1, 1, 0, 0, 1}, 0, 1);
    EXPECT_TRUE(quartic->irreducibility_assumed());
    EXPECT_FALSE(golden()->irreducibility_assumed());
}

TEST(Spec, SameRing) {
    EXPECT_TRUE(golden()->same_as(*RingSpec::single_algebraic({-1, 1, 1}, mpq_class(1, 2), 1)));
    EXPECT_FALSE(golden()->same_as(*RingSpec::single_algebraic({-1, 1, 1}, -2, -1)));
    EXPECT_THROW(T(golden()) + Q(sixth(), 1), Error);
}

TEST(Slope, HomomorphismIntoRing) {
    auto r = sixth();
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            Slope u{{a, b}}, v{{b, -a}};
            EXPECT_EQ(RingElement::slope_value(r, u * v),
                      RingElement::slope_value(r, u) * RingElement::slope_value(r, v));
            auto back = slope_of(RingElement::slope_value(r, u));
            ASSERT_TRUE(back);
            EXPECT_EQ(*back, u);
        }
    auto g = golden();
    for (long a = -6; a <= 6; ++a) {
        auto back = slope_of(RingElement::slope_value(g, Slope{{a}}));
        ASSERT_TRUE(back);
        EXPECT_EQ(back->e[0], a);
    }
    EXPECT_FALSE(slope_of(Q(g, 2)));
    EXPECT_FALSE(slope_of(Q(r, 5)));
}

TEST(Approx, Digits) {
    EXPECT_EQ(T(golden()).approx(12), "0.618033988750");
    EXPECT_EQ(Q(sixth(), -1, 3).approx(4), "-0.3333");
}
