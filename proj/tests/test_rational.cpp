#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <solvir/rational.hpp>

using solvir::BigRational;
using solvir::Error;
using solvir::ErrorKind;

namespace {

mpq_class q(std::int64_t n, std::int64_t d)
{
    mpq_class r{mpz_class(std::to_string(n)), mpz_class(std::to_string(d))};
    r.canonicalize();
    return r;
}

// values straddling the 64-bit fast path
std::vector<std::int64_t> edge_values()
{
    const std::int64_t mx = std::numeric_limits<std::int64_t>::max();
    const std::int64_t mn = std::numeric_limits<std::int64_t>::min();
    return {0, 1, -1, 2, -7, 12, 3037000499LL, 3037000500LL, -3037000500LL, mx, mx - 1, mn, mn + 1, mx / 2, mn / 3};
}

} // namespace

TEST(BigRational, ArithmeticMatchesMpqOnEdgeValues)
{
    const auto vals = edge_values();
    for (auto a : vals)
        for (auto b : vals)
            for (std::int64_t d : {std::int64_t{1}, std::int64_t{3}, std::numeric_limits<std::int64_t>::max()}) {
                const BigRational x(a, d), y(b, 1);
                const mpq_class qx = q(a, d), qy = q(b, 1);
                EXPECT_EQ((x + y).to_mpq(), qx + qy);
                EXPECT_EQ((x - y).to_mpq(), qx - qy);
                EXPECT_EQ((x * y).to_mpq(), qx * qy);
                EXPECT_EQ((-x).to_mpq(), -qx);
                if (b != 0)
                    EXPECT_EQ((x / y).to_mpq(), qx / qy);
                EXPECT_EQ(x < y, qx < qy);
                EXPECT_EQ(x == y, qx == qy);
            }
}

TEST(BigRational, RandomArithmeticMatchesMpq)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000000007, 1000000007), den(1, 999983);
    BigRational acc(1);
    mpq_class qacc(1);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t n = num(rng), d = den(rng);
        const BigRational x(n, d);
        const mpq_class qx = q(n, d);
        switch (i % 3) {
        case 0: acc = acc + x; qacc += qx; break;
        case 1: acc = acc * x; qacc *= qx; break;
        default: acc = acc - x; qacc -= qx; break;
        }
        ASSERT_EQ(acc.to_mpq(), qacc) << "step " << i;
        if (i % 50 == 49) { // keep sizes moderate
            acc = BigRational(1, 3);
            qacc = mpq_class(1, 3);
        }
    }
}

TEST(BigRational, CanonicalForm)
{
    const BigRational x(6, -4);
    EXPECT_EQ(x.to_string(), "-3/2");
    EXPECT_EQ(x.numerator(), -3);
    EXPECT_EQ(x.denominator(), 2);
    EXPECT_EQ(x.sign(), -1);
    EXPECT_FALSE(x.is_integer());
    EXPECT_TRUE(BigRational(10, 5).is_integer());
    EXPECT_TRUE(BigRational(5, 5).is_one());
    EXPECT_TRUE(BigRational(0, 9).is_zero());
    EXPECT_EQ(BigRational(0, -9).sign(), 0);
}

TEST(BigRational, BigValuesReturnToFastPath)
{
    const BigRational big(std::numeric_limits<std::int64_t>::max());
    const BigRational sq = big * big;
    EXPECT_EQ(sq.to_mpq(), q(std::numeric_limits<std::int64_t>::max(), 1) * q(std::numeric_limits<std::int64_t>::max(), 1));
    const BigRational back = sq / big;
    EXPECT_EQ(back, big);
    EXPECT_EQ((sq - sq), BigRational(0));
    EXPECT_TRUE((sq - sq).is_zero());
    EXPECT_TRUE((sq / sq).is_one());
}

TEST(BigRational, ParseRoundTrip)
{
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789012345678901234567891/2"}) {
        const BigRational x = BigRational::parse(s);
        EXPECT_EQ(x.to_string(), s);
        EXPECT_EQ(BigRational::parse(x.to_string()), x);
    }
    EXPECT_EQ(BigRational::parse("4/6"), BigRational(2, 3));
}

TEST(BigRational, Errors)
{
    try {
        (void)BigRational(1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DenominatorVanishes);
    }
    for (const char* s : {"", "x", "1/", "1/0", "--1"}) {
        EXPECT_THROW((void)BigRational::parse(s), Error) << s;
    }
    EXPECT_THROW((void)(BigRational(1) / BigRational(0)), Error);
}
