#include <map>
#include <vector>

#include <gtest/gtest.h>
#include <solvir/random.hpp>
#include <solvir/scalar.hpp>

using namespace solvir;

namespace {

LatticePoint pt(std::vector<int> c) { return LatticePoint(std::span<const int>(c)); }

Scalar mu(int i) { return Scalar::var(mu_var(i - 1)); }

// A random element of the localized ring, with a and b mixed in.
Scalar random_scalar(Rng& rng, int rank)
{
    Scalar s = rng.scalar(rank);
    if (rng.coin())
        s = s + Scalar(rng.rational()) * Scalar::var(kVarA);
    if (rng.coin())
        s = s * (Scalar::var(kVarB) + Scalar(rng.rational()));
    if (rng.coin())
        s = s.divide_by_form(rng.nonzero_point(rank, 2));
    return s;
}

std::map<Var, BigRational> generic_point()
{
    // forms with coordinates in [-4, 4] do not vanish here
    return {{mu_var(0), BigRational(1)}, {mu_var(1), BigRational(17, 2)}, {mu_var(2), BigRational(301, 3)},
            {kVarA, BigRational(-5, 7)}, {kVarB, BigRational(13, 11)}};
}

} // namespace

TEST(Scalar, FieldOperationsCommuteWithEvaluation)
{
    Rng rng(3);
    const auto at = generic_point();
    for (int trial = 0; trial < 300; ++trial) {
        const Scalar x = random_scalar(rng, 3), y = random_scalar(rng, 3);
        const BigRational xv = x.evaluate(at), yv = y.evaluate(at);
        ASSERT_EQ((x + y).evaluate(at), xv + yv) << x.to_string() << " + " << y.to_string();
        ASSERT_EQ((x - y).evaluate(at), xv - yv);
        ASSERT_EQ((x * y).evaluate(at), xv * yv);
        ASSERT_EQ(x.pow(2).evaluate(at), xv * xv);
        ASSERT_EQ((-x).evaluate(at), -xv);
    }
}

TEST(Scalar, EqualityIsCanonical)
{
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar x = random_scalar(rng, 3), y = random_scalar(rng, 3), z = random_scalar(rng, 3);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x + y) - y, x);
        EXPECT_TRUE((x - x).is_zero());
        const LatticePoint g = rng.nonzero_point(3, 3);
        EXPECT_EQ(x.divide_by_form(g) * Scalar::mu_dot(g), x);
    }
}

TEST(Scalar, FormCancellation)
{
    const LatticePoint d = pt({1, -1});
    const Scalar q = (mu(1) * mu(1) - mu(2) * mu(2)).divide_by_form(d);
    EXPECT_TRUE(q.is_polynomial());
    EXPECT_EQ(q, mu(1) + mu(2));
    // scaling the form only changes the content
    const Scalar h = Scalar(1).divide_by_form(pt({2, -2}));
    EXPECT_EQ(h * Scalar(2), Scalar(1).divide_by_form(d));
    EXPECT_EQ(Scalar(1).divide_by_form(pt({-1, 1})), -Scalar(1).divide_by_form(d));
}

TEST(Scalar, CanonicalText)
{
    const Scalar x = mu(1);
    EXPECT_EQ((x * x * x - x).divide_by_constant(12).to_string(), "(mu1^3-mu1)/12");
    EXPECT_EQ(Scalar(BigRational(-1, 12)).divide_by_form(pt({1})).to_string(), "-1/(12*mu.(1))");
    EXPECT_EQ(Scalar(0).to_string(), "0");
    EXPECT_EQ((Scalar(2) * mu(1) - mu(2)).to_string(), "2*mu1-mu2");
}

TEST(Scalar, Specialize)
{
    const Scalar s = (mu(1) + Scalar::var(kVarA)).divide_by_form(pt({1, 1}));
    const Scalar t = s.specialize({{mu_var(0), BigRational(2)}, {mu_var(1), BigRational(3)}});
    EXPECT_EQ(t, (Scalar(2) + Scalar::var(kVarA)).divide_by_constant(5));
    EXPECT_THROW((void)s.specialize({{mu_var(0), BigRational(1)}, {mu_var(1), BigRational(-1)}}), Error);
    EXPECT_THROW((void)s.specialize({{mu_var(0), BigRational(1)}}), Error);
}

TEST(Scalar, Errors)
{
    try {
        (void)Scalar(1).divide_by_form(LatticePoint::zero(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroForm);
    }
    EXPECT_THROW((void)Scalar(1).divide_by_constant(0), Error);
    const Scalar s = Scalar(1).divide_by_form(pt({1, -1}));
    EXPECT_THROW((void)s.evaluate({{mu_var(0), BigRational(3)}, {mu_var(1), BigRational(3)}}), Error);
}

TEST(Scalar, Predicates)
{
    EXPECT_TRUE(Scalar(1).is_one());
    EXPECT_TRUE(Scalar(5).is_constant());
    EXPECT_EQ(Scalar(BigRational(3, 4)).constant_value(), BigRational(3, 4));
    EXPECT_TRUE(mu(2).depends_only_on_mu());
    EXPECT_FALSE(Scalar::var(kVarA).depends_only_on_mu());
    EXPECT_TRUE((mu(1) * Scalar::var(kVarB)).uses_var(kVarB));
    EXPECT_THROW((void)mu(1).constant_value(), Error);
}
