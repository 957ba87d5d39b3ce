#include <set>

#include <gtest/gtest.h>
#include <solvir/gvm.hpp>
#include <solvir/random.hpp>

using namespace solvir;

namespace {

LatticePoint pt(std::vector<int> c) { return LatticePoint(std::span<const int>(c)); }

Scalar mu(int i) { return Scalar::var(mu_var(i - 1)); }

const Scalar kA = Scalar::var(kVarA), kB = Scalar::var(kVarB);

AlgebraElement gen(const LatticePoint& x) { return AlgebraElement(BasisSymbol::e(x)); }

// E((1, g')) E((-1, g)) v_{kappa - g} = (-2 mu1 + mu2 (g - g')) (a + mu2 (kappa - g) + b mu2 (g + g')) v_{kappa + g'}
Scalar hand_entry(int gp, int g, int kappa)
{
    return (Scalar(-2) * mu(1) + Scalar(g - gp) * mu(2)) * (kA + Scalar(kappa - g) * mu(2) + kB * Scalar(g + gp) * mu(2));
}

ErrorKind kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Unsupported;
}

} // namespace

TEST(Gvm, Grading)
{
    const Algebra g(3);
    const auto parts = grade_of(g.parse("e[2,5,-1] + c + e[0,1,1] - e[-1,0,0]"));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts.at(2), g.parse("e[2,5,-1]"));
    EXPECT_EQ(parts.at(0), g.parse("c + e[0,1,1]"));
    EXPECT_EQ(parts.at(-1), g.parse("-e[-1,0,0]"));
    // brackets add degrees
    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const LatticePoint a = rng.point(3, 2), b = rng.point(3, 2);
        for (const auto& [deg, part] : grade_of(g.vir_bracket(g.e(a), g.e(b))))
            EXPECT_EQ(deg, a[0] + b[0]);
    }
}

TEST(Gvm, ActionOnBase)
{
    const GvmModule m(2, DensityParams::formal());
    const GvmVector v(GvmMonomial(pt({2})));
    EXPECT_EQ(m.act(gen(pt({0, -1})), v), GvmVector(GvmMonomial(pt({1})), kA + Scalar(2) * mu(2) - kB * mu(2)));
    EXPECT_TRUE(m.act(gen(pt({1, 3})), v).is_zero());
    EXPECT_TRUE(m.act(AlgebraElement(BasisSymbol::central()), v).is_zero());
    EXPECT_EQ(m.act(gen(pt({-1, 1})), v), GvmVector(GvmMonomial({pt({-1, 1})}, pt({2}))));
}

TEST(Gvm, DegreeZeroMatchesDensityModule)
{
    Rng rng(72);
    for (int n = 2; n <= 3; ++n) {
        const DensityParams p = DensityParams::formal();
        const GvmModule m(n, p);
        for (int trial = 0; trial < 40; ++trial) {
            const LatticePoint kappa = rng.point(n - 1, 3), gamma = rng.point(n - 1, 3);
            const GvmVector out = m.act(gen(gamma.prepend(0)), GvmVector(GvmMonomial(kappa)));
            const DensityVector ref = density_act(gen(gamma.prepend(0)), DensityVector(kappa.prepend(0)), p);
            ASSERT_EQ(out.size(), ref.size());
            for (const auto& [mono, c] : out) {
                EXPECT_TRUE(mono.word().empty());
                EXPECT_EQ(c, ref.coefficient(mono.base().prepend(0)));
            }
        }
    }
}

TEST(Gvm, RaisingThroughOneGenerator)
{
    const GvmModule m(2, DensityParams::formal());
    for (int kappa = -1; kappa <= 1; ++kappa)
        for (int g = -2; g <= 2; ++g)
            for (int gp = -2; gp <= 2; ++gp) {
                const GvmVector v(GvmMonomial({pt({-1, g})}, pt({kappa - g})));
                const GvmVector img = m.act(gen(pt({1, gp})), v);
                EXPECT_EQ(img.coefficient(GvmMonomial(pt({kappa + gp}))), hand_entry(gp, g, kappa));
                EXPECT_LE(img.size(), 1u);
            }
}

TEST(Gvm, ModuleAxiom)
{
    Rng rng(73);
    const Algebra g(2);
    const GvmModule m(2, DensityParams::formal());
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<LatticePoint> word;
        for (int i = rng.uniform(0, 2); i > 0; --i)
            word.push_back(pt({-rng.uniform(1, 2), rng.uniform(-2, 2)}));
        const GvmVector v(GvmMonomial(word, rng.point(1, 2)));
        const AlgebraElement x = gen(rng.point(2, 2)), y = gen(rng.point(2, 2));
        EXPECT_EQ(m.act(x, m.act(y, v)) - m.act(y, m.act(x, v)), m.act(g.vir_bracket(x, y), v));
    }
}

TEST(Gvm, WeightBookkeeping)
{
    Rng rng(74);
    const GvmModule m(2, DensityParams::formal());
    for (int trial = 0; trial < 40; ++trial) {
        const GvmMonomial start({pt({-1, rng.uniform(-2, 2)})}, rng.point(1, 2));
        const LatticePoint x = rng.point(2, 2);
        const GvmVector out = m.act(gen(x), GvmVector(start));
        for (const auto& [mono, c] : out) {
            EXPECT_EQ(mono.level(), start.level() - x[0]);
            EXPECT_EQ(mono.total_shift(), start.total_shift() + x.tail());
        }
    }
}

TEST(Gvm, LevelBasis)
{
    const auto one = level_weight_basis(1, pt({0}), 3);
    EXPECT_EQ(one.size(), 7u);
    std::set<int> gammas;
    for (const auto& m : one) {
        ASSERT_EQ(m.word().size(), 1u);
        EXPECT_EQ(m.total_shift(), pt({0}));
        gammas.insert(m.word()[0][1]);
    }
    EXPECT_EQ(gammas.size(), 7u);
    EXPECT_EQ(level_weight_basis(1, pt({5}), 2).size(), 5u);
    // level 2, box 1: three words E((-2, g)) and six unordered pairs E((-1, g1)) E((-1, g2))
    const auto two = level_weight_basis(2, pt({0}), 1);
    std::size_t singles = 0, pairs = 0;
    for (const auto& m : two) {
        EXPECT_EQ(m.level(), 2);
        EXPECT_EQ(m.total_shift(), pt({0}));
        (m.word().size() == 1 ? singles : pairs) += 1;
    }
    EXPECT_EQ(singles, 3u);
    EXPECT_EQ(pairs, 6u);
    EXPECT_EQ(level_weight_basis(2, pt({0, 0}), 1).size(), 9u + 45u);
    EXPECT_THROW((void)level_weight_basis(0, pt({0}), 1), Error);
}

TEST(Gvm, PairingMatrixMatchesHandFormula)
{
    const GvmModule m(2, DensityParams::formal());
    for (int kappa = -1; kappa <= 1; ++kappa) {
        const auto mat = level1_pairing_matrix(m, pt({kappa}), 2);
        const auto cols = level_weight_basis(1, pt({kappa}), 2);
        ASSERT_EQ(mat.size(), 5u);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                EXPECT_EQ(mat[r][c], hand_entry(static_cast<int>(r) - 2, cols[c].word()[0][1], kappa));
    }
}

TEST(Gvm, LevelOneRanks)
{
    for (int kappa = -1; kappa <= 1; ++kappa) {
        const auto q = quotient_dim_level1(2, pt({kappa}), DensityParams::formal(), {1, 2, 3, 4});
        ASSERT_EQ(q.boxes.size(), 4u);
        for (const auto& b : q.boxes) {
            EXPECT_EQ(b.rows, static_cast<std::size_t>(2 * b.radius + 1));
            EXPECT_EQ(b.cols, static_cast<std::size_t>(2 * b.radius + 1));
            EXPECT_EQ(b.rank, 3u);
        }
        EXPECT_TRUE(q.stabilized);
        EXPECT_EQ(q.stabilized_at, 1);
    }
}

TEST(Gvm, LevelOneRankNumericOracle)
{
    // rank over Q of the hand formula at random rational points never exceeds
    // the symbolic rank and attains it
    std::mt19937_64 rng(75);
    std::uniform_int_distribution<int> d(-40, 40);
    const std::size_t symbolic = quotient_dim_level1(2, pt({0}), DensityParams::formal(), {3}).boxes[0].rank;
    std::size_t best = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::map<Var, BigRational> at = {{mu_var(0), BigRational(d(rng), 3)},
                                               {mu_var(1), BigRational(d(rng), 7)},
                                               {kVarA, BigRational(d(rng), 5)},
                                               {kVarB, BigRational(d(rng), 11)}};
        Matrix<BigRational> m(7, std::vector<BigRational>(7));
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = hand_entry(r - 3, c - 3, 0).evaluate(at);
        const std::size_t k = rank(m);
        EXPECT_LE(k, symbolic);
        best = std::max(best, k);
    }
    EXPECT_EQ(best, symbolic);
    EXPECT_EQ(symbolic, 3u);
}

TEST(Gvm, FormalParametersRequired)
{
    EXPECT_EQ(kind_of([] { quotient_dim_level1(2, pt({0}), DensityParams(Scalar(), Scalar::var(kVarB)), {1}); }),
              ErrorKind::NotFormalParams);
    EXPECT_EQ(kind_of([] { quotient_dim_level1(2, pt({0}), DensityParams(Scalar::var(kVarA), Scalar(1)), {1}); }),
              ErrorKind::NotFormalParams);
    EXPECT_EQ(kind_of([] { quotient_dim_level1(2, pt({0}), DensityParams::lattice(pt({0, 1}), Scalar::var(kVarB)), {1}); }),
              ErrorKind::NotFormalParams);
    EXPECT_EQ(kind_of([] { quotient_dim_level1(2, pt({0, 0}), DensityParams::formal(), {1}); }), ErrorKind::RankMismatch);
    EXPECT_EQ(kind_of([] { GvmModule(1, DensityParams::formal()); }), ErrorKind::RankMismatch);
    EXPECT_EQ(kind_of([] { GvmMonomial({pt({0, 1})}, pt({0})); }), ErrorKind::Unsupported);
}
