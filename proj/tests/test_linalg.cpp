#include <algorithm>
#include <random>

#include <gtest/gtest.h>
#include <solvir/linalg.hpp>
#include <solvir/random.hpp>

using namespace solvir;

namespace {

Matrix<BigRational> product(const Matrix<BigRational>& a, const Matrix<BigRational>& b)
{
    Matrix<BigRational> c(a.size(), std::vector<BigRational>(b.front().size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b.front().size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

Matrix<BigRational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> d(-4, 4);
    Matrix<BigRational> m(rows, std::vector<BigRational>(cols));
    for (auto& row : m)
        for (auto& x : row)
            x = BigRational(d(rng), 1 + (d(rng) & 1));
    return m;
}

// rank via double Gaussian elimination with partial pivoting; the entries
// are small, so this is reliable for the sizes used here
std::size_t float_rank(const Matrix<BigRational>& in)
{
    std::vector<std::vector<double>> m;
    for (const auto& row : in) {
        m.emplace_back();
        for (const auto& x : row)
            m.back().push_back(x.to_double());
    }
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        for (std::size_t i = r; i < m.size(); ++i)
            if (std::abs(m[i][c]) > std::abs(m[p][c]))
                p = i;
        if (std::abs(m[p][c]) < 1e-9)
            continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const double f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

TEST(Linalg, RankOfLowRankProducts)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 4, rows = 5, cols = 6;
        const auto m = product(random_matrix(rng, rows, r), random_matrix(rng, r, cols));
        const std::size_t k = rank(m);
        EXPECT_LE(k, r);
        EXPECT_EQ(k, float_rank(m));
    }
}

TEST(Linalg, KernelVectorsAreNullAndComplete)
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = product(random_matrix(rng, 4, 2 + trial % 3), random_matrix(rng, 2 + trial % 3, 7));
        const auto ker = kernel(m, 7);
        EXPECT_EQ(ker.size(), 7 - rank(m));
        for (const auto& v : ker) {
            for (const auto& row : m) {
                BigRational s;
                for (std::size_t j = 0; j < 7; ++j)
                    s += row[j] * v[j];
                EXPECT_TRUE(s.is_zero());
            }
        }
        Matrix<BigRational> stacked = ker;
        EXPECT_EQ(rank(stacked), ker.size());
    }
}

TEST(Linalg, RrefPivots)
{
    Matrix<BigRational> m = {{0, 2, 4}, {0, 1, 2}, {1, 0, 1}};
    const auto piv = rref(m);
    ASSERT_EQ(piv.size(), 2u);
    EXPECT_EQ(piv[0], 0u);
    EXPECT_EQ(piv[1], 1u);
    EXPECT_EQ(m[0][0], BigRational(1));
    EXPECT_EQ(m[1][2], BigRational(2));
}

TEST(Linalg, SymbolicRankMatchesGenericEvaluation)
{
    Rng rng(23);
    std::mt19937_64 pick(24);
    std::uniform_int_distribution<int> val(-50, 50);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t rows = 3, cols = 4, r = 1 + static_cast<std::size_t>(trial % 3);
        Matrix<Scalar> a(rows, std::vector<Scalar>(r)), b(r, std::vector<Scalar>(cols));
        for (auto& row : a)
            for (auto& x : row)
                x = rng.scalar(2) + (rng.coin() ? Scalar::var(kVarA) : Scalar());
        for (auto& row : b)
            for (auto& x : row)
                x = rng.scalar(2, false) * (rng.coin() ? Scalar::var(kVarB) : Scalar(1));
        Matrix<Scalar> m(rows, std::vector<Scalar>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] += a[i][k] * b[k][j];
        const std::size_t symbolic = rank(m);
        std::size_t best = 0;
        for (int s = 0; s < 6; ++s) {
            const std::map<Var, BigRational> at = {{mu_var(0), BigRational(val(pick), 1) + BigRational(1, 7)},
                                                   {mu_var(1), BigRational(val(pick) * 13 + 1, 3)},
                                                   {kVarA, BigRational(val(pick), 11)},
                                                   {kVarB, BigRational(val(pick), 5)}};
            Matrix<BigRational> e(rows, std::vector<BigRational>(cols));
            try {
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < cols; ++j)
                        e[i][j] = m[i][j].evaluate(at);
            } catch (const Error&) {
                continue;
            }
            const std::size_t k = rank(e);
            EXPECT_LE(k, symbolic);
            best = std::max(best, k);
        }
        EXPECT_EQ(best, symbolic);
    }
}

TEST(Linalg, EmptyAndZero)
{
    EXPECT_EQ(rank(Matrix<BigRational>{}), 0u);
    EXPECT_EQ(rank(Matrix<Scalar>{}), 0u);
    EXPECT_EQ(rank(Matrix<Scalar>(3, std::vector<Scalar>(3))), 0u);
    EXPECT_EQ(kernel(Matrix<BigRational>(2, std::vector<BigRational>(3)), 3).size(), 3u);
}
