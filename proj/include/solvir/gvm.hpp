#ifndef SOLVIR_GVM_HPP
#define SOLVIR_GVM_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "density.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"

namespace solvir {

/// Splits x by the degree in t_1 (the first lattice coordinate); c has
/// degree 0.
inline std::map<int, AlgebraElement> grade_of(const AlgebraElement& x)
{
    std::map<int, AlgebraElement> out;
    for (const auto& [s, c] : x)
        out[s.is_central() ? 0 : s.index()[0]].add_term(s, c);
    return out;
}

/// u . v_{mu'.kappa} with u a normal-ordered word of negative-degree
/// generators E(x_1) ... E(x_k), x_1 >= ... >= x_k lexicographically.
class GvmMonomial {
public:
    GvmMonomial() = default;
    explicit GvmMonomial(LatticePoint base) : base_(std::move(base)) {}

    /// Sorts the word; fails on a generator of degree >= 0.
    GvmMonomial(std::vector<LatticePoint> word, LatticePoint base) : word_(std::move(word)), base_(std::move(base))
    {
        for (const auto& x : word_)
            if (x[0] >= 0)
                throw Error(ErrorKind::Unsupported, "generator " + x.to_string() + " has degree >= 0");
        std::sort(word_.begin(), word_.end(), [](const LatticePoint& x, const LatticePoint& y) { return y < x; });
    }

    const std::vector<LatticePoint>& word() const noexcept { return word_; }
    const LatticePoint& base() const noexcept { return base_; }

    /// Sum of i_j over the generators E((-i_j, gamma_j)).
    int level() const
    {
        int l = 0;
        for (const auto& x : word_)
            l -= x[0];
        return l;
    }

    /// kappa + sum gamma_j: the weight is a - level mu_1 + mu'.(this).
    LatticePoint total_shift() const
    {
        LatticePoint s = base_;
        for (const auto& x : word_)
            s = s + x.tail();
        return s;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& x : word_)
            s += "e" + x.to_string();
        return s + "v" + base_.to_string();
    }

    friend std::strong_ordering operator<=>(const GvmMonomial& x, const GvmMonomial& y)
    {
        if (x.word_.size() != y.word_.size())
            return x.word_.size() <=> y.word_.size();
        if (auto c = std::lexicographical_compare_three_way(x.word_.begin(), x.word_.end(), y.word_.begin(), y.word_.end()); c != 0)
            return c;
        return x.base_ <=> y.base_;
    }
    friend bool operator==(const GvmMonomial&, const GvmMonomial&) = default;

private:
    friend class GvmModule;
    struct Raw {};
    GvmMonomial(Raw, std::vector<LatticePoint> word, LatticePoint base) : word_(std::move(word)), base_(std::move(base)) {}

    std::vector<LatticePoint> word_;
    LatticePoint base_;
};

using GvmVector = LinComb<GvmMonomial>;

/// The generalized Verma module induced from T_{mu'}(a, b), mu' = (mu_2..mu_n),
/// over the degree >= 0 part of the t_1-grading: degree-0 generators
/// E((0, gamma)) act on the base through T_{mu'}(a, b), positive degrees kill
/// it, c acts by 0.
class GvmModule {
public:
    GvmModule(int rank, DensityParams p) : algebra_(rank), p_(std::move(p))
    {
        if (rank < 2)
            throw Error(ErrorKind::RankMismatch, "the generalized Verma module needs rank >= 2");
    }

    int rank() const noexcept { return algebra_.rank(); }
    const DensityParams& params() const noexcept { return p_; }

    GvmVector act(const AlgebraElement& x, const GvmVector& v) const
    {
        GvmVector out;
        for (const auto& [s, cx] : x) {
            if (s.is_central())
                continue;
            algebra_.check(s.index());
            for (const auto& [m, cv] : v) {
                if (m.base_.rank() != rank() - 1)
                    throw Error(ErrorKind::RankMismatch, "base v" + m.base_.to_string() + " in rank " + std::to_string(rank()));
                add_scaled(out, basis_act(s.index(), m.word_, 0, m.base_), cx * cv);
            }
        }
        return out;
    }

    static std::string format(const GvmVector& v)
    {
        return v.to_string([](const GvmMonomial& m) { return m.to_string(); });
    }

private:
    static void add_scaled(GvmVector& out, const GvmVector& v, const Scalar& c)
    {
        for (const auto& [m, cm] : v)
            out.add_term(m, cm * c);
    }

    // E(g) . (word[from] ... v_base)
    GvmVector basis_act(const LatticePoint& g, const std::vector<LatticePoint>& word, std::size_t from, const LatticePoint& base) const
    {
        const std::vector<LatticePoint> rest(word.begin() + static_cast<std::ptrdiff_t>(from), word.end());
        if (rest.empty()) {
            if (g[0] > 0)
                return {};
            if (g[0] < 0)
                return GvmVector(GvmMonomial(GvmMonomial::Raw{}, {g}, base));
            // (a + mu'.kappa + b mu'.gamma) v_{kappa + gamma}, mu' = (mu_2, ..., mu_n)
            const LatticePoint gamma = g.tail();
            const Scalar coef = p_.a + Scalar::mu_dot(base.prepend(0)) + p_.b * Scalar::mu_dot(g);
            return coef.is_zero() ? GvmVector() : GvmVector(GvmMonomial(GvmMonomial::Raw{}, {}, base + gamma), coef);
        }
        const LatticePoint& x1 = rest.front();
        if (g[0] < 0 && !(g < x1)) {
            std::vector<LatticePoint> w;
            w.reserve(rest.size() + 1);
            w.push_back(g);
            w.insert(w.end(), rest.begin(), rest.end());
            return GvmVector(GvmMonomial(GvmMonomial::Raw{}, std::move(w), base));
        }
        // g x1 R = x1 (g R) + [g, x1] R; the central part of [g, x1] acts by 0
        GvmVector out;
        for (const auto& [m, cm] : basis_act(g, rest, 1, base))
            add_scaled(out, basis_act(x1, m.word_, 0, m.base_), cm);
        const BasisBracket b = Algebra::basis_bracket(g, x1);
        if (!b.coef.is_zero())
            add_scaled(out, basis_act(b.sum, rest, 1, base), b.coef);
        return out;
    }

    Algebra algebra_;
    DensityParams p_;
};

namespace detail {

inline void gvm_extend(const std::vector<LatticePoint>& gens, std::size_t first, int level_left, std::vector<LatticePoint>& word,
                       const LatticePoint& kappa, std::vector<GvmMonomial>& out)
{
    if (level_left == 0) {
        LatticePoint base = kappa;
        for (const auto& x : word)
            base = base - x.tail();
        out.emplace_back(word, base);
        return;
    }
    for (std::size_t j = first; j < gens.size(); ++j) {
        if (-gens[j][0] > level_left)
            continue;
        word.push_back(gens[j]);
        gvm_extend(gens, j, level_left + gens[j][0], word, kappa, out);
        word.pop_back();
    }
}

} // namespace detail

/// Monomials of level i and total mu'-shift kappa whose generators
/// E((-i_j, gamma_j)) have |gamma_j| <= box in every coordinate. The base
/// index is determined by kappa and the word.
inline std::vector<GvmMonomial> level_weight_basis(int level, const LatticePoint& kappa, int box)
{
    if (level < 1)
        throw Error(ErrorKind::Unsupported, "level must be >= 1");
    std::vector<LatticePoint> gens;
    for (int i = 1; i <= level; ++i)
        for (const auto& g : box_points(kappa.rank(), box))
            gens.push_back(g.prepend(-i));
    std::sort(gens.begin(), gens.end(), [](const LatticePoint& x, const LatticePoint& y) { return y < x; });
    std::vector<GvmMonomial> out;
    std::vector<LatticePoint> word;
    detail::gvm_extend(gens, 0, level, word, kappa, out);
    std::sort(out.begin(), out.end());
    return out;
}

struct GvmBoxRank {
    int radius = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
};

struct GvmLevelOne {
    std::vector<GvmBoxRank> boxes;
    bool stabilized = false;
    int stabilized_at = 0; // first radius of the final constant run
};

/// Raising-pairing matrix at level 1: rows E((1, gamma')), |gamma'| <= radius,
/// columns level_weight_basis(1, kappa, radius); each entry is the
/// coefficient of the single T-basis vector v_{kappa + gamma'} in the image.
inline Matrix<Scalar> level1_pairing_matrix(const GvmModule& mod, const LatticePoint& kappa, int radius)
{
    const auto cols = level_weight_basis(1, kappa, radius);
    const auto raisers = box_points(kappa.rank(), radius);
    Matrix<Scalar> m(raisers.size(), std::vector<Scalar>(cols.size()));
    for (std::size_t r = 0; r < raisers.size(); ++r) {
        const AlgebraElement e(BasisSymbol::e(raisers[r].prepend(1)));
        const GvmMonomial target(kappa + raisers[r]);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const GvmVector img = mod.act(e, GvmVector(cols[c]));
            for (const auto& [mono, coef] : img)
                if (mono != target)
                    throw Error(ErrorKind::Unsupported, "level-1 raising produced " + mono.to_string());
            m[r][c] = img.coefficient(target);
        }
    }
    return m;
}

/// Exact ranks of the level-1 pairing matrix over increasing radii. With
/// T_{mu'}(a, b) irreducible, a level-1 vector lies in the maximal proper
/// submodule iff every degree +1 generator kills it, so the rank is the
/// level-1 weight-space dimension of the irreducible quotient. The result
/// counts as stabilized when the last three radii give the same rank.
inline GvmLevelOne quotient_dim_level1(int rank, const LatticePoint& kappa, const DensityParams& p, const std::vector<int>& radii)
{
    if (kappa.rank() != rank - 1)
        throw Error(ErrorKind::RankMismatch, "kappa " + kappa.to_string() + " must have rank " + std::to_string(rank - 1));
    if (p.a.depends_only_on_mu() || p.b.depends_only_on_mu() || p.a_lattice_tag)
        throw Error(ErrorKind::NotFormalParams, "a = " + p.a.to_string() + ", b = " + p.b.to_string() + " are not formal");
    const GvmModule mod(rank, p);
    GvmLevelOne out;
    for (int r : radii) {
        const auto m = level1_pairing_matrix(mod, kappa, r);
        out.boxes.push_back({r, m.size(), m.empty() ? 0 : m.front().size(), solvir::rank(m)});
    }
    const auto& b = out.boxes;
    if (b.size() >= 3 && b[b.size() - 1].rank == b[b.size() - 2].rank && b[b.size() - 2].rank == b[b.size() - 3].rank) {
        out.stabilized = true;
        std::size_t i = b.size() - 1;
        while (i > 0 && b[i - 1].rank == b.back().rank)
            --i;
        out.stabilized_at = b[i].radius;
    }
    return out;
}

} // namespace solvir

#endif
