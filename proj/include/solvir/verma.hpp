#ifndef SOLVIR_VERMA_HPP
#define SOLVIR_VERMA_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"

namespace solvir {

/// Normal-ordered word x_1 x_2 ... x_k applied to the vacuum, with every
/// x_j lex-negative and x_1 >= x_2 >= ... >= x_k, so the lex-smallest
/// generator acts first.
class PBWMonomial {
public:
    PBWMonomial() = default;

    /// Sorts the generators into normal order; fails on a non-negative one.
    explicit PBWMonomial(std::vector<LatticePoint> word) : word_(std::move(word))
    {
        for (const auto& x : word_)
            if (x.lex_sign() >= 0)
                throw Error(ErrorKind::Unsupported, "PBW generator " + x.to_string() + " is not lex-negative");
        std::sort(word_.begin(), word_.end(), [](const LatticePoint& x, const LatticePoint& y) { return y < x; });
    }

    const std::vector<LatticePoint>& word() const noexcept { return word_; }
    std::size_t length() const noexcept { return word_.size(); }
    bool is_vacuum() const noexcept { return word_.empty(); }

    /// Sum of the generators: the weight is lambda + mu.shift.
    LatticePoint shift(int rank) const
    {
        LatticePoint s = LatticePoint::zero(rank);
        for (const auto& x : word_)
            s = s + x;
        return s;
    }

    /// Whether |x_j(i)| <= coord_bound for all j, i and length <= max_length.
    bool in_box(int coord_bound, int max_length) const
    {
        if (static_cast<int>(word_.size()) > max_length)
            return false;
        for (const auto& x : word_)
            if (x.max_abs() > coord_bound)
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& x : word_)
            s += "e" + x.to_string();
        return s + "v";
    }

    friend std::strong_ordering operator<=>(const PBWMonomial& x, const PBWMonomial& y)
    {
        if (x.word_.size() != y.word_.size())
            return x.word_.size() <=> y.word_.size();
        return std::lexicographical_compare_three_way(x.word_.begin(), x.word_.end(), y.word_.begin(), y.word_.end());
    }
    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

private:
    friend class VermaModule;
    struct Raw {};
    PBWMonomial(Raw, std::vector<LatticePoint> word) : word_(std::move(word)) {}

    std::vector<LatticePoint> word_;
};

using VermaVector = LinComb<PBWMonomial>;

struct TruncationBox {
    int coord_bound = 1;
    int max_length = 1;

    TruncationBox(int n, int l) : coord_bound(n), max_length(l)
    {
        if (n < 1 || l < 1)
            throw Error(ErrorKind::Unsupported, "truncation box needs N >= 1 and L >= 1");
    }
};

/// M(lambda, c) for the lexicographic triangular decomposition: E(0) acts on
/// the vacuum by lambda, c by the scalar c, and lex-positive generators kill
/// the vacuum.
class VermaModule {
public:
    VermaModule(int rank, Scalar lambda = Scalar::var(kVarLambda), Scalar c = Scalar::var(kVarCharge))
        : algebra_(rank), lambda_(std::move(lambda)), c_(std::move(c))
    {}

    int rank() const noexcept { return algebra_.rank(); }
    const Scalar& lambda() const noexcept { return lambda_; }
    const Scalar& central_charge() const noexcept { return c_; }

    static VermaVector vacuum() { return VermaVector(PBWMonomial()); }

    /// x.v rewritten in normal order. With `limit`, a term outside the box
    /// raises BoxOverflow instead of being returned.
    VermaVector act(const AlgebraElement& x, const VermaVector& v, std::optional<TruncationBox> limit = std::nullopt) const
    {
        VermaVector out;
        for (const auto& [s, cx] : x) {
            if (!s.is_central())
                algebra_.check(s.index());
            for (const auto& [m, cv] : v)
                add_scaled(out, basis_act(s, m.word_, 0), cx * cv);
        }
        if (limit)
            for (const auto& [m, cm] : out)
                if (!m.in_box(limit->coord_bound, limit->max_length))
                    throw Error(ErrorKind::BoxOverflow, m.to_string() + " leaves the box N=" + std::to_string(limit->coord_bound)
                                                           + " L=" + std::to_string(limit->max_length));
        return out;
    }

    /// The vector obtained by applying E(word.back()) first, then the others
    /// leftwards, to the vacuum. The generators may come in any order.
    VermaVector apply_word(const std::vector<LatticePoint>& word) const
    {
        VermaVector v = vacuum();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            v = act(AlgebraElement(BasisSymbol::e(*it)), v);
        return v;
    }

    /// E(gamma).v for every lex-positive gamma in [-N, N]^n whose target
    /// weight shift beta + gamma is still <= 0; v must be homogeneous.
    std::map<LatticePoint, VermaVector> singular_residuals(const VermaVector& v, const TruncationBox& box) const
    {
        const auto beta = homogeneous_shift(v);
        std::map<LatticePoint, VermaVector> out;
        if (!beta)
            return out;
        for (const auto& g : box_points(rank(), box.coord_bound)) {
            if (g.lex_sign() <= 0 || (*beta + g).lex_sign() > 0)
                continue;
            out.emplace(g, act(AlgebraElement(BasisSymbol::e(g)), v));
        }
        return out;
    }

    /// Common weight shift of the terms of v; nullopt for v = 0.
    std::optional<LatticePoint> homogeneous_shift(const VermaVector& v) const
    {
        std::optional<LatticePoint> s;
        for (const auto& [m, c] : v) {
            LatticePoint t = m.shift(rank());
            if (s && *s != t)
                throw Error(ErrorKind::NonHomogeneous, "terms of shifts " + s->to_string() + " and " + t.to_string());
            s = t;
        }
        return s;
    }

    static std::string format(const VermaVector& v)
    {
        return v.to_string([](const PBWMonomial& m) { return m.to_string(); });
    }

private:
    static void add_scaled(VermaVector& out, const VermaVector& v, const Scalar& c)
    {
        for (const auto& [m, cm] : v)
            out.add_term(m, cm * c);
    }

    // s . (word[from] word[from+1] ... v)
    VermaVector basis_act(const BasisSymbol& s, const std::vector<LatticePoint>& word, std::size_t from) const
    {
        const std::vector<LatticePoint> rest(word.begin() + static_cast<std::ptrdiff_t>(from), word.end());
        if (s.is_central())
            return c_.is_zero() ? VermaVector() : VermaVector(PBWMonomial(PBWMonomial::Raw{}, rest), c_);
        const LatticePoint& g = s.index();
        if (g.is_zero()) {
            LatticePoint w = LatticePoint::zero(rank());
            for (const auto& x : rest)
                w = w + x;
            const Scalar eig = lambda_ + Scalar::mu_dot(w);
            return eig.is_zero() ? VermaVector() : VermaVector(PBWMonomial(PBWMonomial::Raw{}, rest), eig);
        }
        if (rest.empty()) {
            if (g.lex_sign() > 0)
                return {};
            return VermaVector(PBWMonomial(PBWMonomial::Raw{}, {g}));
        }
        const LatticePoint& x1 = rest.front();
        if (g.lex_sign() < 0 && !(g < x1)) {
            std::vector<LatticePoint> w;
            w.reserve(rest.size() + 1);
            w.push_back(g);
            w.insert(w.end(), rest.begin(), rest.end());
            return VermaVector(PBWMonomial(PBWMonomial::Raw{}, std::move(w)));
        }
        // g x1 R = x1 (g R) + [g, x1] R
        VermaVector out;
        const VermaVector inner = basis_act(s, rest, 1);
        const BasisSymbol e1 = BasisSymbol::e(x1);
        for (const auto& [m, cm] : inner)
            add_scaled(out, basis_act(e1, m.word_, 0), cm);
        const BasisBracket b = Algebra::basis_bracket(g, x1);
        if (!b.coef.is_zero())
            add_scaled(out, basis_act(BasisSymbol::e(b.sum), rest, 1), b.coef);
        if (!b.central.is_zero())
            add_scaled(out, basis_act(BasisSymbol::central(), rest, 1), b.central);
        return out;
    }

    Algebra algebra_;
    Scalar lambda_;
    Scalar c_;
};

namespace detail {

inline void pbw_extend(const std::vector<LatticePoint>& gens, std::size_t first, const LatticePoint& remaining, int slots,
                       int bound, std::vector<LatticePoint>& word, std::vector<PBWMonomial>& out)
{
    if (remaining.is_zero()) {
        out.emplace_back(word);
        return;
    }
    if (slots == 0 || remaining.lex_sign() > 0)
        return;
    for (int i = 0; i < remaining.rank(); ++i)
        if (remaining[i] < -bound * slots || remaining[i] > bound * slots)
            return;
    for (std::size_t j = first; j < gens.size(); ++j) {
        const LatticePoint& x = gens[j];
        // gens are in decreasing order, so once x < remaining every later
        // generator leaves a positive remainder
        if (x < remaining)
            break;
        word.push_back(x);
        pbw_extend(gens, j, remaining - x, slots - 1, bound, word, out);
        word.pop_back();
    }
}

} // namespace detail

/// All normal-ordered words inside the box whose generators sum to `shift`,
/// in increasing PBWMonomial order.
inline std::vector<PBWMonomial> pbw_enumerate(const LatticePoint& shift, const TruncationBox& box)
{
    if (shift.lex_sign() > 0)
        throw Error(ErrorKind::Unsupported, "weight shift " + shift.to_string() + " is lex-positive");
    std::vector<LatticePoint> gens;
    for (const auto& p : box_points(shift.rank(), box.coord_bound))
        if (p.lex_sign() < 0)
            gens.push_back(p);
    std::reverse(gens.begin(), gens.end());
    std::vector<PBWMonomial> out;
    std::vector<LatticePoint> word;
    detail::pbw_extend(gens, 0, shift, box.max_length, box.coord_bound, word, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Dimension of the in-box slice of the weight space lambda + mu.shift.
inline std::size_t weight_space_dim_truncated(const LatticePoint& shift, const TruncationBox& box)
{
    return pbw_enumerate(shift, box).size();
}

} // namespace solvir

#endif
