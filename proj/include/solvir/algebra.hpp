#ifndef SOLVIR_ALGEBRA_HPP
#define SOLVIR_ALGEBRA_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"
#include "lattice.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"
#include "text.hpp"

namespace solvir {

/// Basis symbol of the solenoidal Virasoro algebra: e_{mu.alpha} = E(alpha),
/// or the central element c. d_mu is E(0).
class BasisSymbol {
public:
    BasisSymbol() = default;
    static BasisSymbol e(LatticePoint alpha) { return BasisSymbol(std::move(alpha), false); }
    static BasisSymbol central() { return BasisSymbol(LatticePoint(), true); }

    bool is_central() const noexcept { return central_; }
    const LatticePoint& index() const noexcept { return alpha_; }

    /// E symbols in lexicographic order of their index, c last.
    friend std::strong_ordering operator<=>(const BasisSymbol& x, const BasisSymbol& y) noexcept
    {
        if (x.central_ != y.central_)
            return x.central_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return x.alpha_ <=> y.alpha_;
    }
    friend bool operator==(const BasisSymbol& x, const BasisSymbol& y) noexcept
    {
        return x.central_ == y.central_ && x.alpha_ == y.alpha_;
    }

    std::string to_string() const { return central_ ? "c" : "e" + alpha_.to_string(); }

private:
    BasisSymbol(LatticePoint alpha, bool central) : alpha_(std::move(alpha)), central_(central) {}

    LatticePoint alpha_;
    bool central_ = false;
};

using AlgebraElement = LinComb<BasisSymbol>;

/// ((mu.alpha)^3 - mu.alpha) / 12, the diagonal value of the canonical
/// cocycle.
inline Scalar canonical_eta(const LatticePoint& alpha)
{
    if (alpha.is_zero())
        return {};
    const Scalar x = Scalar::mu_dot(alpha);
    return (x * x * x - x).divide_by_constant(12);
}

/// Result of bracketing two basis vectors E(alpha), E(beta):
/// coef * E(sum) + central * c.
struct BasisBracket {
    Scalar coef;
    LatticePoint sum;
    Scalar central;
};

/// Split of an element along the lexicographic triangular decomposition.
struct TriangularParts {
    AlgebraElement plus;
    AlgebraElement zero;
    AlgebraElement minus;
};

/// The algebra Vir(n)_mu for a fixed rank n. Elements of another rank are
/// rejected with RankMismatch.
class Algebra {
public:
    explicit Algebra(int rank) : rank_(rank)
    {
        if (rank < 1 || rank > kMaxRank)
            throw Error(ErrorKind::RankMismatch, "rank must lie in [1, " + std::to_string(kMaxRank) + "]");
    }

    int rank() const noexcept { return rank_; }

    AlgebraElement e(const LatticePoint& alpha) const
    {
        check(alpha);
        return AlgebraElement(BasisSymbol::e(alpha));
    }
    AlgebraElement d() const { return e(LatticePoint::zero(rank_)); }
    AlgebraElement central() const { return AlgebraElement(BasisSymbol::central()); }

    static BasisBracket basis_bracket(const LatticePoint& alpha, const LatticePoint& beta)
    {
        BasisBracket r{Scalar::mu_dot(beta - alpha), alpha + beta, Scalar()};
        if (r.sum.is_zero())
            r.central = canonical_eta(alpha);
        return r;
    }

    /// [x, y] in W(n)_mu: bilinear extension of
    /// [E(alpha), E(beta)] = mu.(beta - alpha) E(alpha + beta).
    AlgebraElement witt_bracket(const AlgebraElement& x, const AlgebraElement& y) const
    {
        for (const auto* z : {&x, &y})
            for (const auto& [s, c] : *z)
                if (s.is_central())
                    throw Error(ErrorKind::CentralTermPresent, "witt_bracket argument contains c");
        return bracket(x, y, false);
    }

    /// Full bracket with the normalized central term
    /// ((mu.alpha)^3 - mu.alpha)/12 delta_{alpha,-beta} c.
    AlgebraElement vir_bracket(const AlgebraElement& x, const AlgebraElement& y) const { return bracket(x, y, true); }

    AlgebraElement jacobi_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) const
    {
        AlgebraElement r = vir_bracket(x, vir_bracket(y, z));
        r += vir_bracket(y, vir_bracket(z, x));
        r += vir_bracket(z, vir_bracket(x, y));
        return r;
    }

    /// Jacobi residual of three basis vectors E(alpha), E(beta), E(kappa),
    /// returned as the coefficients of E(alpha + beta + kappa) and of c.
    static std::pair<Scalar, Scalar> basis_jacobi_residual(const LatticePoint& alpha, const LatticePoint& beta,
                                                           const LatticePoint& kappa)
    {
        Scalar e, c;
        auto cyclic = [&](const LatticePoint& x, const LatticePoint& y, const LatticePoint& z) {
            // [x, [y, z]]
            const BasisBracket inner = basis_bracket(y, z);
            if (inner.coef.is_zero())
                return;
            const BasisBracket outer = basis_bracket(x, inner.sum);
            e += inner.coef * outer.coef;
            if (!outer.central.is_zero())
                c += inner.coef * outer.central;
        };
        cyclic(alpha, beta, kappa);
        cyclic(beta, kappa, alpha);
        cyclic(kappa, alpha, beta);
        return {e, c};
    }

    TriangularParts triangular_split(const AlgebraElement& x) const
    {
        TriangularParts p;
        for (const auto& [s, c] : x) {
            if (!s.is_central())
                check(s.index());
            const int sign = s.is_central() ? 0 : s.index().lex_sign();
            (sign > 0 ? p.plus : sign < 0 ? p.minus : p.zero).add_term(s, c);
        }
        return p;
    }

    /// e_m^i = mu_i^{-1} E(m eps_i), with the axis i counted from 1.
    AlgebraElement vir_i_element(int axis, int m) const
    {
        if (axis < 1 || axis > rank_)
            throw Error(ErrorKind::AxisOutOfRange, "axis " + std::to_string(axis) + " outside 1.." + std::to_string(rank_));
        const LatticePoint unit = LatticePoint::unit(rank_, axis - 1);
        return AlgebraElement(BasisSymbol::e(m * unit), Scalar(1).divide_by_form(unit));
    }

    /// Fits the central coefficient of [e_m^i, e_{-m}^i] to a m^3 + b m from
    /// the samples m = 1, 2 and checks m = 3.
    std::pair<Scalar, Scalar> vir_i_cocycle_coefficients(int axis) const
    {
        auto eta = [&](int m) {
            return vir_bracket(vir_i_element(axis, m), vir_i_element(axis, -m)).coefficient(BasisSymbol::central());
        };
        const Scalar e1 = eta(1), e2 = eta(2), e3 = eta(3);
        const Scalar a = (e2 - Scalar(2) * e1).divide_by_constant(6);
        const Scalar b = e1 - a;
        if (Scalar(27) * a + Scalar(3) * b != e3)
            throw Error(ErrorKind::FitFailed, "central term of Vir_" + std::to_string(axis) + " is not a m^3 + b m");
        return {a, b};
    }

    AlgebraElement parse(std::string_view text) const
    {
        return parse_lincomb<BasisSymbol>(text, [this](std::string_view name, const std::optional<LatticePoint>& idx)
                                                   -> std::optional<BasisSymbol> {
            if (name == "e" && idx) {
                check(*idx);
                return BasisSymbol::e(*idx);
            }
            if (name == "c" && !idx)
                return BasisSymbol::central();
            return std::nullopt;
        });
    }

    static std::string format(const AlgebraElement& x)
    {
        return x.to_string([](const BasisSymbol& s) { return s.to_string(); });
    }

    void check(const LatticePoint& alpha) const
    {
        if (alpha.rank() != rank_)
            throw Error(ErrorKind::RankMismatch, "lattice point " + alpha.to_string() + " in a rank " + std::to_string(rank_) + " algebra");
    }

private:
    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, bool with_central) const
    {
        AlgebraElement r;
        for (const auto& [s, cs] : x) {
            if (s.is_central())
                continue;
            check(s.index());
            for (const auto& [t, ct] : y) {
                if (t.is_central())
                    continue;
                check(t.index());
                const BasisBracket b = basis_bracket(s.index(), t.index());
                const Scalar c = cs * ct;
                r.add_term(BasisSymbol::e(b.sum), c * b.coef);
                if (with_central && !b.central.is_zero())
                    r.add_term(BasisSymbol::central(), c * b.central);
            }
        }
        return r;
    }

    int rank_;
};

} // namespace solvir

#endif
