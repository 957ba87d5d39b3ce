#ifndef SOLVIR_COCYCLE_HPP
#define SOLVIR_COCYCLE_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "algebra.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "lincomb.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
#include "text.hpp"

namespace solvir {

/// Linear functional f on W(n)_mu, finitely supported: f(E(alpha)).
using OneCochain = LinComb<LatticePoint>;

/// The canonical cocycle value on (E(alpha), E(beta)), without the symbol c.
inline Scalar canonical_cocycle(const LatticePoint& alpha, const LatticePoint& beta)
{
    LatticePoint::require_same_rank(alpha, beta);
    return (alpha + beta).is_zero() ? canonical_eta(alpha) : Scalar();
}

/// Skew bilinear form on W(n)_mu,
///
///   theta = m * C_mu + delta(f) + extra,
///
/// where C_mu is the canonical cocycle, delta(f)(x, y) = f([x, y]) is the
/// coboundary of a finitely supported 1-cochain, and `extra` is a finitely
/// supported skew table. Each unordered off-diagonal pair is stored once,
/// keyed with the lexicographically smaller point first.
class TwoCochain {
public:
    TwoCochain() = default;

    static TwoCochain canonical(Scalar multiple = Scalar(1))
    {
        TwoCochain t;
        t.canonical_multiple_ = std::move(multiple);
        return t;
    }

    static TwoCochain coboundary_of(OneCochain f)
    {
        TwoCochain t;
        t.coboundary_ = std::move(f);
        return t;
    }

    const Scalar& canonical_multiple() const noexcept { return canonical_multiple_; }
    const OneCochain& coboundary_part() const noexcept { return coboundary_; }
    const std::map<std::pair<LatticePoint, LatticePoint>, Scalar>& extra() const noexcept { return extra_; }

    /// Adds `value` to theta(alpha, beta) (and -value to theta(beta, alpha)).
    void add_extra(const LatticePoint& alpha, const LatticePoint& beta, const Scalar& value)
    {
        if (value.is_zero())
            return;
        if (alpha == beta)
            throw Error(ErrorKind::Unsupported, "a skew cochain vanishes on the diagonal " + alpha.to_string());
        const bool swap = lex_compare(beta, alpha) < 0;
        const auto key = swap ? std::make_pair(beta, alpha) : std::make_pair(alpha, beta);
        Scalar& slot = extra_[key];
        slot += swap ? -value : value;
        if (slot.is_zero())
            extra_.erase(key);
    }

    Scalar operator()(const LatticePoint& alpha, const LatticePoint& beta) const
    {
        Scalar v;
        if (!canonical_multiple_.is_zero())
            v += canonical_multiple_ * canonical_cocycle(alpha, beta);
        if (!coboundary_.is_zero()) {
            const Scalar f = coboundary_.coefficient(alpha + beta);
            if (!f.is_zero())
                v += Scalar::mu_dot(beta - alpha) * f;
        }
        if (!extra_.empty() && alpha != beta) {
            const bool swap = lex_compare(beta, alpha) < 0;
            auto it = extra_.find(swap ? std::make_pair(beta, alpha) : std::make_pair(alpha, beta));
            if (it != extra_.end())
                v += swap ? -it->second : it->second;
        }
        return v;
    }

    friend TwoCochain operator+(TwoCochain x, const TwoCochain& y)
    {
        x.canonical_multiple_ += y.canonical_multiple_;
        x.coboundary_ += y.coboundary_;
        for (const auto& [k, v] : y.extra_)
            x.add_extra(k.first, k.second, v);
        return x;
    }

private:
    Scalar canonical_multiple_;
    OneCochain coboundary_;
    std::map<std::pair<LatticePoint, LatticePoint>, Scalar> extra_;
};

/// theta(alpha, [kappa, beta]) + theta(beta, [alpha, kappa]) + theta(kappa, [beta, alpha])
/// for any cochain callable theta(LatticePoint, LatticePoint) -> Scalar.
template <class Cochain>
Scalar cocycle_residual(const Cochain& theta, const LatticePoint& alpha, const LatticePoint& beta, const LatticePoint& kappa)
{
    auto term = [&](const LatticePoint& x, const LatticePoint& y, const LatticePoint& z) {
        // theta(x, [y, z]) with [E(y), E(z)] = mu.(z - y) E(y + z)
        const Scalar t = theta(x, y + z);
        return t.is_zero() ? Scalar() : t * Scalar::mu_dot(z - y);
    };
    return term(alpha, kappa, beta) + term(beta, alpha, kappa) + term(kappa, beta, alpha);
}

/// delta(f)(E(alpha), E(beta)) = f([E(alpha), E(beta)]).
inline TwoCochain coboundary(const OneCochain& f) { return TwoCochain::coboundary_of(f); }

/// eta(alpha) = theta(alpha, -alpha) of a normalized cocycle, for alpha in
/// [-box, box]^n.
struct EtaTable {
    int rank = 0;
    int box = 0;
    std::map<LatticePoint, Scalar> values;

    const Scalar& at(const LatticePoint& alpha) const
    {
        auto it = values.find(alpha);
        if (it == values.end())
            throw Error(ErrorKind::OutsideBox, alpha.to_string() + " outside the eta table of radius " + std::to_string(box));
        return it->second;
    }

    bool contains(const LatticePoint& alpha) const { return values.count(alpha) != 0; }

    /// Table of a given function of x = mu.alpha.
    template <class F>
    static EtaTable from_function(int rank, int box, F&& eta_of_x)
    {
        EtaTable t{rank, box, {}};
        for (const auto& p : box_points(rank, box))
            t.values.emplace(p, eta_of_x(Scalar::mu_dot(p)));
        return t;
    }
};

struct NormalizedCocycle {
    EtaTable eta;
    OneCochain shift; // s(alpha) = theta(0, alpha) / mu.alpha on the box
};

/// First pair of [-box, box]^n on which theta is not skew, or first triple
/// on which the cocycle condition fails. For a skew theta the residual is
/// alternating in its three arguments, so triples of pairwise distinct points
/// taken in lexicographic order cover the box.
template <class Cochain>
std::optional<std::string> find_cocycle_violation(const Cochain& theta, int rank, int box)
{
    const auto pts = box_points(rank, box);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            if (b < a)
                continue;
            const Scalar s = theta(a, b) + theta(b, a);
            if (!s.is_zero())
                return "theta(" + a.to_string() + ", " + b.to_string() + ") + theta(" + b.to_string() + ", " + a.to_string()
                       + ") = " + s.to_string();
        }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const Scalar r = cocycle_residual(theta, pts[i], pts[j], pts[k]);
                if (!r.is_zero())
                    return "residual " + r.to_string() + " at " + pts[i].to_string() + " " + pts[j].to_string() + " "
                           + pts[k].to_string();
            }
    return std::nullopt;
}

/// Applies the basis change e'_alpha = e_alpha + theta(0, alpha)/(mu.alpha) c,
/// after which theta'(0, alpha) = 0, and reads off eta on the box. Fails with
/// NotACocycle if the cocycle condition is violated in the box, and with
/// NotNormalizable if an off-diagonal value survives the shift.
inline NormalizedCocycle normalize_cocycle(const TwoCochain& theta, int rank, int box)
{
    if (auto bad = find_cocycle_violation(theta, rank, box))
        throw Error(ErrorKind::NotACocycle, *bad);
    const LatticePoint zero = LatticePoint::zero(rank);
    auto shift_at = [&](const LatticePoint& g) { return g.is_zero() ? Scalar() : theta(zero, g).divide_by_form(g); };
    auto shifted = [&](const LatticePoint& a, const LatticePoint& b) {
        // theta'(a, b) = theta(a, b) - mu.(b - a) s(a + b)
        const Scalar s = shift_at(a + b);
        return s.is_zero() ? theta(a, b) : theta(a, b) - Scalar::mu_dot(b - a) * s;
    };

    NormalizedCocycle out;
    out.eta.rank = rank;
    out.eta.box = box;
    const auto pts = box_points(rank, box);
    for (const auto& p : pts)
        out.shift.add_term(p, shift_at(p));
    for (const auto& a : pts) {
        for (const auto& b : pts) {
            if ((a + b).is_zero())
                continue;
            const Scalar v = shifted(a, b);
            if (!v.is_zero())
                throw Error(ErrorKind::NotNormalizable,
                            "theta'(" + a.to_string() + ", " + b.to_string() + ") = " + v.to_string());
        }
        out.eta.values.emplace(a, shifted(a, -a));
    }
    return out;
}

/// Exact fit eta(alpha) = a (mu.alpha)^3 + b mu.alpha, read off along the
/// first axis from alpha = eps_1 and 2 eps_1, then checked on the whole table.
inline std::pair<Scalar, Scalar> recognize_eta(const EtaTable& eta)
{
    if (eta.box < 2 || eta.rank < 1)
        throw Error(ErrorKind::BoxTooSmall, "recognize_eta needs a table of radius >= 2");
    const LatticePoint e1 = LatticePoint::unit(eta.rank, 0);
    const Scalar x = Scalar::mu_dot(e1);
    const Scalar y1 = eta.at(e1), y2 = eta.at(2 * e1);
    // y2 - 2 y1 = 6 a x^3
    const Scalar a = (y2 - Scalar(2) * y1).divide_by_constant(6).divide_by_form(e1).divide_by_form(e1).divide_by_form(e1);
    const Scalar b = (y1 - a * x * x * x).divide_by_form(e1);
    for (const auto& [p, v] : eta.values) {
        const Scalar xp = Scalar::mu_dot(p);
        if (a * xp * xp * xp + b * xp != v)
            throw Error(ErrorKind::NotCubicOdd, "eta" + p.to_string() + " = " + v.to_string() + " is not a x^3 + b x");
    }
    return {a, b};
}

/// 2x eta(x) - 2y eta(y) - (x - y) eta(x + y) - (x + y) eta(x - y)
/// at x = mu.alpha, y = mu.beta.
inline Scalar full_equation_residual(const EtaTable& eta, const LatticePoint& alpha, const LatticePoint& beta)
{
    for (const auto& p : {alpha, beta, alpha + beta, alpha - beta})
        if (!eta.contains(p))
            throw Error(ErrorKind::OutsideBox, p.to_string() + " outside the eta table");
    const Scalar x = Scalar::mu_dot(alpha), y = Scalar::mu_dot(beta);
    return Scalar(2) * x * eta.at(alpha) - Scalar(2) * y * eta.at(beta) - (x - y) * eta.at(alpha + beta)
           - (x + y) * eta.at(alpha - beta);
}

/// Polynomial solutions of 5x eta(x) - 4x eta(2x) + x eta(3x) = 0 with
/// deg eta <= degree_bound.
struct FunctionalEquationSolution {
    std::vector<int> exponents;      // x^k spanning the kernel when it is monomial
    std::vector<Polynomial> basis;   // kernel basis as polynomials in x = mu1
    std::vector<BigRational> diagonal; // coefficient of a_k x^(k+1) in the equation
};

inline FunctionalEquationSolution solve_functional_equation(int degree_bound)
{
    if (degree_bound < 0)
        throw Error(ErrorKind::Unsupported, "negative degree bound");
    const std::size_t unknowns = static_cast<std::size_t>(degree_bound) + 1;
    const Polynomial x = Polynomial::var(mu_var(0));
    // column k: the equation applied to eta = x^k, as coefficients of x^0..x^(D+1)
    Matrix<BigRational> m(unknowns + 1, std::vector<BigRational>(unknowns));
    FunctionalEquationSolution out;
    for (std::size_t k = 0; k < unknowns; ++k) {
        const int kk = static_cast<int>(k);
        const Polynomial image = Polynomial(5) * x * x.pow(kk) - Polynomial(4) * x * (Polynomial(2) * x).pow(kk)
                                 + x * (Polynomial(3) * x).pow(kk);
        for (std::size_t j = 0; j <= unknowns; ++j)
            m[j][k] = image.coefficient(Monomial::var(mu_var(0), static_cast<int>(j)));
        out.diagonal.push_back(m[k + 1][k]);
    }
    for (const auto& v : kernel(m, unknowns)) {
        Polynomial p;
        int nonzero = 0, last = -1;
        for (std::size_t k = 0; k < unknowns; ++k) {
            if (v[k].is_zero())
                continue;
            p += Polynomial::monomial(Monomial::var(mu_var(0), static_cast<int>(k)), v[k]);
            ++nonzero;
            last = static_cast<int>(k);
        }
        if (nonzero == 1)
            out.exponents.push_back(last);
        out.basis.push_back(std::move(p));
    }
    return out;
}

struct H2Experiment {
    int box = 0;
    int degree_bound = 0;
    std::size_t equations = 0;
    std::size_t cocycle_space_dim = 0;
    std::size_t coboundary_space_dim = 0;
    std::size_t quotient_dim = 0;
};

namespace detail {

// Appends one row per mu-monomial of sum_k coeffs[k] * unknown_k = 0.
inline void append_polynomial_rows(Matrix<BigRational>& rows, const std::vector<Scalar>& coeffs)
{
    std::map<Monomial, std::vector<BigRational>> by_mono;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        if (!coeffs[k].is_polynomial())
            throw Error(ErrorKind::Unsupported, "expected polynomial coefficients in the linear system");
        for (const auto& t : coeffs[k].numerator().terms()) {
            auto& row = by_mono[t.mono];
            row.resize(coeffs.size());
            row[k] += t.coef;
        }
    }
    for (auto& [mono, row] : by_mono)
        if (std::any_of(row.begin(), row.end(), [](const BigRational& v) { return !v.is_zero(); }))
            rows.push_back(std::move(row));
}

} // namespace detail

/// Dimension count for H^2 inside the ansatz theta(alpha, beta) =
/// delta_{alpha,-beta} eta(mu.alpha), eta(x) = sum_{k<=D} a_k x^k, which
/// every cocycle reaches after the normalizing basis change.
///
/// Cocycles: skewness and the cocycle condition on all triples of the box
/// give linear equations in (a_0..a_D). Coboundaries: 1-cochains supported
/// in the box whose coboundary has no off-diagonal values in the box, mapped
/// to ansatz coordinates.
inline H2Experiment h2_rank_experiment(int n, int box, int degree_bound = 7)
{
    if (box < 2)
        throw Error(ErrorKind::BoxTooSmall, "h2_rank_experiment needs box >= 2");
    H2Experiment out;
    out.box = box;
    out.degree_bound = degree_bound;
    const std::size_t unknowns = static_cast<std::size_t>(degree_bound) + 1;
    const auto pts = box_points(n, box);

    // theta_k(alpha, beta) = delta_{alpha,-beta} (mu.alpha)^k
    auto theta_k = [](int k) {
        return [k](const LatticePoint& a, const LatticePoint& b) {
            return (a + b).is_zero() ? Scalar::mu_dot(a).pow(k) : Scalar();
        };
    };

    Matrix<BigRational> cocycle_rows;
    for (const auto& a : pts) {
        std::vector<Scalar> skew(unknowns);
        for (std::size_t k = 0; k < unknowns; ++k)
            skew[k] = theta_k(static_cast<int>(k))(a, -a) + theta_k(static_cast<int>(k))(-a, a);
        detail::append_polynomial_rows(cocycle_rows, skew);
    }
    for (const auto& a : pts)
        for (const auto& b : pts) {
            const LatticePoint c = -(a + b);
            if (c.max_abs() > box)
                continue;
            std::vector<Scalar> res(unknowns);
            for (std::size_t k = 0; k < unknowns; ++k)
                res[k] = cocycle_residual(theta_k(static_cast<int>(k)), a, b, c);
            detail::append_polynomial_rows(cocycle_rows, res);
        }
    out.equations = cocycle_rows.size();
    const auto cocycles = kernel(cocycle_rows, unknowns);
    out.cocycle_space_dim = cocycles.size();

    // 1-cochains f on the box with delta(f)(alpha, beta) = 0 whenever alpha + beta != 0
    Matrix<BigRational> diag_rows;
    for (const auto& a : pts)
        for (const auto& b : pts) {
            const LatticePoint g = a + b;
            if (g.is_zero() || g.max_abs() > box)
                continue;
            std::vector<Scalar> coeffs(pts.size());
            const auto idx = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), g) - pts.begin());
            coeffs[idx] = coboundary(OneCochain(g))(a, b);
            detail::append_polynomial_rows(diag_rows, coeffs);
        }
    const auto diagonal_cochains = kernel(diag_rows, pts.size());

    // ansatz coordinates of delta(f): solve eta_f(mu.alpha) = sum_k c_k (mu.alpha)^k
    Matrix<BigRational> images;
    for (const auto& v : diagonal_cochains) {
        OneCochain f;
        for (std::size_t i = 0; i < pts.size(); ++i)
            f.add_term(pts[i], Scalar(v[i]));
        const TwoCochain df = coboundary(f);
        Matrix<BigRational> fit;
        for (const auto& a : pts) {
            std::vector<Scalar> eq(unknowns + 1);
            for (std::size_t k = 0; k < unknowns; ++k)
                eq[k] = Scalar::mu_dot(a).pow(static_cast<int>(k));
            eq[unknowns] = -df(a, -a);
            detail::append_polynomial_rows(fit, eq);
        }
        const auto sol = kernel(fit, unknowns + 1);
        // the solution is unique up to scale; normalize the last entry to 1
        std::optional<std::vector<BigRational>> coords;
        for (const auto& s : sol)
            if (!s[unknowns].is_zero()) {
                std::vector<BigRational> c(unknowns);
                for (std::size_t k = 0; k < unknowns; ++k)
                    c[k] = s[k] / s[unknowns];
                coords = std::move(c);
                break;
            }
        if (!coords)
            throw Error(ErrorKind::FitFailed, "coboundary diagonal is not a polynomial of degree <= " + std::to_string(degree_bound));
        images.push_back(std::move(*coords));
    }
    out.coboundary_space_dim = images.empty() ? 0 : rank(images);

    // coboundaries must lie inside the cocycle space
    if (!images.empty()) {
        Matrix<BigRational> span;
        for (const auto& c : cocycles)
            span.push_back(c);
        const std::size_t base = rank(span);
        for (const auto& c : images)
            span.push_back(c);
        if (rank(span) != base)
            throw Error(ErrorKind::NotACocycle, "a coboundary failed the cocycle equations");
    }
    out.quotient_dim = out.cocycle_space_dim - out.coboundary_space_dim;
    return out;
}

/// Text records, one per line:
///   canonical <scalar>
///   f <lattice> <scalar>
///   theta <lattice> <lattice> <scalar>
/// Lattice points are written [a1,...,an]; '#' starts a comment.
inline TwoCochain read_two_cochain(std::istream& in, int rank)
{
    TwoCochain theta;
    std::string line;
    int lineno = 0;
    auto point = [&](std::istringstream& ls) {
        std::string tok;
        ls >> tok;
        if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected [a1,...,an]");
        std::vector<int> c;
        std::stringstream inner(tok.substr(1, tok.size() - 2));
        std::string part;
        while (std::getline(inner, part, ','))
            c.push_back(std::stoi(part));
        LatticePoint p{std::span<const int>(c)};
        if (p.rank() != rank)
            throw Error(ErrorKind::RankMismatch, "line " + std::to_string(lineno) + ": " + p.to_string());
        return p;
    };
    auto rest = [&](std::istringstream& ls) {
        std::string r;
        std::getline(ls, r);
        return parse_scalar(r);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind))
            continue;
        if (kind == "canonical") {
            theta = theta + TwoCochain::canonical(rest(ls));
        } else if (kind == "f") {
            const LatticePoint p = point(ls);
            theta = theta + TwoCochain::coboundary_of(OneCochain(p, rest(ls)));
        } else if (kind == "theta") {
            const LatticePoint p = point(ls), q = point(ls);
            theta.add_extra(p, q, rest(ls));
        } else {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
        }
    }
    return theta;
}

inline void write_two_cochain(std::ostream& out, const TwoCochain& theta)
{
    if (!theta.canonical_multiple().is_zero())
        out << "canonical " << theta.canonical_multiple().to_string() << '\n';
    for (const auto& [p, v] : theta.coboundary_part())
        out << "f " << p.to_string() << ' ' << v.to_string() << '\n';
    for (const auto& [k, v] : theta.extra())
        out << "theta " << k.first.to_string() << ' ' << k.second.to_string() << ' ' << v.to_string() << '\n';
}

} // namespace solvir

#endif
