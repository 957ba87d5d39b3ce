#ifndef SOLVIR_DENSITY_HPP
#define SOLVIR_DENSITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"
#include "text.hpp"

namespace solvir {

/// Parameters (a, b) of the tensor-density module T_mu(a, b). When
/// `a_lattice_tag` holds gamma, a is declared to be the lattice value mu.gamma.
struct DensityParams {
    Scalar a;
    Scalar b;
    std::optional<LatticePoint> a_lattice_tag;

    DensityParams() = default;
    DensityParams(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {}

    /// a and b as the indeterminates "a" and "b".
    static DensityParams formal() { return {Scalar::var(kVarA), Scalar::var(kVarB)}; }

    /// a = mu.gamma, tagged as a lattice value.
    static DensityParams lattice(const LatticePoint& gamma, Scalar b_)
    {
        DensityParams p(Scalar::mu_dot(gamma), std::move(b_));
        p.a_lattice_tag = gamma;
        return p;
    }
};

/// Finite combination of the basis vectors v_{mu.beta}, keyed by beta.
using DensityVector = LinComb<LatticePoint>;

/// e_{mu.alpha} . v_{mu.beta} = (mu.beta + a + (mu.alpha) b) v_{mu.(alpha+beta)}; c acts by 0.
inline DensityVector density_act(const AlgebraElement& x, const DensityVector& v, const DensityParams& p)
{
    DensityVector out;
    for (const auto& [s, cx] : x) {
        if (s.is_central())
            continue;
        const LatticePoint& alpha = s.index();
        const Scalar ab = Scalar::mu_dot(alpha) * p.b + p.a;
        for (const auto& [beta, cv] : v) {
            const Scalar coef = Scalar::mu_dot(beta) + ab;
            if (!coef.is_zero())
                out.add_term(alpha + beta, cx * cv * coef);
        }
    }
    return out;
}

/// [x, y].v - x.(y.v) + y.(x.v); zero for a module.
inline DensityVector density_axiom_residual(const Algebra& g, const AlgebraElement& x, const AlgebraElement& y,
                                            const DensityVector& v, const DensityParams& p)
{
    DensityVector r = density_act(g.vir_bracket(x, y), v, p);
    r -= density_act(x, density_act(y, v, p), p);
    r += density_act(y, density_act(x, v, p), p);
    return r;
}

enum class DensityCase { Irreducible, ReducibleTrivialSub, ReducibleCodimOne };

inline const char* density_case_name(DensityCase c)
{
    switch (c) {
    case DensityCase::Irreducible: return "Irreducible";
    case DensityCase::ReducibleTrivialSub: return "ReducibleTrivialSub";
    case DensityCase::ReducibleCodimOne: return "ReducibleCodimOne";
    }
    return "?";
}

struct DensityClassification {
    DensityCase kind = DensityCase::Irreducible;
    std::string witness;
    std::optional<LatticePoint> gamma; // a = mu.gamma when a lies in Gamma_mu
};

/// Decides a in Gamma_mu = {mu.gamma}. A lattice tag decides directly; a
/// rational constant lies in Gamma_mu only when it is 0; an integer linear
/// form in mu1..mun is mu.gamma for its coefficient vector. Anything else
/// (a formal parameter, a non-integral form) is not a lattice value.
inline std::optional<LatticePoint> gamma_mu_member(const DensityParams& p, int rank)
{
    if (p.a_lattice_tag) {
        if (p.a_lattice_tag->rank() != rank)
            throw Error(ErrorKind::RankMismatch, "lattice tag " + p.a_lattice_tag->to_string() + " in rank " + std::to_string(rank));
        if (Scalar::mu_dot(*p.a_lattice_tag) != p.a)
            throw Error(ErrorKind::Unsupported, "a = " + p.a.to_string() + " does not match its lattice tag");
        return p.a_lattice_tag;
    }
    if (p.a.is_zero())
        return LatticePoint::zero(rank);
    if (!p.a.is_polynomial() || !p.a.depends_only_on_mu())
        return std::nullopt;
    LatticePoint gamma(rank);
    for (const auto& t : p.a.numerator().terms()) {
        if (t.mono.degree() != 1 || !t.coef.is_integer() || !t.coef.numerator().fits_sint_p())
            return std::nullopt;
        bool found = false;
        for (int i = 0; i < rank; ++i)
            if (t.mono.exponent(mu_var(i)) == 1) {
                gamma[i] = static_cast<int>(t.coef.numerator().get_si());
                found = true;
            }
        if (!found)
            return std::nullopt;
    }
    return gamma;
}

/// Irreducibility of T_mu(a, b): reducible exactly when a lies in Gamma_mu
/// and b is 0 or 1. The exceptional cases are read after the isomorphism
/// v_{mu.beta} -> v_{mu.beta + a} to T_mu(0, b).
inline DensityClassification classify_density(const DensityParams& p, int rank)
{
    DensityClassification out;
    const auto gamma = gamma_mu_member(p, rank);
    const bool b0 = p.b.is_zero(), b1 = p.b.is_one();
    if (!gamma) {
        out.witness = "a = " + p.a.to_string() + " is not in Gamma_mu";
        return out;
    }
    out.gamma = gamma;
    const std::string shift = gamma->is_zero() ? "a = 0" : "a = mu.gamma with gamma = " + gamma->to_string() + ", shifted to a = 0";
    if (b0) {
        out.kind = DensityCase::ReducibleTrivialSub;
        out.witness = shift + "; b = 0; trivial submodule spanned by v" + (-*gamma).to_string();
    } else if (b1) {
        out.kind = DensityCase::ReducibleCodimOne;
        out.witness = shift + "; b = 1; submodule span{v[s] : s != " + (-*gamma).to_string() + "} of codimension 1";
    } else {
        out.witness = shift + "; b = " + p.b.to_string() + " is neither 0 nor 1";
    }
    return out;
}

struct SubmoduleReport {
    DensityCase kind = DensityCase::Irreducible;
    int box = 0;
    std::size_t invariance_checks = 0;
    std::size_t invariance_failures = 0;
    std::size_t connectivity_checks = 0;
    std::size_t connectivity_failures = 0;
    std::vector<std::string> failures;

    bool ok() const { return invariance_failures == 0 && connectivity_failures == 0; }
};

/// Checks the exceptional submodule structure on the box, in the shifted
/// module T_mu(0, b):
///   (0,0): e_alpha.v_0 = 0, so C v_0 is a trivial submodule;
///   (0,1): the v_0-coefficient of e_alpha.v_{-alpha} vanishes, so
///          span{v_s : s != 0} is invariant.
/// In both cases every v_kappa, kappa != 0, is sent by some e_alpha to a
/// nonzero multiple of any other v_kappa', kappa' != 0, in the box.
inline SubmoduleReport submodule_invariance_check(const DensityParams& p, int rank, int box)
{
    const DensityClassification cls = classify_density(p, rank);
    if (cls.kind == DensityCase::Irreducible)
        throw Error(ErrorKind::WrongCase, "T_mu(" + p.a.to_string() + ", " + p.b.to_string() + ") is not an exceptional case");
    const DensityParams shifted(Scalar(), p.b);
    const LatticePoint zero = LatticePoint::zero(rank);
    const auto pts = box_points(rank, box);

    SubmoduleReport r;
    r.kind = cls.kind;
    r.box = box;
    auto fail = [&](std::size_t& counter, std::string msg) {
        ++counter;
        if (r.failures.size() < 20)
            r.failures.push_back(std::move(msg));
    };
    for (const auto& alpha : pts) {
        const AlgebraElement e(BasisSymbol::e(alpha));
        ++r.invariance_checks;
        if (cls.kind == DensityCase::ReducibleTrivialSub) {
            const DensityVector img = density_act(e, DensityVector(zero), shifted);
            if (!img.is_zero())
                fail(r.invariance_failures, "e" + alpha.to_string() + ".v_0 != 0");
        } else {
            const DensityVector img = density_act(e, DensityVector(-alpha), shifted);
            if (alpha.is_zero() ? false : img.contains(zero))
                fail(r.invariance_failures, "e" + alpha.to_string() + ".v" + (-alpha).to_string() + " has a v_0 component");
        }
    }
    for (const auto& k : pts) {
        if (k.is_zero())
            continue;
        for (const auto& k2 : pts) {
            if (k2.is_zero() || k2 == k)
                continue;
            ++r.connectivity_checks;
            const DensityVector img = density_act(AlgebraElement(BasisSymbol::e(k2 - k)), DensityVector(k), shifted);
            if (!img.contains(k2))
                fail(r.connectivity_failures, "e" + (k2 - k).to_string() + ".v" + k.to_string() + " misses v" + k2.to_string());
        }
    }
    return r;
}

/// Contragredient action on the dual basis w_gamma,
/// e_alpha.w_gamma = -(mu.(gamma - alpha) + a + (mu.alpha) b) w_{gamma-alpha},
/// compared with T_mu(-a, 1-b) under w_gamma -> v_{-gamma}. Returns the
/// difference of the two coefficients.
inline Scalar duality_check(const DensityParams& p, const LatticePoint& alpha, const LatticePoint& gamma)
{
    const Scalar x = Scalar::mu_dot(alpha);
    const Scalar dual = -(Scalar::mu_dot(gamma - alpha) + p.a + x * p.b);
    const Scalar target = Scalar::mu_dot(-gamma) - p.a + x * (Scalar(1) - p.b);
    return dual - target;
}

inline std::string format_density(const DensityVector& v)
{
    return v.to_string([](const LatticePoint& b) { return "v" + b.to_string(); });
}

inline DensityVector parse_density(std::string_view text, int rank)
{
    return parse_lincomb<LatticePoint>(text, [rank](std::string_view name, const std::optional<LatticePoint>& idx)
                                                 -> std::optional<LatticePoint> {
        if (name != "v" || !idx)
            return std::nullopt;
        if (idx->rank() != rank)
            throw Error(ErrorKind::RankMismatch, "v" + idx->to_string() + " in rank " + std::to_string(rank));
        return *idx;
    });
}

} // namespace solvir

#endif
