#ifndef SOLVIR_POLYNOMIAL_HPP
#define SOLVIR_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace solvir {

/// Indeterminates of the coefficient ring: mu1..mu8, then a, b, lambda and
/// the central charge. The id order is also the variable order used by the
/// monomial ordering (mu1 is the largest variable).
using Var = int;

inline constexpr Var kVarA = kMaxRank;
inline constexpr Var kVarB = kMaxRank + 1;
inline constexpr Var kVarLambda = kMaxRank + 2;
inline constexpr Var kVarCharge = kMaxRank + 3;
inline constexpr int kNumVars = kMaxRank + 4;

inline constexpr Var mu_var(int axis) { return axis; } // axis is 0-based
inline constexpr bool is_mu_var(Var v) { return v >= 0 && v < kMaxRank; }

inline std::string var_name(Var v)
{
    if (is_mu_var(v))
        return "mu" + std::to_string(v + 1);
    switch (v) {
    case kVarA: return "a";
    case kVarB: return "b";
    case kVarLambda: return "lambda";
    case kVarCharge: return "cc";
    default: throw Error(ErrorKind::Parse, "unknown indeterminate id " + std::to_string(v));
    }
}

inline std::optional<Var> var_from_name(std::string_view name)
{
    if (name == "a")
        return kVarA;
    if (name == "b")
        return kVarB;
    if (name == "lambda")
        return kVarLambda;
    if (name == "cc")
        return kVarCharge;
    if (name.size() >= 3 && name.substr(0, 2) == "mu") {
        int idx = 0;
        for (char ch : name.substr(2)) {
            if (ch < '0' || ch > '9')
                return std::nullopt;
            idx = idx * 10 + (ch - '0');
            if (idx > kMaxRank)
                return std::nullopt;
        }
        if (idx >= 1 && name[2] != '0')
            return mu_var(idx - 1);
    }
    return std::nullopt;
}

/// Power product of indeterminates; zero exponents are simply absent from
/// the printed form.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(Var v, int power = 1)
    {
        Monomial m;
        m.set(v, power);
        return m;
    }

    int exponent(Var v) const noexcept { return e_[static_cast<std::size_t>(v)]; }
    int degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    void set(Var v, int power)
    {
        if (power < 0 || power > 255)
            throw Error(ErrorKind::Unsupported, "exponent out of range");
        deg_ += power - e_[static_cast<std::size_t>(v)];
        e_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y)
    {
        Monomial r;
        for (std::size_t i = 0; i < x.e_.size(); ++i) {
            const int s = x.e_[i] + y.e_[i];
            if (s > 255)
                throw Error(ErrorKind::Unsupported, "exponent overflow");
            r.e_[i] = static_cast<std::uint8_t>(s);
        }
        r.deg_ = x.deg_ + y.deg_;
        return r;
    }

    bool divides(const Monomial& y) const noexcept
    {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > y.e_[i])
                return false;
        return true;
    }

    /// y / *this, assuming divides(y).
    Monomial quotient_of(const Monomial& y) const
    {
        Monomial r;
        for (std::size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = static_cast<std::uint8_t>(y.e_[i] - e_[i]);
        r.deg_ = y.deg_ - deg_;
        return r;
    }

    /// Graded lexicographic order.
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) noexcept
    {
        if (auto c = x.deg_ <=> y.deg_; c != 0)
            return c;
        for (std::size_t i = 0; i < x.e_.size(); ++i)
            if (auto c = x.e_[i] <=> y.e_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& x, const Monomial& y) noexcept { return x.e_ == y.e_; }

    std::string to_string() const
    {
        std::string s;
        for (Var v = 0; v < kNumVars; ++v) {
            const int p = exponent(v);
            if (p == 0)
                continue;
            if (!s.empty())
                s += '*';
            s += var_name(v);
            if (p > 1)
                s += '^' + std::to_string(p);
        }
        return s;
    }

private:
    std::array<std::uint8_t, kNumVars> e_{};
    std::int32_t deg_ = 0;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted by decreasing graded-lex monomial, so the leading term is first and
/// equality is term-vector equality.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        BigRational coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;
    Polynomial(const BigRational& c) // NOLINT(google-explicit-constructor)
    {
        if (!c.is_zero())
            terms_.push_back({Monomial(), c});
    }
    Polynomial(int c) : Polynomial(BigRational(c)) {} // NOLINT(google-explicit-constructor)

    static Polynomial monomial(const Monomial& m, const BigRational& c = 1)
    {
        Polynomial p;
        if (!c.is_zero())
            p.terms_.push_back({m, c});
        return p;
    }

    static Polynomial var(Var v) { return monomial(Monomial::var(v)); }

    /// The linear form mu . alpha = sum_i alpha_i mu_i.
    static Polynomial mu_dot(const LatticePoint& alpha)
    {
        Polynomial p;
        p.terms_.reserve(static_cast<std::size_t>(alpha.rank()));
        for (int i = 0; i < alpha.rank(); ++i)
            if (alpha[i] != 0)
                p.terms_.push_back({Monomial::var(mu_var(i)), BigRational(alpha[i])});
        return p; // mu1 > mu2 > ... so already sorted
    }

    /// Builds from unsorted terms, combining like monomials.
    static Polynomial from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
        Polynomial p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coef += t.coef;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().coef.is_zero())
                p.terms_.pop_back();
        }
        return p;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    BigRational constant_value() const { return terms_.empty() ? BigRational() : terms_.back().mono.is_one() ? terms_.back().coef : BigRational(); }
    const Term& leading() const { return terms_.front(); }
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    bool uses_var(Var v) const noexcept
    {
        return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exponent(v) > 0; });
    }

    bool uses_only_mu() const noexcept
    {
        for (const auto& t : terms_)
            for (Var v = kMaxRank; v < kNumVars; ++v)
                if (t.mono.exponent(v) > 0)
                    return false;
        return true;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& x, const Polynomial& y) { return merge(x, y, false); }
    friend Polynomial operator-(const Polynomial& x, const Polynomial& y) { return merge(x, y, true); }

    friend Polynomial operator-(const Polynomial& x)
    {
        Polynomial r = x;
        for (auto& t : r.terms_)
            t.coef = -t.coef;
        return r;
    }

    friend Polynomial operator*(const Polynomial& x, const BigRational& c)
    {
        if (c.is_zero())
            return {};
        Polynomial r = x;
        for (auto& t : r.terms_)
            t.coef *= c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& x, const Polynomial& y)
    {
        if (x.is_zero() || y.is_zero())
            return {};
        if (y.is_constant())
            return x * y.terms_[0].coef;
        if (x.is_constant())
            return y * x.terms_[0].coef;
        std::vector<Term> prod;
        prod.reserve(x.size() * y.size());
        for (const auto& s : x.terms_)
            for (const auto& t : y.terms_)
                prod.push_back({s.mono * t.mono, s.coef * t.coef});
        return from_terms(std::move(prod));
    }

    Polynomial& operator+=(const Polynomial& y) { return *this = *this + y; }
    Polynomial& operator-=(const Polynomial& y) { return *this = *this - y; }
    Polynomial& operator*=(const Polynomial& y) { return *this = *this * y; }

    Polynomial pow(int k) const
    {
        if (k < 0)
            throw Error(ErrorKind::Unsupported, "negative power of a polynomial");
        Polynomial r(1), b = *this;
        while (k) {
            if (k & 1)
                r *= b;
            k >>= 1;
            if (k)
                b *= b;
        }
        return r;
    }

    /// Exact quotient x / d, or nullopt when d does not divide x. A single
    /// divisor is its own Groebner basis, so the division algorithm leaves a
    /// zero remainder exactly when d | x; the first leading term that cannot
    /// be reduced therefore settles non-divisibility.
    static std::optional<Polynomial> divide_exact(const Polynomial& x, const Polynomial& d)
    {
        if (d.is_zero())
            throw Error(ErrorKind::DenominatorVanishes, "division by the zero polynomial");
        if (d.is_constant())
            return x * d.terms_[0].coef.inverse();
        const Term& lt = d.leading();
        const BigRational inv = lt.coef.inverse();
        std::map<Monomial, BigRational, std::greater<>> rem;
        for (const auto& t : x.terms_)
            rem.emplace(t.mono, t.coef);
        std::vector<Term> quot;
        while (!rem.empty()) {
            const auto top = rem.begin();
            if (!lt.mono.divides(top->first))
                return std::nullopt;
            Term q{lt.mono.quotient_of(top->first), top->second * inv};
            rem.erase(top);
            for (std::size_t i = 1; i < d.terms_.size(); ++i) {
                const auto& t = d.terms_[i];
                auto [it, fresh] = rem.try_emplace(t.mono * q.mono);
                it->second -= t.coef * q.coef;
                if (it->second.is_zero())
                    rem.erase(it);
            }
            quot.push_back(std::move(q));
        }
        return from_terms(std::move(quot));
    }

    BigRational evaluate(const std::map<Var, BigRational>& at) const
    {
        BigRational s;
        for (const auto& t : terms_) {
            BigRational v = t.coef;
            for (Var x = 0; x < kNumVars; ++x) {
                const int p = t.mono.exponent(x);
                if (p == 0)
                    continue;
                auto it = at.find(x);
                if (it == at.end())
                    throw Error(ErrorKind::Unsupported, "no value assigned to " + var_name(x));
                for (int k = 0; k < p; ++k)
                    v *= it->second;
            }
            s += v;
        }
        return s;
    }

    /// Substitutes the listed indeterminates by rationals; the others stay.
    Polynomial substitute(const std::map<Var, BigRational>& at) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Term u = t;
            for (const auto& [x, val] : at) {
                const int p = u.mono.exponent(x);
                if (p == 0)
                    continue;
                u.mono.set(x, 0);
                for (int k = 0; k < p; ++k)
                    u.coef *= val;
            }
            if (!u.coef.is_zero())
                out.push_back(std::move(u));
        }
        return from_terms(std::move(out));
    }

    /// Coefficient of the given monomial (zero when absent).
    BigRational coefficient(const Monomial& m) const
    {
        for (const auto& t : terms_)
            if (t.mono == m)
                return t.coef;
        return {};
    }

    /// Expanded text, decreasing monomials, integers printed exactly,
    /// e.g. "mu1^3-mu1" or "2*mu1-mu2".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            const bool neg = t.coef.sign() < 0;
            const BigRational mag = t.coef.abs();
            if (neg)
                s += '-';
            else if (!first)
                s += '+';
            if (t.mono.is_one())
                s += mag.to_string();
            else if (mag.is_one())
                s += t.mono.to_string();
            else
                s += mag.to_string() + "*" + t.mono.to_string();
            first = false;
        }
        return s;
    }

private:
    static Polynomial merge(const Polynomial& x, const Polynomial& y, bool subtract)
    {
        Polynomial r;
        r.terms_.reserve(x.size() + y.size());
        auto i = x.terms_.begin(), j = y.terms_.begin();
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && i->mono > j->mono)) {
                r.terms_.push_back(*i++);
            } else if (i == x.terms_.end() || j->mono > i->mono) {
                r.terms_.push_back({j->mono, subtract ? -j->coef : j->coef});
                ++j;
            } else {
                BigRational c = subtract ? i->coef - j->coef : i->coef + j->coef;
                if (!c.is_zero())
                    r.terms_.push_back({i->mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

} // namespace solvir

#endif
