#ifndef SOLVIR_SCALAR_HPP
#define SOLVIR_SCALAR_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace solvir {

/// The nonzero linear form mu . alpha, stored by its primitive direction
/// (gcd of coordinates 1, first nonzero coordinate positive). The direction
/// is padded to kMaxRank so the form does not depend on the rank it was
/// built in; text output drops trailing zero coordinates.
class LinearForm {
public:
    /// Canonicalizes alpha; `factor` receives the signed integer k with
    /// alpha = k * direction.
    LinearForm(const LatticePoint& alpha, int* factor = nullptr) : dir_(kMaxRank)
    {
        for (int i = 0; i < alpha.rank(); ++i)
            dir_[i] = alpha[i];
        const int k = make_primitive(dir_);
        if (k == 0)
            throw Error(ErrorKind::ZeroForm, "linear form of the zero lattice point");
        if (factor)
            *factor = k;
    }

    const LatticePoint& direction() const noexcept { return dir_; }
    Polynomial polynomial() const { return Polynomial::mu_dot(dir_); }

    std::string to_string() const
    {
        int len = kMaxRank;
        while (len > 1 && dir_[len - 1] == 0)
            --len;
        std::string s = "mu.(";
        for (int i = 0; i < len; ++i) {
            if (i)
                s += ',';
            s += std::to_string(dir_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

private:
    LatticePoint dir_;
};

/// Element of Q[mu, a, b, lambda, cc] localized at the forms mu . alpha.
///
/// Canonical representation: value = numerator / (content * prod forms^k),
/// where the numerator has integer coefficients, content is a positive
/// integer coprime to the numerator's coefficients, and no denominator form
/// divides the numerator. Two scalars are equal iff their representations
/// are equal.
class Scalar {
public:
    using FormPower = std::pair<LinearForm, int>;

    Scalar() = default;
    Scalar(int c) : Scalar(BigRational(c)) {}               // NOLINT(google-explicit-constructor)
    Scalar(const BigRational& c) { *this = normalize(Polynomial(c), {}, 1); } // NOLINT(google-explicit-constructor)
    Scalar(const Polynomial& p) { *this = normalize(p, {}, 1); }             // NOLINT(google-explicit-constructor)

    static Scalar var(Var v) { return Scalar(Polynomial::var(v)); }
    static Scalar mu_dot(const LatticePoint& alpha) { return from_integral(Polynomial::mu_dot(alpha)); }

    const Polynomial& numerator() const noexcept { return num_; }
    const std::vector<FormPower>& denominator_forms() const noexcept { return forms_; }
    const BigRational& denominator_content() const noexcept { return content_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return is_polynomial() && num_.size() == 1 && num_.leading().mono.is_one() && num_.leading().coef.is_one(); }
    bool is_polynomial() const noexcept { return forms_.empty() && content_.is_one(); }
    bool is_constant() const noexcept { return forms_.empty() && num_.is_constant(); }
    BigRational constant_value() const
    {
        if (!is_constant())
            throw Error(ErrorKind::Unsupported, "scalar is not constant: " + to_string());
        return num_.constant_value() / content_;
    }

    /// True when no indeterminate other than mu1..mun appears.
    bool depends_only_on_mu() const { return num_.uses_only_mu(); }
    bool uses_var(Var v) const { return num_.uses_var(v); }

    friend bool operator==(const Scalar& x, const Scalar& y)
    {
        return x.num_ == y.num_ && x.content_ == y.content_ && x.forms_ == y.forms_;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y)
    {
        if (x.is_zero())
            return y;
        if (y.is_zero())
            return x;
        if (x.is_polynomial() && y.is_polynomial())
            return from_integral(x.num_ + y.num_);
        std::vector<FormPower> common = x.forms_;
        for (const auto& [f, k] : y.forms_) {
            auto it = std::find_if(common.begin(), common.end(), [&](const FormPower& p) { return p.first == f; });
            if (it == common.end())
                common.emplace_back(f, k);
            else
                it->second = std::max(it->second, k);
        }
        std::sort(common.begin(), common.end());
        const Polynomial nx = x.num_ * cofactor(common, x.forms_) * x.content_.inverse();
        const Polynomial ny = y.num_ * cofactor(common, y.forms_) * y.content_.inverse();
        return normalize(nx + ny, std::move(common), 1);
    }

    friend Scalar operator-(const Scalar& x)
    {
        Scalar r = x;
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

    friend Scalar operator*(const Scalar& x, const Scalar& y)
    {
        if (x.is_zero() || y.is_zero())
            return {};
        if (x.is_one())
            return y;
        if (y.is_one())
            return x;
        if (x.is_polynomial() && y.is_polynomial())
            return from_integral(x.num_ * y.num_);
        std::vector<FormPower> forms = x.forms_;
        for (const auto& [f, k] : y.forms_) {
            auto it = std::find_if(forms.begin(), forms.end(), [&](const FormPower& p) { return p.first == f; });
            if (it == forms.end())
                forms.emplace_back(f, k);
            else
                it->second += k;
        }
        std::sort(forms.begin(), forms.end());
        return normalize(x.num_ * y.num_, std::move(forms), x.content_ * y.content_);
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    Scalar pow(int k) const
    {
        if (k < 0)
            throw Error(ErrorKind::Unsupported, "negative power of a scalar");
        Scalar r(1), b = *this;
        while (k) {
            if (k & 1)
                r *= b;
            k >>= 1;
            if (k)
                b *= b;
        }
        return r;
    }

    /// Divides by the form mu . alpha: exact polynomial division when the
    /// numerator is divisible, otherwise the form joins the denominator.
    Scalar divide_by_form(const LatticePoint& alpha) const
    {
        int k = 0;
        LinearForm f(alpha, &k); // throws ZeroForm
        if (is_zero())
            return {};
        if (auto q = Polynomial::divide_exact(num_, f.polynomial())) {
            Scalar r;
            r.forms_ = forms_;
            return normalize(*q, std::move(r.forms_), content_ * BigRational(k));
        }
        std::vector<FormPower> forms = forms_;
        auto it = std::find_if(forms.begin(), forms.end(), [&](const FormPower& p) { return p.first == f; });
        if (it == forms.end())
            forms.emplace_back(f, 1);
        else
            ++it->second;
        std::sort(forms.begin(), forms.end());
        return normalize(num_, std::move(forms), content_ * BigRational(k));
    }

    /// Multiplicative inverse of a nonzero constant.
    Scalar divide_by_constant(const BigRational& c) const
    {
        if (c.is_zero())
            throw Error(ErrorKind::DenominatorVanishes, "division by zero");
        return normalize(num_, forms_, content_ * c);
    }

    BigRational evaluate(const std::map<Var, BigRational>& at) const
    {
        BigRational den = content_;
        for (const auto& [f, k] : forms_) {
            const BigRational v = f.polynomial().evaluate(at);
            if (v.is_zero())
                throw Error(ErrorKind::DenominatorVanishes, f.to_string() + " vanishes at the assignment");
            for (int i = 0; i < k; ++i)
                den *= v;
        }
        return num_.evaluate(at) / den;
    }

    /// Partial substitution. Denominator forms must either avoid the
    /// substituted indeterminates or collapse to nonzero constants.
    Scalar specialize(const std::map<Var, BigRational>& at) const
    {
        std::vector<FormPower> forms;
        BigRational content = content_;
        for (const auto& [f, k] : forms_) {
            bool touched = false;
            for (const auto& [v, val] : at)
                touched = touched || f.polynomial().uses_var(v);
            if (!touched) {
                forms.emplace_back(f, k);
                continue;
            }
            const Polynomial p = f.polynomial().substitute(at);
            if (!p.is_constant())
                throw Error(ErrorKind::Unsupported, "partial specialization of denominator " + f.to_string());
            if (p.is_zero())
                throw Error(ErrorKind::DenominatorVanishes, f.to_string() + " vanishes under specialization");
            for (int i = 0; i < k; ++i)
                content *= p.constant_value();
        }
        return normalize(num_.substitute(at), std::move(forms), content);
    }

    /// Canonical text, e.g. "(mu1^3-mu1)/12" or "-1/(12*mu.(1))".
    std::string to_string() const
    {
        std::string s = num_.to_string();
        if (is_polynomial())
            return s;
        if (num_.size() > 1)
            s = "(" + s + ")";
        std::vector<std::string> parts;
        if (!content_.is_one() || forms_.empty())
            parts.push_back(content_.to_string());
        for (const auto& [f, k] : forms_)
            parts.push_back(f.to_string() + (k > 1 ? "^" + std::to_string(k) : ""));
        if (parts.size() == 1)
            return s + "/" + parts[0];
        std::string d;
        for (std::size_t i = 0; i < parts.size(); ++i)
            d += (i ? "*" : "") + parts[i];
        return s + "/(" + d + ")";
    }

private:
    // numerator already integral and canonical, no denominator
    static Scalar from_integral(Polynomial p)
    {
        Scalar r;
        r.num_ = std::move(p);
        return r;
    }

    static Polynomial cofactor(const std::vector<FormPower>& all, const std::vector<FormPower>& part)
    {
        Polynomial p(1);
        for (const auto& [f, k] : all) {
            auto it = std::find_if(part.begin(), part.end(), [&](const FormPower& q) { return q.first == f; });
            const int have = it == part.end() ? 0 : it->second;
            if (k > have)
                p *= f.polynomial().pow(k - have);
        }
        return p;
    }

    static Scalar normalize(Polynomial num, std::vector<FormPower> forms, BigRational content)
    {
        Scalar r;
        if (num.is_zero())
            return r;
        for (auto& [f, k] : forms) {
            const Polynomial fp = f.polynomial();
            while (k > 0) {
                auto q = Polynomial::divide_exact(num, fp);
                if (!q)
                    break;
                num = std::move(*q);
                --k;
            }
        }
        std::erase_if(forms, [](const FormPower& p) { return p.second == 0; });

        bool integral = content.is_integer();
        for (const auto& t : num.terms())
            integral = integral && t.coef.is_integer();
        if (integral && content.is_one()) {
            r.num_ = std::move(num);
            r.forms_ = std::move(forms);
            return r;
        }

        // num / content  ->  (num * q) / p, then clear coefficient denominators
        if (content.sign() < 0) {
            num = -num;
            content = -content;
        }
        mpz_class scale = content.denominator();
        mpz_class den = content.numerator();
        for (const auto& t : num.terms())
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coef.denominator().get_mpz_t());
        den *= scale / content.denominator();
        num = num * BigRational(mpq_class(scale));
        mpz_class g = den;
        for (const auto& t : num.terms())
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.numerator().get_mpz_t());
        if (g != 1) {
            num = num * BigRational(mpq_class(mpz_class(1), g));
            den /= g;
        }
        r.num_ = std::move(num);
        r.forms_ = std::move(forms);
        r.content_ = BigRational(den);
        return r;
    }

    Polynomial num_;
    std::vector<FormPower> forms_;
    BigRational content_ = 1;
};

inline Scalar divide_by_form(const Scalar& x, const LatticePoint& alpha) { return x.divide_by_form(alpha); }

} // namespace solvir

#endif
