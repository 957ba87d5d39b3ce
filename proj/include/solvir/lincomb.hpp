#ifndef SOLVIR_LINCOMB_HPP
#define SOLVIR_LINCOMB_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace solvir {

/// Finite Scalar-linear combination of keys, stored as a vector sorted by key
/// with no zero coefficients. Algebra elements, module vectors and 1-cochains
/// are all instances.
template <class Key>
class LinComb {
public:
    using value_type = std::pair<Key, Scalar>;

    LinComb() = default;
    explicit LinComb(Key k, Scalar c = Scalar(1)) { add_term(std::move(k), std::move(c)); }

    const std::vector<value_type>& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const Key& k) const
    {
        auto it = find(k);
        return it != terms_.end() && it->first == k ? it->second : Scalar();
    }

    bool contains(const Key& k) const
    {
        auto it = find(k);
        return it != terms_.end() && it->first == k;
    }

    void add_term(Key k, Scalar c)
    {
        if (c.is_zero())
            return;
        auto it = find(k);
        if (it != terms_.end() && it->first == k) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        } else {
            terms_.insert(it, {std::move(k), std::move(c)});
        }
    }

    LinComb& operator+=(const LinComb& y)
    {
        if (terms_.empty()) {
            terms_ = y.terms_;
            return *this;
        }
        for (const auto& [k, c] : y.terms_)
            add_term(k, c);
        return *this;
    }

    LinComb& operator-=(const LinComb& y)
    {
        for (const auto& [k, c] : y.terms_)
            add_term(k, -c);
        return *this;
    }

    friend LinComb operator+(LinComb x, const LinComb& y) { return x += y; }
    friend LinComb operator-(LinComb x, const LinComb& y) { return x -= y; }
    friend LinComb operator-(const LinComb& x) { return x * Scalar(-1); }

    friend LinComb operator*(const Scalar& s, const LinComb& x) { return x * s; }
    friend LinComb operator*(const LinComb& x, const Scalar& s)
    {
        LinComb r;
        if (s.is_zero())
            return r;
        r.terms_.reserve(x.terms_.size());
        for (const auto& [k, c] : x.terms_) {
            Scalar p = c * s;
            if (!p.is_zero())
                r.terms_.emplace_back(k, std::move(p));
        }
        return r;
    }

    friend bool operator==(const LinComb& x, const LinComb& y) { return x.terms_ == y.terms_; }

    /// Applies `f` to every term and collects the image.
    template <class Out, class F>
    Out transform_terms(F&& f) const
    {
        Out r;
        for (const auto& [k, c] : terms_)
            r += f(k, c);
        return r;
    }

    LinComb specialize(const std::map<Var, BigRational>& at) const
    {
        LinComb r;
        for (const auto& [k, c] : terms_)
            r.add_term(k, c.specialize(at));
        return r;
    }

    /// Text "coef*key + coef*key ...". Coefficients with more than one term
    /// or a denominator are parenthesized; unit coefficients are omitted.
    std::string to_string(const std::function<std::string(const Key&)>& key_text) const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& [k, c] = terms_[i];
            std::string coef = c.to_string();
            const bool simple = c.is_polynomial() && c.numerator().size() == 1;
            bool neg = false;
            if (simple && coef.front() == '-') {
                neg = true;
                coef.erase(0, 1);
            }
            std::string term;
            if (coef == "1")
                term = key_text(k);
            else if (simple)
                term = coef + "*" + key_text(k);
            else
                term = "(" + coef + ")*" + key_text(k);
            if (i == 0)
                s += (neg ? "-" : "") + term;
            else
                s += (neg ? " - " : " + ") + term;
        }
        return s;
    }

private:
    auto find(const Key& k) const
    {
        return std::lower_bound(terms_.begin(), terms_.end(), k, [](const value_type& t, const Key& key) { return t.first < key; });
    }
    auto find(const Key& k)
    {
        return std::lower_bound(terms_.begin(), terms_.end(), k, [](const value_type& t, const Key& key) { return t.first < key; });
    }

    std::vector<value_type> terms_;
};

} // namespace solvir

#endif
