#ifndef SOLVIR_TEXT_HPP
#define SOLVIR_TEXT_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"

namespace solvir {

namespace detail {

/// Recursive-descent reader for scalar expressions and linear combinations
/// of symbols such as e[1,0], v[2,-1] or c.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' unary) | ('/' divisor))*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | '(' expr ')' | 'mu.(' ints ')' | name ('[' ints ']')?
///
/// Division is only defined by nonzero constants and by integer linear forms
/// in mu; a parenthesized product after '/' is divided factor by factor.
template <class Key>
class Reader {
public:
    using Symbol = std::function<std::optional<Key>(std::string_view name, const std::optional<LatticePoint>& index)>;

    Reader(std::string_view text, Symbol symbol) : s_(text), symbol_(std::move(symbol)) {}

    struct Value {
        Scalar scalar;
        LinComb<Key> vec;
    };

    Value read_all()
    {
        Value v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char ch)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek(char ch)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == ch;
    }

    bool eat_text(std::string_view t)
    {
        skip();
        if (s_.substr(pos_, t.size()) == t) {
            pos_ += t.size();
            return true;
        }
        return false;
    }

    long integer()
    {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
            skip();
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        const long v = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    LatticePoint lattice(char close)
    {
        std::vector<int> c;
        if (!peek(close)) {
            do {
                c.push_back(static_cast<int>(integer()));
            } while (eat(','));
        }
        if (!eat(close))
            fail(std::string("expected '") + close + "'");
        return LatticePoint(std::span<const int>(c));
    }

    Value expr()
    {
        Value v = term();
        while (true) {
            if (eat('+')) {
                Value w = term();
                v.scalar += w.scalar;
                v.vec += w.vec;
            } else if (eat('-')) {
                Value w = term();
                v.scalar -= w.scalar;
                v.vec -= w.vec;
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = unary();
        while (true) {
            if (eat('*')) {
                v = multiply(v, unary());
            } else if (eat('/')) {
                for (const auto& [base, power] : divisor())
                    for (int k = 0; k < power; ++k) {
                        v.scalar = divide(v.scalar, base);
                        v.vec = v.vec.template transform_terms<LinComb<Key>>(
                            [&](const Key& key, const Scalar& c) { return LinComb<Key>(key, divide(c, base)); });
                    }
            } else {
                return v;
            }
        }
    }

    Value multiply(const Value& x, const Value& y)
    {
        if (!x.vec.is_zero() && !y.vec.is_zero())
            fail("product of two symbols");
        if (x.vec.is_zero())
            return {x.scalar * y.scalar, y.vec * x.scalar};
        return {x.scalar * y.scalar, x.vec * y.scalar};
    }

    Scalar divide(const Scalar& x, const Scalar& d)
    {
        if (d.is_zero())
            throw Error(ErrorKind::DenominatorVanishes, "division by zero in '" + std::string(s_) + "'");
        if (d.is_constant())
            return x.divide_by_constant(d.constant_value());
        if (d.is_polynomial() && d.depends_only_on_mu() && d.numerator().degree() == 1
            && d.numerator().terms().back().mono.degree() == 1) {
            LatticePoint alpha(kMaxRank);
            for (const auto& t : d.numerator().terms()) {
                if (!t.coef.is_integer() || !t.coef.numerator().fits_sint_p())
                    fail("unsupported divisor " + d.to_string());
                for (int i = 0; i < kMaxRank; ++i)
                    if (t.mono.exponent(mu_var(i)))
                        alpha[i] = static_cast<int>(t.coef.numerator().get_si());
            }
            return x.divide_by_form(alpha);
        }
        fail("unsupported divisor " + d.to_string());
    }

    // primary with an optional exponent kept unexpanded, so "mu.(1,0)^2"
    // divides twice by the form
    std::pair<Scalar, int> factor()
    {
        Value f = primary();
        if (!f.vec.is_zero())
            fail("division by a symbol");
        int k = 1;
        if (eat('^')) {
            const long e = integer();
            if (e < 0)
                fail("negative exponent");
            k = static_cast<int>(e);
        }
        return {f.scalar, k};
    }

    std::vector<std::pair<Scalar, int>> divisor()
    {
        const std::size_t save = pos_;
        if (eat('(')) {
            std::vector<std::pair<Scalar, int>> factors;
            bool ok = true;
            try {
                do {
                    factors.push_back(factor());
                } while (eat('*'));
                ok = eat(')');
            } catch (const Error&) {
                ok = false;
            }
            if (ok) {
                if (eat('^')) {
                    const long k = integer();
                    if (k < 0)
                        fail("negative exponent");
                    for (auto& f : factors)
                        f.second *= static_cast<int>(k);
                }
                return factors;
            }
            pos_ = save;
        }
        return {factor()};
    }

    Value unary()
    {
        if (eat('-')) {
            Value v = unary();
            return {-v.scalar, -v.vec};
        }
        if (eat('+'))
            return unary();
        return power();
    }

    Value power()
    {
        Value v = primary();
        if (eat('^')) {
            const long k = integer();
            if (k < 0)
                fail("negative exponent");
            if (!v.vec.is_zero())
                fail("power of a symbol");
            v.scalar = v.scalar.pow(static_cast<int>(k));
        }
        return v;
    }

    Value primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char ch = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return {Scalar(BigRational::parse(s_.substr(start, pos_ - start))), {}};
        }
        if (eat('(')) {
            Value v = expr();
            if (!eat(')'))
                fail("expected ')'");
            return v;
        }
        if (eat_text("mu.(") || eat_text("mu·(")) {
            const LatticePoint alpha = lattice(')');
            return {Scalar::mu_dot(alpha), {}};
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            std::optional<LatticePoint> index;
            if (eat('['))
                index = lattice(']');
            if (symbol_) {
                if (auto key = symbol_(name, index))
                    return {Scalar(), LinComb<Key>(*key)};
            }
            if (index)
                fail("unknown symbol '" + std::string(name) + "'");
            if (auto var = var_from_name(name))
                return {Scalar::var(*var), {}};
            fail("unknown name '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Symbol symbol_;
};

struct NoKey {
    friend auto operator<=>(const NoKey&, const NoKey&) = default;
};

} // namespace detail

/// Parses a scalar written in the canonical text form (or any expression
/// the reader accepts).
inline Scalar parse_scalar(std::string_view text)
{
    detail::Reader<detail::NoKey> reader(text, nullptr);
    return reader.read_all().scalar;
}

/// Parses a linear combination of symbols; `symbol` maps a name and an
/// optional bracketed index to a key, or returns nullopt.
template <class Key>
LinComb<Key> parse_lincomb(std::string_view text, typename detail::Reader<Key>::Symbol symbol)
{
    detail::Reader<Key> reader(text, std::move(symbol));
    auto v = reader.read_all();
    if (!v.scalar.is_zero())
        throw Error(ErrorKind::Parse, "bare scalar term in '" + std::string(text) + "'");
    return v.vec;
}

} // namespace solvir

#endif
