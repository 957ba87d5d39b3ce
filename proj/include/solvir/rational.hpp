#ifndef SOLVIR_RATIONAL_HPP
#define SOLVIR_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace solvir {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline;
/// anything larger is promoted to a shared, immutable GMP rational. Results
/// are demoted back whenever they fit again, so equality can compare the
/// representation directly.
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t n) : num_(n) {} // NOLINT(google-explicit-constructor)
    BigRational(int n) : num_(n) {}          // NOLINT(google-explicit-constructor)
    BigRational(std::int64_t n, std::int64_t d)
    {
        if (d == 0)
            throw Error(ErrorKind::DenominatorVanishes, "rational with zero denominator");
        if (n == INT64_MIN || d == INT64_MIN) {
            mpq_class q(mpz_from(n), mpz_from(d));
            q.canonicalize();
            *this = from_mpq(q);
            return;
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n, d);
        num_ = n / g;
        den_ = d / g;
    }
    explicit BigRational(const mpq_class& q) { *this = from_mpq(q); }
    explicit BigRational(const mpz_class& z) { *this = from_mpq(mpq_class(z)); }

    static BigRational parse(std::string_view text)
    {
        mpq_class q;
        if (text.empty() || q.set_str(std::string(text), 10) != 0)
            throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
        if (q.get_den() == 0)
            throw Error(ErrorKind::DenominatorVanishes, "rational with zero denominator");
        q.canonicalize();
        return BigRational(q);
    }

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    mpq_class to_mpq() const
    {
        if (big_)
            return *big_;
        return mpq_class(mpz_from(num_), mpz_from(den_));
    }
    mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
    mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }

    std::string to_string() const
    {
        if (big_)
            return big_->get_str();
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

    friend BigRational operator+(const BigRational& x, const BigRational& y)
    {
        if (!x.big_ && !y.big_) {
            if (x.den_ == 1 && y.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(x.num_, y.num_, &s) && s != INT64_MIN)
                    return BigRational(Raw{}, s, 1);
            } else {
                const std::int64_t g = std::gcd(x.den_, y.den_);
                const std::int64_t xd = x.den_ / g, yd = y.den_ / g;
                std::int64_t a, b, s, d;
                if (!__builtin_mul_overflow(x.num_, yd, &a) && !__builtin_mul_overflow(y.num_, xd, &b)
                    && !__builtin_add_overflow(a, b, &s) && !__builtin_mul_overflow(x.den_, yd, &d))
                    return BigRational(s, d);
            }
        }
        return from_mpq(x.to_mpq() + y.to_mpq());
    }

    friend BigRational operator-(const BigRational& x)
    {
        if (!x.big_ && x.num_ != INT64_MIN)
            return BigRational(Raw{}, -x.num_, x.den_);
        return from_mpq(-x.to_mpq());
    }

    friend BigRational operator-(const BigRational& x, const BigRational& y) { return x + (-y); }

    friend BigRational operator*(const BigRational& x, const BigRational& y)
    {
        if (!x.big_ && !y.big_) {
            if (x.den_ == 1 && y.den_ == 1) {
                std::int64_t p;
                if (!__builtin_mul_overflow(x.num_, y.num_, &p) && p != INT64_MIN)
                    return BigRational(Raw{}, p, 1);
            } else if (x.num_ == 0 || y.num_ == 0) {
                return BigRational();
            } else {
                // cross-cancel first so the products stay small
                const std::int64_t g1 = std::gcd(x.num_, y.den_);
                const std::int64_t g2 = std::gcd(y.num_, x.den_);
                std::int64_t n, d;
                if (!__builtin_mul_overflow(x.num_ / (g1 ? g1 : 1), y.num_ / (g2 ? g2 : 1), &n)
                    && !__builtin_mul_overflow(x.den_ / (g2 ? g2 : 1), y.den_ / (g1 ? g1 : 1), &d)
                    && n != INT64_MIN)
                    return BigRational(Raw{}, n, d);
            }
        }
        return from_mpq(x.to_mpq() * y.to_mpq());
    }

    friend BigRational operator/(const BigRational& x, const BigRational& y)
    {
        if (y.is_zero())
            throw Error(ErrorKind::DenominatorVanishes, "division by zero rational");
        return x * y.inverse();
    }

    BigRational inverse() const
    {
        if (is_zero())
            throw Error(ErrorKind::DenominatorVanishes, "inverse of zero");
        if (!big_ && num_ != INT64_MIN)
            return num_ < 0 ? BigRational(Raw{}, -den_, -num_) : BigRational(Raw{}, den_, num_);
        return from_mpq(1 / to_mpq());
    }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
    BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
    BigRational& operator*=(const BigRational& y) { return *this = *this * y; }

    friend bool operator==(const BigRational& x, const BigRational& y)
    {
        if (!x.big_ && !y.big_)
            return x.num_ == y.num_ && x.den_ == y.den_;
        if (!x.big_ || !y.big_)
            return false; // representation is canonical: small values are never stored big
        return *x.big_ == *y.big_;
    }

    friend std::strong_ordering operator<=>(const BigRational& x, const BigRational& y)
    {
        if (!x.big_ && !y.big_ && x.den_ == 1 && y.den_ == 1)
            return x.num_ <=> y.num_;
        const int c = cmp(x.to_mpq(), y.to_mpq());
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

private:
    struct Raw {};
    BigRational(Raw, std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

    static mpz_class mpz_from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

    // small form holds exactly the values with both parts in (INT64_MIN, INT64_MAX]
    static bool fits(const mpz_class& z) { return z.fits_slong_p() && z.get_si() != INT64_MIN; }

    static BigRational from_mpq(const mpq_class& q)
    {
        BigRational r;
        if (fits(q.get_num()) && fits(q.get_den())) {
            r.num_ = q.get_num().get_si();
            r.den_ = q.get_den().get_si();
        } else {
            r.big_ = std::make_shared<const mpq_class>(q);
        }
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace solvir

#endif
