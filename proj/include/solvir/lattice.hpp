#ifndef SOLVIR_LATTICE_HPP
#define SOLVIR_LATTICE_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace solvir {

/// Largest supported rank n of the index lattice Z^n.
inline constexpr int kMaxRank = 8;

/// A point of Z^n. Storage is inline so lattice points are cheap to copy and
/// compare; n is fixed per point and mixing ranks is an error.
class LatticePoint {
public:
    LatticePoint() = default;

    explicit LatticePoint(int rank) : rank_(check_rank(rank)) {}

    LatticePoint(std::initializer_list<int> coords) : LatticePoint(std::span<const int>(coords.begin(), coords.size())) {}

    explicit LatticePoint(std::span<const int> coords) : rank_(check_rank(static_cast<int>(coords.size())))
    {
        std::copy(coords.begin(), coords.end(), c_.begin());
    }

    static LatticePoint zero(int rank) { return LatticePoint(rank); }

    static LatticePoint unit(int rank, int axis)
    {
        LatticePoint p(rank);
        if (axis < 0 || axis >= rank)
            throw Error(ErrorKind::AxisOutOfRange, "axis " + std::to_string(axis + 1) + " outside rank " + std::to_string(rank));
        p.c_[static_cast<std::size_t>(axis)] = 1;
        return p;
    }

    int rank() const noexcept { return rank_; }
    int operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
    std::span<const int> coords() const noexcept { return {c_.data(), static_cast<std::size_t>(rank_)}; }

    bool is_zero() const noexcept
    {
        return std::all_of(c_.begin(), c_.begin() + rank_, [](int v) { return v == 0; });
    }

    int max_abs() const noexcept
    {
        int m = 0;
        for (int i = 0; i < rank_; ++i)
            m = std::max(m, std::abs((*this)[i]));
        return m;
    }

    /// Sign of the point in lexicographic order: -1, 0 or +1.
    int lex_sign() const noexcept
    {
        for (int i = 0; i < rank_; ++i)
            if ((*this)[i] != 0)
                return (*this)[i] > 0 ? 1 : -1;
        return 0;
    }

    /// Drops the first coordinate: (a1, a2, ..., an) -> (a2, ..., an).
    LatticePoint tail() const
    {
        LatticePoint p(rank_ - 1);
        std::copy(c_.begin() + 1, c_.begin() + rank_, p.c_.begin());
        return p;
    }

    /// Prepends a coordinate: (first, a1, ..., an).
    LatticePoint prepend(int first) const
    {
        LatticePoint p(rank_ + 1);
        p.c_[0] = first;
        std::copy(c_.begin(), c_.begin() + rank_, p.c_.begin() + 1);
        return p;
    }

    friend LatticePoint operator+(const LatticePoint& x, const LatticePoint& y)
    {
        require_same_rank(x, y);
        LatticePoint r(x.rank_);
        for (int i = 0; i < x.rank_; ++i)
            r[i] = x[i] + y[i];
        return r;
    }

    friend LatticePoint operator-(const LatticePoint& x, const LatticePoint& y)
    {
        require_same_rank(x, y);
        LatticePoint r(x.rank_);
        for (int i = 0; i < x.rank_; ++i)
            r[i] = x[i] - y[i];
        return r;
    }

    friend LatticePoint operator-(const LatticePoint& x)
    {
        LatticePoint r(x.rank_);
        for (int i = 0; i < x.rank_; ++i)
            r[i] = -x[i];
        return r;
    }

    friend LatticePoint operator*(int k, const LatticePoint& x)
    {
        LatticePoint r(x.rank_);
        for (int i = 0; i < x.rank_; ++i)
            r[i] = k * x[i];
        return r;
    }

    friend bool operator==(const LatticePoint& x, const LatticePoint& y) noexcept
    {
        return x.rank_ == y.rank_ && std::equal(x.c_.begin(), x.c_.begin() + x.rank_, y.c_.begin());
    }

    /// Container order: rank first, then lexicographic. Use `lex_compare`
    /// when a rank mismatch must be reported.
    friend std::strong_ordering operator<=>(const LatticePoint& x, const LatticePoint& y) noexcept
    {
        if (auto c = x.rank_ <=> y.rank_; c != 0)
            return c;
        for (int i = 0; i < x.rank_; ++i)
            if (auto c = x[i] <=> y[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (int i = 0; i < rank_; ++i) {
            if (i)
                s += ',';
            s += std::to_string((*this)[i]);
        }
        return s + "]";
    }

    static void require_same_rank(const LatticePoint& x, const LatticePoint& y)
    {
        if (x.rank_ != y.rank_)
            throw Error(ErrorKind::RankMismatch,
                        "rank " + std::to_string(x.rank_) + " vs rank " + std::to_string(y.rank_));
    }

private:
    static int check_rank(int rank)
    {
        if (rank < 0 || rank > kMaxRank)
            throw Error(ErrorKind::RankMismatch, "unsupported rank " + std::to_string(rank));
        return rank;
    }

    std::array<std::int32_t, kMaxRank> c_{};
    std::int32_t rank_ = 0;
};

/// Lexicographic comparison, a group order on Z^n.
inline std::strong_ordering lex_compare(const LatticePoint& x, const LatticePoint& y)
{
    LatticePoint::require_same_rank(x, y);
    return x <=> y;
}

/// All points of [-radius, radius]^rank in lexicographic order.
inline std::vector<LatticePoint> box_points(int rank, int radius)
{
    std::vector<LatticePoint> out;
    LatticePoint p(rank);
    for (int i = 0; i < rank; ++i)
        p[i] = -radius;
    if (rank == 0) {
        out.push_back(p);
        return out;
    }
    while (true) {
        out.push_back(p);
        int i = rank - 1;
        while (i >= 0 && p[i] == radius) {
            p[i] = -radius;
            --i;
        }
        if (i < 0)
            break;
        ++p[i];
    }
    return out;
}

/// Divides out the gcd of the coordinates and makes the first nonzero
/// coordinate positive; returns the removed signed factor.
inline int make_primitive(LatticePoint& p)
{
    int g = 0;
    for (int i = 0; i < p.rank(); ++i)
        g = std::gcd(g, std::abs(p[i]));
    if (g == 0)
        return 0;
    const int s = p.lex_sign() * g;
    for (int i = 0; i < p.rank(); ++i)
        p[i] /= s;
    return s;
}

} // namespace solvir

#endif
