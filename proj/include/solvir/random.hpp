#ifndef SOLVIR_RANDOM_HPP
#define SOLVIR_RANDOM_HPP

#include <cstdint>
#include <random>

#include "algebra.hpp"
#include "lattice.hpp"
#include "scalar.hpp"

namespace solvir {

/// Seeded source of random test data. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; integers in [lo, hi] are taken
/// as lo + (draw mod (hi - lo + 1)), so the data is identical on every
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int uniform(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool coin() { return (engine_() & 1U) != 0; }

    LatticePoint point(int rank, int radius)
    {
        LatticePoint p(rank);
        for (int i = 0; i < rank; ++i)
            p[i] = uniform(-radius, radius);
        return p;
    }

    LatticePoint nonzero_point(int rank, int radius)
    {
        while (true) {
            LatticePoint p = point(rank, radius);
            if (!p.is_zero())
                return p;
        }
    }

    /// Small rational constant p/q with |p| <= 5, 1 <= q <= 4.
    BigRational rational()
    {
        return BigRational(uniform(-5, 5), uniform(1, 4));
    }

    /// Scalar c0 + c1 mu.gamma, divided by a random linear form when
    /// `with_denominator` holds.
    Scalar scalar(int rank, bool with_denominator = true)
    {
        Scalar s = Scalar(rational()) + Scalar(rational()) * Scalar::mu_dot(point(rank, 2));
        if (with_denominator && coin())
            s = s.divide_by_form(nonzero_point(rank, 2));
        return s;
    }

    /// Combination of up to `terms` basis vectors E(alpha), |alpha_i| <= radius,
    /// with random scalar coefficients, plus possibly a central term.
    AlgebraElement element(int rank, int radius, int terms = 3)
    {
        AlgebraElement x;
        const int k = uniform(1, terms);
        for (int i = 0; i < k; ++i)
            x.add_term(BasisSymbol::e(point(rank, radius)), scalar(rank));
        if (coin())
            x.add_term(BasisSymbol::central(), scalar(rank, false));
        return x;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace solvir

#endif
