// Brackets of low basis elements in rank 2 and the rank-one subalgebras.

#include <iostream>
#include <vector>

#include <solvir/solvir.hpp>

using namespace solvir;

int main()
{
    const Algebra g(2);
    const std::vector<std::vector<int>> gens = {{1, 0}, {-1, 0}, {0, 1}, {1, -1}, {-1, 1}};
    for (const auto& x : gens)
        for (const auto& y : gens) {
            const LatticePoint a{std::span<const int>(x)}, b{std::span<const int>(y)};
            if (!(a < b))
                continue;
            std::cout << "[" << a.to_string() << ", " << b.to_string() << "] = " << Algebra::format(g.vir_bracket(g.e(a), g.e(b))) << "\n";
        }
    for (int i = 1; i <= 2; ++i) {
        const auto [a, b] = g.vir_i_cocycle_coefficients(i);
        std::cout << "axis " << i << ": a = " << a.to_string() << ", b = " << b.to_string() << "\n";
    }
}
