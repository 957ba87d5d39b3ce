// Level-one pairing matrices of the generalized Verma module in rank 2.

#include <iostream>
#include <vector>

#include <solvir/solvir.hpp>

using namespace solvir;

int main()
{
    const GvmModule mod(2, DensityParams::formal());
    const LatticePoint kappa{std::vector<int>{0}};
    const Matrix<Scalar> m = level1_pairing_matrix(mod, kappa, 1);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            std::cout << "M[" << r << "][" << c << "] = " << m[r][c].to_string() << "\n";
    for (int kap = -1; kap <= 1; ++kap) {
        const auto q = quotient_dim_level1(2, LatticePoint(std::vector<int>{kap}), DensityParams::formal(), {1, 2, 3, 4, 5});
        std::cout << "kappa = " << kap << ":";
        for (const auto& b : q.boxes)
            std::cout << " r" << b.radius << "=" << b.rank;
        std::cout << (q.stabilized ? " (stable)" : "") << "\n";
    }
}
