// Level-two pairing matrix of the rank-one Verma module and its determinant.

#include <iostream>
#include <vector>

#include <solvir/solvir.hpp>

using namespace solvir;

int main()
{
    const Algebra g(1);
    const VermaModule m(1);
    const LatticePoint one{std::vector<int>{1}}, two{std::vector<int>{2}};
    const std::vector<VermaVector> down = {m.apply_word({-one, -one}), m.apply_word({-two})};
    const std::vector<std::vector<LatticePoint>> up = {{one, one}, {two}};
    Matrix<Scalar> gram(2, std::vector<Scalar>(2));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            VermaVector v = down[c];
            for (const auto& x : up[r])
                v = m.act(g.e(x), v);
            gram[r][c] = v.coefficient(PBWMonomial());
            std::cout << "G[" << r << "][" << c << "] = " << gram[r][c].to_string() << "\n";
        }
    std::cout << "det = " << (gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]).to_string() << "\n";
    const std::map<Var, BigRational> unit = {{mu_var(0), BigRational(1)}};
    std::cout << "det at mu1 = 1: " << (gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0]).specialize(unit).to_string() << "\n";
}
