// Normalize a 2-cochain read from a file and report the cubic and linear parts.

#include <fstream>
#include <iostream>

#include <solvir/solvir.hpp>

using namespace solvir;

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <cochain file> [rank] [box]\n";
        return 2;
    }
    const int rank = argc > 2 ? std::stoi(argv[2]) : 2;
    const int box = argc > 3 ? std::stoi(argv[3]) : 3;
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    try {
        const TwoCochain theta = read_two_cochain(in, rank);
        if (const auto bad = find_cocycle_violation(theta, rank, box)) {
            std::cout << "not a cocycle: " << *bad << "\n";
            return 1;
        }
        const NormalizedCocycle nc = normalize_cocycle(theta, rank, box);
        const auto [a, b] = recognize_eta(nc.eta);
        std::cout << "eta(x) = a x^3 + b x with a = " << a.to_string() << ", b = " << b.to_string() << "\n";
        std::cout << (a.is_zero() ? "trivial class" : "nontrivial class") << "\n";
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
