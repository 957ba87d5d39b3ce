#ifndef SOLVIR_SOLVIR_HPP
#define SOLVIR_SOLVIR_HPP

#include "algebra.hpp"
#include "cocycle.hpp"
#include "density.hpp"
#include "error.hpp"
#include "gvm.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "lincomb.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "text.hpp"
#include "verma.hpp"

namespace solvir {

inline constexpr const char* kVersion = "0.1.0";

} // namespace solvir

#endif
