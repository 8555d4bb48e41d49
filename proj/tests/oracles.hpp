#pragma once

// Independent reference computations used to cross-check the library. They
// deliberately avoid the library's normal forms and LP code.

#include <array>
#include <random>
#include <vector>

#include "c1cox/lattice.hpp"
#include "c1cox/ringdata.hpp"

namespace oracle {

using c1cox::Integer;
using c1cox::IntMatrix;
using c1cox::IntVector;

/// Determinant by the Leibniz permutation sum.
Integer leibniz_det(const IntMatrix& m);

/// Nonzero invariant factors from gcds of k x k minors (D_k / D_{k-1}).
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

/// Z^rows / im(m) is torsion-free, decided by minors.
bool cokernel_torsion_free(const IntMatrix& m);

using Point = std::array<long long, 2>;

/// Compact boundary of conv(cone(a, b) cap Z^2 minus 0), read off the lattice
/// points of the closed fundamental parallelogram; from a to b, inclusive.
std::vector<Point> hj_boundary(Point a, Point b);

/// Random Type 1 or Type 2 data with d (s rows), valid or not.
c1cox::C1Data random_data(std::mt19937& rng, c1cox::DataType type, std::size_t max_r,
                          std::size_t max_block, long max_l, std::size_t m, std::size_t s);

long long gcd_ll(long long a, long long b);

}  // namespace oracle
