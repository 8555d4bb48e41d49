#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "c1cox/cone.hpp"
#include "c1cox/ringdata.hpp"

namespace c1cox {

/// A fan stored by its maximal cones.
struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> cones;

  /// Union of the rays of all cones, sorted lexicographically.
  std::vector<IntVector> rays() const;
  /// Maximal cones as sorted index lists into rays(), sorted.
  std::vector<std::vector<std::size_t>> cone_indices() const;
  /// Pairwise intersections of maximal cones are faces of both.
  bool intersections_are_faces() const;

  std::string to_text() const;
  /// Canonical JSON listing, two-space indented, trailing newline.
  std::string to_json() const;
};

/// Same cones, compared as sets.
bool same_fan(const Fan& a, const Fan& b);

/// Cones in the rational degree space K tensor Q.
struct Bunch {
  std::size_t rank = 0;
  std::vector<Cone> cones;
};

/// {{0}} in a degree space of the given rank.
Bunch affine_bunch(std::size_t rank);

enum class ComprisesMode {
  /// some tau in Phi with tau contained in Q(delta0*)
  Containment,
  /// additionally relint(tau) inside relint(Q(delta0*))
  RelativeInterior,
};

struct FanOptions {
  ComprisesMode comprises = ComprisesMode::Containment;
  std::size_t face_cap = 20;
};

/// Maximal cones cone(v_i1) + lin(e_{r+1}, ..., e_{r+s}), one per arm.
Fan tropical_fan(const C1Data& data);

/// Degrees Q(e_j) of the columns in the free part of K = Z^{n+m} / im(P^*).
std::vector<IntVector> column_degrees(const IntMatrix& p);

/// Index sets delta0 of orthant faces with relint P(delta0) meeting trop(X)
/// and Q(delta0*) comprising a cone of phi. Sorted by size, then lexically.
std::vector<std::vector<std::size_t>> admissible_faces(const C1Data& data, const Bunch& phi,
                                                       const FanOptions& options = {});

Fan ambient_fan(const C1Data& data, const Bunch& phi, const FanOptions& options = {});

/// Maximal cones among all intersections of a maximal cone of sigma with one
/// of trop.
Fan refine_with_tropical(const Fan& sigma, const Fan& trop);

/// Rays strictly inside cone(a, b) in Z^2 making every consecutive pair a
/// lattice basis, ordered from a to b.
std::vector<IntVector> hirzebruch_jung_2d(const IntVector& a, const IntVector& b);

/// Same inside the saturated rank-2 lattice spanned by a and b; the basis is
/// computed when not supplied.
std::vector<IntVector> hirzebruch_jung(const IntVector& a, const IntVector& b,
                                       std::vector<IntVector> plane_basis = {});

/// Minimal regular subdivision of a fan with maximal cones of dimension <= 2.
Fan regular_subdivision(const Fan& sigma_prime);

/// Q(delta0*) for every delta0 whose P-image is a cone of sigma (including
/// the zero cone and all rays). The rays of sigma must be the columns of p.
Bunch gale_dual_bunch(const IntMatrix& p, const Fan& sigma);

/// {P(delta0) : Q(delta0*) comprises a cone of phi}, maximal cones only.
Fan gale_dual_fan(const IntMatrix& p, const Bunch& phi, const FanOptions& options = {});

}  // namespace c1cox
