#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "c1cox/lattice.hpp"

namespace c1cox {

/// Rational polyhedral cone cone(rays) + lin(lineality) in Q^d.
///
/// Generators are normalized on construction (zero vectors dropped, rays made
/// primitive, duplicates removed, sorted); they need not be extremal until
/// reduced() is called. Membership and relative-interior questions are
/// decided by exact linear programs; facet enumeration is brute force over
/// tight constraint sets, which is fine in the small dimensions used here.
class Cone {
 public:
  Cone() = default;
  /// The zero cone {0} in Q^d.
  explicit Cone(std::size_t ambient_dim);
  Cone(std::size_t ambient_dim, std::vector<IntVector> rays,
       std::vector<IntVector> lineality = {});

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<IntVector>& lineality() const noexcept { return lineality_; }

  std::size_t dimension() const;
  bool is_zero() const noexcept { return rays_.empty() && lineality_.empty(); }
  bool is_pointed() const;

  bool contains(std::span<const Integer> v) const;
  bool contains(const Cone& other) const;
  bool relint_contains(std::span<const Integer> v) const;
  bool relint_meets(const Cone& other) const;

  /// Same cone with redundant generators removed and every generator whose
  /// negative lies in the cone moved to the lineality space.
  Cone reduced() const;

  struct HRep {
    std::vector<IntVector> inequalities;  // a . x >= 0
    std::vector<IntVector> equations;     // b . x == 0
  };
  HRep h_representation() const;

  Cone intersection(const Cone& other) const;

  /// Faces as index sets into rays(); rays must be extremal (use reduced()).
  /// Includes the minimal face and the cone itself.
  std::vector<std::vector<std::size_t>> faces() const;
  bool is_face_of(const Cone& other) const;

  std::string to_string() const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
};

/// { x : a . x >= 0 for a in inequalities, b . x = 0 for b in equations }.
Cone cone_from_inequalities(std::size_t ambient_dim,
                            const std::vector<IntVector>& inequalities,
                            const std::vector<IntVector>& equations = {});

/// The vectors generate a pointed cone and each of them spans an extremal
/// ray of it (none lies in the cone generated by the others).
bool generates_pointed_cone(const std::vector<IntVector>& vectors);

}  // namespace c1cox
