#pragma once

#include <string>

#include "c1cox/lattice.hpp"
#include "c1cox/ringdata.hpp"

namespace c1cox {

enum class DuValType { D, E6, E7, E8 };

std::string to_string(DuValType type);
/// "D", "E6", "E7", "E8" (case-insensitive); throws InvalidArgument.
DuValType parse_duval_type(const std::string& text);

/// An entry of the du Val catalog of elliptic K*-surfaces.
struct CatalogEntry {
  std::string name;                 // "D5", "E6", ...
  std::vector<std::vector<Rational>> A;
  IntMatrix P;
  std::string equation;             // defining equation in K^3
  std::string g;                    // Cox ring relation, T_1..T_3
  IntMatrix P_tilde;                // resolved matrix
  std::string g_tilde;              // resolved relation, T_ij
};

/// Throws BadQ for D with q < 4; q is ignored for the E types.
CatalogEntry duval_catalog(DuValType type, int q = 4);

/// Type 2 data with blocks (l_0), (l_1), (l_2) and d the last row of P.
C1Data catalog_data(const CatalogEntry& entry);

/// The E6 family P_c = [[-3,3,0],[-3,0,2],[1+3c,1,1]] with the catalog A.
C1Data e6_family(long c);
/// The expected resolution of P_c, columns in chain order.
IntMatrix e6_family_resolved(long c);

}  // namespace c1cox
