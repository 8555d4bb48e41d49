#pragma once

#include <optional>
#include <vector>

#include "c1cox/polynomial.hpp"
#include "c1cox/ringdata.hpp"

namespace c1cox {

/// How T-variables are printed. By default blocks carry their own
/// labels (Type 2 starts at 0); `one_based_blocks` relabels the first block
/// as 1, and `compact_singletons` prints T_i for a block with one variable.
struct NamingScheme {
  bool one_based_blocks = false;
  bool compact_singletons = false;
};

VariableNames variable_names(const C1Data& data, NamingScheme scheme = {});

/// T_i^{l_i} for the block at the given position.
Monomial block_monomial(const C1Data& data, std::size_t position);

struct TrinomialRelation {
  SparsePoly poly;
  int index = 0;
};

/// Type 1: g_i = T_i^{l_i} - T_{i+1}^{l_{i+1}} - (a_{i+1} - a_i), i = 1..r-1.
/// Type 2: g_i = det [T_i^{l_i}, T_{i+1}^{l_{i+1}}, T_{i+2}^{l_{i+2}}; a_i,
/// a_{i+1}, a_{i+2}] expanded along the monomial row, i = 0..r-2.
std::vector<TrinomialRelation> build_relations(const C1Data& data);

/// Common degree of all terms (constants have degree zero), or nullopt when
/// the terms disagree.
std::optional<IntVector> homogeneous_degree(const SparsePoly& poly,
                                            const GradingMap& grading);
bool is_homogeneous(const SparsePoly& poly, const GradingMap& grading);

/// Type 1: g_ij = T_i^{l_i} - T_j^{l_j} + a_i - a_j for block labels i, j.
SparsePoly pair_relation(const C1Data& data, int i, int j);

/// {g_{1r}, ..., g_{r-1,r}} for Type 1 data.
std::vector<SparsePoly> groebner_basis_candidate(const C1Data& data);

struct GroebnerCertificate {
  std::size_t triples_checked = 0;
  std::size_t s_pairs_checked = 0;
};

/// Verifies that {g_{ir}} is a reduced lex Groebner basis of the relation
/// ideal: the identities g_ij = g_ik - g_jk on all triples, every
/// S-polynomial reduces to zero, and no term of an element is divisible by
/// the leading monomial of another. Throws CertificateFailed naming the
/// offending pair or triple; Type2Unsupported for Type 2.
GroebnerCertificate groebner_certificate(const C1Data& data);

}  // namespace c1cox
