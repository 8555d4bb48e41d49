#include "c1cox/trinomial.hpp"

#include "c1cox/error.hpp"

namespace c1cox {

VariableNames variable_names(const C1Data& data, NamingScheme scheme) {
  std::vector<std::string> names;
  const int shift = scheme.one_based_blocks ? 1 - data.iota() : 0;
  for (std::size_t k = 0; k < data.blocks.size(); ++k) {
    const int label = data.block_label(k) + shift;
    const std::size_t size = data.blocks[k].size();
    for (std::size_t j = 1; j <= size; ++j) {
      if (scheme.compact_singletons && size == 1) {
        names.push_back("T" + std::to_string(label));
      } else if (label < 10 && j < 10) {
        names.push_back("T" + std::to_string(label) + std::to_string(j));
      } else {
        names.push_back("T" + std::to_string(label) + "_" + std::to_string(j));
      }
    }
  }
  for (std::size_t k = 1; k <= data.m; ++k) names.push_back("S" + std::to_string(k));
  return VariableNames(std::move(names));
}

Monomial block_monomial(const C1Data& data, std::size_t position) {
  Monomial m;
  const auto& block = data.blocks[position];
  for (std::size_t j = 0; j < block.size(); ++j) {
    if (!block[j].fits_ulong_p())
      throw Error(ErrorKind::InvalidArgument, "exponent too large for a monomial");
    m = m * Monomial::variable(data.column_index(position, j), block[j].get_ui());
  }
  return m;
}

namespace {

Rational a_det(const C1Data& data, std::size_t i, std::size_t j) {
  return data.A[0][i] * data.A[1][j] - data.A[0][j] * data.A[1][i];
}

}  // namespace

std::vector<TrinomialRelation> build_relations(const C1Data& data) {
  std::vector<TrinomialRelation> out;
  const std::size_t r = data.r();
  if (data.type == DataType::Type1) {
    const auto& a = data.A[0];
    for (std::size_t k = 0; k + 1 < r; ++k) {
      SparsePoly g;
      g.add_term(1, block_monomial(data, k));
      g.add_term(-1, block_monomial(data, k + 1));
      g.add_term(-(a[k + 1] - a[k]), Monomial());
      out.push_back({std::move(g), data.block_label(k)});
    }
    return out;
  }
  for (std::size_t k = 0; k + 2 <= r; ++k) {
    SparsePoly g;
    g.add_term(a_det(data, k + 1, k + 2), block_monomial(data, k));
    g.add_term(-a_det(data, k, k + 2), block_monomial(data, k + 1));
    g.add_term(a_det(data, k, k + 1), block_monomial(data, k + 2));
    out.push_back({std::move(g), data.block_label(k)});
  }
  return out;
}

std::optional<IntVector> homogeneous_degree(const SparsePoly& poly,
                                            const GradingMap& grading) {
  std::optional<IntVector> common;
  for (const auto& [mono, coeff] : poly.terms()) {
    IntVector exponents(grading.source_rank(), Integer(0));
    for (const auto& [v, e] : mono.powers()) exponents.at(v) = e;
    IntVector deg = grading.degree(exponents);
    if (!common) {
      common = std::move(deg);
    } else if (*common != deg) {
      return std::nullopt;
    }
  }
  if (!common) {
    const auto& t = grading.target();
    common = IntVector(t.free_rank + t.invariant_factors.size(), Integer(0));
  }
  return common;
}

bool is_homogeneous(const SparsePoly& poly, const GradingMap& grading) {
  return homogeneous_degree(poly, grading).has_value();
}

SparsePoly pair_relation(const C1Data& data, int i, int j) {
  if (data.type != DataType::Type1)
    throw Error(ErrorKind::Type2Unsupported, "pair relations are defined for Type 1");
  const std::size_t pi = data.block_position(i);
  const std::size_t pj = data.block_position(j);
  SparsePoly g;
  g.add_term(1, block_monomial(data, pi));
  g.add_term(-1, block_monomial(data, pj));
  g.add_term(data.A[0][pi] - data.A[0][pj], Monomial());
  return g;
}

std::vector<SparsePoly> groebner_basis_candidate(const C1Data& data) {
  std::vector<SparsePoly> basis;
  const int r = static_cast<int>(data.r());
  for (int i = 1; i < r; ++i) basis.push_back(pair_relation(data, i, r));
  return basis;
}

GroebnerCertificate groebner_certificate(const C1Data& data) {
  if (data.type != DataType::Type1)
    throw Error(ErrorKind::Type2Unsupported, "the Groebner certificate covers Type 1");
  GroebnerCertificate cert;
  const int r = static_cast<int>(data.r());
  const VariableNames names = variable_names(data);

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k) {
        if (pair_relation(data, i, j) != pair_relation(data, i, k) - pair_relation(data, j, k))
          throw Error(ErrorKind::CertificateFailed,
                      "g_ij != g_ik - g_jk for (i,j,k) = (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
        ++cert.triples_checked;
      }

  const std::vector<SparsePoly> basis = groebner_basis_candidate(data);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const SparsePoly rem = reduce(s_polynomial(basis[a], basis[b]), basis);
      if (!rem.is_zero())
        throw Error(ErrorKind::CertificateFailed,
                    "S(g_" + std::to_string(a + 1) + "r, g_" + std::to_string(b + 1) +
                        "r) reduces to " + rem.to_string(names));
      ++cert.s_pairs_checked;
    }

  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].leading_coefficient() != 1)
      throw Error(ErrorKind::CertificateFailed,
                  "g_" + std::to_string(a + 1) + "r is not monic");
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& [mono, coeff] : basis[a].terms())
        if (basis[b].leading_monomial().divides(mono))
          throw Error(ErrorKind::CertificateFailed,
                      "term of g_" + std::to_string(a + 1) + "r divisible by the leading term of g_" +
                          std::to_string(b + 1) + "r");
    }
  }
  return cert;
}

}  // namespace c1cox
