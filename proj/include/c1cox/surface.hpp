#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "c1cox/fan.hpp"
#include "c1cox/ringdata.hpp"
#include "c1cox/trinomial.hpp"

namespace c1cox {

enum class SurfaceKind { Elliptic, Parabolic, Hyperbolic };

std::string to_string(SurfaceKind kind);

/// Elliptic: Type 2, all n_i = 1, m = 0. Parabolic: Type 1, all n_i = 1,
/// m = 1. Hyperbolic: Type 1, all n_i <= 2, m = 0. Always s = 1 and the
/// columns of P must span the extremal rays of a pointed cone.
SurfaceKind classify_case(const C1Data& data);

struct Resolution {
  C1Data original;
  /// The resolved data: same A, blocks and d extended by the new columns.
  C1Data resolved;
  IntMatrix resolved_p;
  std::vector<TrinomialRelation> resolved_relations;
  /// Column indices of resolved_p that are not columns of the original P.
  std::vector<std::size_t> exceptional;
  Bunch bunch;
  Fan fan;
};

/// Affine pipeline: classify, then resolve with phi = {{0}}.
Resolution resolve(const C1Data& data, const FanOptions& options = {});

/// Ambient fan for (data, phi), refinement with the tropical fan, minimal
/// regular subdivision, reassembly of P and the Gale dual bunch. Requires
/// s = 1. Within an arm the new columns follow the chain from the original
/// column towards the central ray; central columns come last.
Resolution resolve(const C1Data& data, const Bunch& phi, const FanOptions& options = {});

/// The relation of the resolved data with blocks numbered from 1 (the
/// naming used by the catalog).
SparsePoly resolved_relation(const Resolution& resolution);
std::string resolved_relation_string(const Resolution& resolution);

/// Self-intersection of each exceptional curve, keyed by column index.
std::map<std::size_t, Integer> exceptional_self_intersections(const Resolution& resolution);

struct ResolutionGraph {
  struct Node {
    std::size_t column;
    Integer self_intersection;
  };
  std::vector<Node> nodes;
  /// Pairs of node positions.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Node positions per connected component.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::string> component_types;
  /// Component types joined by " + ", or "none" without exceptional curves.
  std::string ade_type;

  std::string to_dot() const;
};

ResolutionGraph resolution_graph(const Resolution& resolution);

/// A_n, D_n, E6, E7, E8 for a tree of (-2)-curves of matching shape, else
/// "other". Nodes are labels, edges pairs of positions.
std::string classify_ade(const std::vector<Integer>& labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace c1cox
