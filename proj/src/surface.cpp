#include "c1cox/surface.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "c1cox/error.hpp"

namespace c1cox {

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Elliptic: return "elliptic";
    case SurfaceKind::Parabolic: return "parabolic";
    case SurfaceKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

SurfaceKind classify_case(const C1Data& data) {
  if (data.s() != 1)
    throw Error(ErrorKind::NotASurfaceCase,
                "surfaces need exactly one row in d, got " + std::to_string(data.s()));
  const IntMatrix p = build_p(data);
  if (!generates_pointed_cone(p.column_list()))
    throw Error(ErrorKind::NotASurfaceCase,
                "the columns of P are not the extremal rays of a pointed cone");
  auto all_sizes_at_most = [&](std::size_t bound) {
    return std::all_of(data.blocks.begin(), data.blocks.end(),
                       [&](const auto& b) { return b.size() <= bound; });
  };
  if (data.type == DataType::Type2) {
    if (all_sizes_at_most(1) && data.m == 0) return SurfaceKind::Elliptic;
  } else {
    if (all_sizes_at_most(1) && data.m == 1) return SurfaceKind::Parabolic;
    if (all_sizes_at_most(2) && data.m == 0) return SurfaceKind::Hyperbolic;
  }
  throw Error(ErrorKind::NotASurfaceCase,
              "block sizes and m match none of the elliptic, parabolic, hyperbolic shapes (" +
                  describe(data) + ")");
}

namespace {

struct Placement {
  bool central = false;
  std::size_t block = 0;
  Integer l;
  IntVector d;
};

// Where a ray of the resolved fan sits: on an arm (block, multiplier l) or on
// the lineality space.
std::optional<Placement> place(const IntVector& v, const C1Data& data) {
  const std::size_t r = data.r();
  Placement out;
  out.d.assign(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < r; ++i)
    if (v[i] != 0) nonzero.push_back(i);
  if (nonzero.empty()) {
    out.central = true;
    return out;
  }
  if (data.type == DataType::Type2 && nonzero.size() == r && v[0] < 0 &&
      std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r),
                  [&](const Integer& x) { return x == v[0]; })) {
    out.block = 0;
    out.l = -v[0];
    return out;
  }
  if (nonzero.size() == 1 && v[nonzero[0]] > 0) {
    out.block = nonzero[0] + (data.type == DataType::Type2 ? 1 : 0);
    out.l = v[nonzero[0]];
    return out;
  }
  return std::nullopt;
}

struct ArmEntry {
  IntVector column;
  Integer l;
  Integer d;
  std::optional<std::size_t> original;
};

Rational slope(const ArmEntry& e) { return Rational(e.d, e.l); }

IntMatrix d_row(const std::vector<IntVector>& columns, std::size_t r) {
  IntMatrix d(1, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) d(0, j) = columns[j][r];
  return d;
}

}  // namespace

Resolution resolve(const C1Data& data, const FanOptions& options) {
  classify_case(data);
  const IntMatrix p = build_p(data);
  const std::size_t rank = cokernel(p.transpose()).target().free_rank;
  return resolve(data, affine_bunch(rank), options);
}

Resolution resolve(const C1Data& input, const Bunch& phi, const FanOptions& options) {
  const C1Data data = validate(input);
  if (data.s() != 1)
    throw Error(ErrorKind::NotASurfaceCase,
                "resolution needs exactly one row in d, got " + std::to_string(data.s()));
  const IntMatrix p = build_p(data);
  const std::size_t r = data.r();

  const Fan trop = tropical_fan(data);
  const Fan sigma = ambient_fan(data, phi, options);
  const Fan sigma_prime = refine_with_tropical(sigma, trop);
  Fan sigma2 = regular_subdivision(sigma_prime);

  std::vector<std::vector<ArmEntry>> arms(data.block_count());
  std::vector<IntVector> central;
  std::set<IntVector> known;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    const IntVector col = p.column(j);
    known.insert(col);
    if (const auto block = data.block_of_column(j)) {
      arms[*block].push_back({col, data.blocks[*block][j - data.column_index(*block, 0)],
                              col[r], j});
    } else {
      central.push_back(col);
    }
  }
  std::vector<IntVector> new_central;
  for (const IntVector& ray : sigma2.rays()) {
    if (known.count(ray)) continue;
    const auto where = place(ray, data);
    if (!where)
      throw Error(ErrorKind::RayMismatch,
                  "ray " + to_string(ray) + " of the subdivision lies on no arm");
    if (where->central) {
      new_central.push_back(ray);
    } else {
      arms[where->block].push_back({ray, where->l, where->d[0], std::nullopt});
    }
  }
  central.insert(central.end(), new_central.begin(), new_central.end());

  // Chain order: from the original column towards the central ray.
  int sigma_sign = 0;
  if (!central.empty()) sigma_sign = central.front()[r] > 0 ? 1 : -1;
  for (auto& arm : arms) {
    std::stable_sort(arm.begin(), arm.end(),
                     [](const ArmEntry& a, const ArmEntry& b) { return slope(a) < slope(b); });
    bool reverse = sigma_sign < 0;
    if (sigma_sign == 0) {
      std::vector<std::size_t> originals;
      for (const ArmEntry& e : arm)
        if (e.original) originals.push_back(*e.original);
      reverse = !std::is_sorted(originals.begin(), originals.end());
    }
    if (reverse) std::reverse(arm.begin(), arm.end());
  }

  Resolution res;
  res.original = data;
  res.resolved.type = data.type;
  res.resolved.A = data.A;
  res.resolved.m = central.size();
  std::vector<IntVector> columns;
  for (const auto& arm : arms) {
    std::vector<Integer> block;
    for (const ArmEntry& e : arm) {
      block.push_back(e.l);
      columns.push_back(e.column);
    }
    res.resolved.blocks.push_back(std::move(block));
  }
  columns.insert(columns.end(), central.begin(), central.end());
  res.resolved.d = d_row(columns, r);
  res.resolved = validate(res.resolved);
  res.resolved_p = build_p(res.resolved);
  if (res.resolved_p.column_list() != columns)
    throw Error(ErrorKind::RayMismatch, "reassembled P does not reproduce the fan rays");
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (!known.count(columns[j])) res.exceptional.push_back(j);
  res.resolved_relations = build_relations(res.resolved);
  res.bunch = gale_dual_bunch(res.resolved_p, sigma2);
  res.fan = std::move(sigma2);
  return res;
}

SparsePoly resolved_relation(const Resolution& resolution) {
  if (resolution.resolved_relations.empty()) return SparsePoly();
  return resolution.resolved_relations.front().poly;
}

std::string resolved_relation_string(const Resolution& resolution) {
  NamingScheme scheme;
  scheme.one_based_blocks = true;
  return resolved_relation(resolution).to_string(variable_names(resolution.resolved, scheme));
}

namespace {

// Rays sharing a two-dimensional cone of the fan with the given ray.
std::vector<IntVector> neighbours(const Fan& fan, const IntVector& ray) {
  std::vector<IntVector> out;
  for (const Cone& c : fan.cones) {
    if (c.rays().size() != 2) continue;
    if (c.rays()[0] == ray) out.push_back(c.rays()[1]);
    if (c.rays()[1] == ray) out.push_back(c.rays()[0]);
  }
  return out;
}

}  // namespace

std::map<std::size_t, Integer> exceptional_self_intersections(const Resolution& resolution) {
  const C1Data& data = resolution.resolved;
  const std::size_t r = data.r();
  std::map<std::size_t, Integer> out;
  for (std::size_t j : resolution.exceptional) {
    const IntVector v = resolution.resolved_p.column(j);
    const std::vector<IntVector> nb = neighbours(resolution.fan, v);
    const auto where = place(v, data);
    if (where && where->central) {
      const int sign = v[r] > 0 ? 1 : -1;
      Rational sum = 0;
      for (const IntVector& u : nb) {
        const auto arm = place(u, data);
        if (!arm || arm->central)
          throw Error(ErrorKind::NonSmoothCone, "central ray next to " + to_string(u));
        sum += Rational(sign * arm->d[0], arm->l);
      }
      sum.canonicalize();
      if (sum.get_den() != 1)
        throw Error(ErrorKind::NonIntegerSlopeSum,
                    "slope sum " + sum.get_str() + " at the central ray is not an integer");
      out[j] = -sum.get_num();
      continue;
    }
    if (nb.size() != 2)
      throw Error(ErrorKind::NonSmoothCone,
                  "exceptional ray " + to_string(v) + " has " + std::to_string(nb.size()) +
                      " neighbours");
    IntVector sum(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] = nb[0][i] + nb[1][i];
    std::size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    const Integer b = sum[pivot] / v[pivot];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sum[i] != b * v[i])
        throw Error(ErrorKind::NonSmoothCone,
                    "neighbours of " + to_string(v) + " do not add up to a multiple of it");
    out[j] = -b;
  }
  return out;
}

std::string classify_ade(const std::vector<Integer>& labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t k = labels.size();
  if (k == 0) return "none";
  if (std::any_of(labels.begin(), labels.end(), [](const Integer& x) { return x != -2; }))
    return "other";
  if (edges.size() + 1 != k) return "other";
  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // connected with k - 1 edges, hence a tree
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  if (reached != k) return "other";

  std::vector<std::size_t> branch;
  for (std::size_t x = 0; x < k; ++x) {
    if (adj[x].size() > 3) return "other";
    if (adj[x].size() == 3) branch.push_back(x);
  }
  if (branch.empty()) return "A" + std::to_string(k);
  if (branch.size() > 1) return "other";
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch[0]]) {
    std::size_t prev = branch[0];
    std::size_t cur = start;
    std::size_t length = 1;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(arms[2] + 3);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(arms[2] + 4);
  return "other";
}

ResolutionGraph resolution_graph(const Resolution& resolution) {
  ResolutionGraph g;
  const auto labels = exceptional_self_intersections(resolution);
  std::map<IntVector, std::size_t> node_of;
  for (const auto& [column, label] : labels) {
    node_of.emplace(resolution.resolved_p.column(column), g.nodes.size());
    g.nodes.push_back({column, label});
  }
  for (const Cone& c : resolution.fan.cones) {
    if (c.rays().size() != 2) continue;
    auto a = node_of.find(c.rays()[0]);
    auto b = node_of.find(c.rays()[1]);
    if (a == node_of.end() || b == node_of.end()) continue;
    g.edges.emplace_back(std::min(a->second, b->second), std::max(a->second, b->second));
  }
  std::sort(g.edges.begin(), g.edges.end());

  std::vector<int> comp(g.nodes.size(), -1);
  for (std::size_t start = 0; start < g.nodes.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(g.components.size());
    std::vector<std::size_t> members{start};
    comp[start] = id;
    for (std::size_t q = 0; q < members.size(); ++q)
      for (const auto& [a, b] : g.edges) {
        std::size_t other;
        if (a == members[q]) {
          other = b;
        } else if (b == members[q]) {
          other = a;
        } else {
          continue;
        }
        if (comp[other] < 0) {
          comp[other] = id;
          members.push_back(other);
        }
      }
    std::sort(members.begin(), members.end());
    g.components.push_back(std::move(members));
  }
  for (const auto& members : g.components) {
    std::vector<Integer> sub_labels;
    std::map<std::size_t, std::size_t> local;
    for (std::size_t x : members) {
      local[x] = sub_labels.size();
      sub_labels.push_back(g.nodes[x].self_intersection);
    }
    std::vector<std::pair<std::size_t, std::size_t>> sub_edges;
    for (const auto& [a, b] : g.edges)
      if (local.count(a) && local.count(b)) sub_edges.emplace_back(local[a], local[b]);
    g.component_types.push_back(classify_ade(sub_labels, sub_edges));
  }
  if (g.component_types.empty()) {
    g.ade_type = "none";
  } else {
    for (std::size_t i = 0; i < g.component_types.size(); ++i)
      g.ade_type += (i ? " + " : "") + g.component_types[i];
  }
  return g;
}

std::string ResolutionGraph::to_dot() const {
  std::ostringstream os;
  os << "graph resolution {\n";
  for (const Node& n : nodes)
    os << "  c" << n.column + 1 << " [label=\"" << n.self_intersection.get_str() << "\"];\n";
  for (const auto& [a, b] : edges)
    os << "  c" << nodes[a].column + 1 << " -- c" << nodes[b].column + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace c1cox
