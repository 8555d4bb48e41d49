#include "c1cox/fan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "c1cox/error.hpp"
#include "c1cox/json_util.hpp"

namespace c1cox {

std::vector<IntVector> Fan::rays() const {
  std::set<IntVector> all;
  for (const Cone& c : cones) all.insert(c.rays().begin(), c.rays().end());
  return {all.begin(), all.end()};
}

std::vector<std::vector<std::size_t>> Fan::cone_indices() const {
  const std::vector<IntVector> all = rays();
  std::vector<std::vector<std::size_t>> out;
  for (const Cone& c : cones) {
    std::vector<std::size_t> idx;
    for (const IntVector& r : c.rays())
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(all.begin(), all.end(), r) - all.begin()));
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Fan::intersections_are_faces() const {
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const Cone meet = cones[i].intersection(cones[j]);
      if (!meet.is_face_of(cones[i]) || !meet.is_face_of(cones[j])) return false;
    }
  return true;
}

namespace {

// Cones in canonical order, paired with their index lists.
std::vector<std::pair<std::vector<std::size_t>, const Cone*>> ordered_cones(const Fan& fan) {
  const std::vector<IntVector> all = fan.rays();
  std::vector<std::pair<std::vector<std::size_t>, const Cone*>> out;
  for (const Cone& c : fan.cones) {
    std::vector<std::size_t> idx;
    for (const IntVector& r : c.rays())
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(all.begin(), all.end(), r) - all.begin()));
    std::sort(idx.begin(), idx.end());
    out.emplace_back(std::move(idx), &c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->lineality() < b.second->lineality();
  });
  return out;
}

}  // namespace

std::string Fan::to_text() const {
  std::ostringstream os;
  os << "ambient_dim " << ambient_dim << "\n";
  const std::vector<IntVector> all = rays();
  os << "rays " << all.size() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i)
    os << "  " << i << ": " << c1cox::to_string(all[i]) << "\n";
  os << "cones " << cones.size() << "\n";
  for (const auto& [idx, cone] : ordered_cones(*this)) {
    os << "  [";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? ", " : "") << idx[k];
    os << "]";
    if (!cone->lineality().empty()) {
      os << " + lin(";
      for (std::size_t k = 0; k < cone->lineality().size(); ++k)
        os << (k ? ", " : "") << c1cox::to_string(cone->lineality()[k]);
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string Fan::to_json() const {
  return json_fan(*this).dump(2) + "\n";
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.ambient_dim != b.ambient_dim || a.cones.size() != b.cones.size()) return false;
  for (const Cone& c : a.cones)
    if (std::none_of(b.cones.begin(), b.cones.end(), [&](const Cone& d) { return c == d; }))
      return false;
  for (const Cone& c : b.cones)
    if (std::none_of(a.cones.begin(), a.cones.end(), [&](const Cone& d) { return c == d; }))
      return false;
  return true;
}

Bunch affine_bunch(std::size_t rank) { return Bunch{rank, {Cone(rank)}}; }

Fan tropical_fan(const C1Data& data) {
  const IntMatrix p = build_p(data);
  const std::size_t r = p.rows() - data.s();
  const std::size_t dim = p.rows();
  std::vector<IntVector> lin;
  for (std::size_t k = r; k < dim; ++k) {
    IntVector e(dim, Integer(0));
    e[k] = 1;
    lin.push_back(std::move(e));
  }
  Fan fan{dim, {}};
  for (std::size_t pos = 0; pos < data.block_count(); ++pos) {
    Cone lambda(dim, {p.column(data.column_index(pos, 0))}, lin);
    for (std::size_t j = 0; j < data.blocks[pos].size(); ++j)
      if (!lambda.contains(p.column(data.column_index(pos, j))))
        throw Error(ErrorKind::InvalidArgument, "arm column outside its tropical cone");
    fan.cones.push_back(std::move(lambda));
  }
  return fan;
}

std::vector<IntVector> column_degrees(const IntMatrix& p) {
  const GradingMap q = cokernel(p.transpose());
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < p.cols(); ++j)
    out.push_back(q.free_part(q.degree_of_column(j)));
  return out;
}

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> mask_indices(Mask mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (mask >> j & 1U) out.push_back(j);
  return out;
}

void check_cap(std::size_t columns, const FanOptions& options) {
  if (columns > options.face_cap || columns > 62)
    throw Error(ErrorKind::FaceCapExceeded,
                std::to_string(columns) + " columns exceed the face enumeration cap of " +
                    std::to_string(options.face_cap));
}

// Test "Q(delta0*) comprises a cone of phi" for orthant faces.
class ComprisesTest {
 public:
  ComprisesTest(const IntMatrix& p, const Bunch& phi, ComprisesMode mode)
      : degrees_(column_degrees(p)), phi_(phi), mode_(mode), rank_(phi.rank) {
    for (const IntVector& d : degrees_)
      if (d.size() != rank_)
        throw Error(ErrorKind::InvalidArgument,
                    "bunch rank " + std::to_string(rank_) + " does not match the degree space");
  }

  bool operator()(Mask delta0) const {
    if (rank_ == 0) return true;
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < degrees_.size(); ++j)
      if (!(delta0 >> j & 1U)) gens.push_back(degrees_[j]);
    const Cone image(rank_, gens);
    std::map<IntVector, bool> member;
    auto inside = [&](const IntVector& v) {
      auto it = member.find(v);
      if (it != member.end()) return it->second;
      const bool in = image.contains(v);
      member.emplace(v, in);
      return in;
    };
    for (const Cone& tau : phi_.cones) {
      bool ok = true;
      for (const IntVector& g : tau.rays())
        if (!inside(g)) {
          ok = false;
          break;
        }
      for (const IntVector& l : tau.lineality()) {
        if (!ok) break;
        IntVector neg = l;
        for (Integer& x : neg) x = -x;
        ok = inside(l) && inside(neg);
      }
      if (!ok) continue;
      if (mode_ == ComprisesMode::Containment) return true;
      IntVector x(rank_, Integer(0));
      for (const IntVector& g : tau.rays())
        for (std::size_t k = 0; k < rank_; ++k) x[k] += g[k];
      if (image.relint_contains(x)) return true;
    }
    return false;
  }

 private:
  std::vector<IntVector> degrees_;
  const Bunch& phi_;
  ComprisesMode mode_;
  std::size_t rank_;
};

bool meets_tropical(const IntMatrix& p, Mask delta0, const Fan& trop) {
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < p.cols(); ++j)
    if (delta0 >> j & 1U) gens.push_back(p.column(j));
  const Cone image(p.rows(), gens);
  return std::any_of(trop.cones.begin(), trop.cones.end(),
                     [&](const Cone& lambda) { return image.relint_meets(lambda); });
}

// Keeps only cones not contained in another one; equal cones collapse.
std::vector<Cone> maximal_cones(std::vector<Cone> cones) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cones.size() && !dominated; ++j) {
      if (i == j || !cones[j].contains(cones[i])) continue;
      // cones[i] is inside cones[j]: drop it unless they are equal and i comes first
      dominated = !cones[i].contains(cones[j]) || j < i;
    }
    if (!dominated) out.push_back(cones[i]);
  }
  return out;
}

Fan fan_from_sets(const IntMatrix& p, const std::vector<Mask>& sets) {
  std::vector<Mask> maximal;
  for (Mask a : sets) {
    bool inside = false;
    for (Mask b : sets)
      if (a != b && (a & b) == a) {
        inside = true;
        break;
      }
    if (!inside) maximal.push_back(a);
  }
  std::vector<Cone> cones;
  for (Mask a : maximal) {
    std::vector<IntVector> gens;
    for (std::size_t j : mask_indices(a, p.cols())) gens.push_back(p.column(j));
    cones.push_back(Cone(p.rows(), gens).reduced());
  }
  return Fan{p.rows(), maximal_cones(std::move(cones))};
}

std::vector<Mask> enumerate(const IntMatrix& p, const Bunch& phi, const FanOptions& options,
                            const Fan* trop) {
  check_cap(p.cols(), options);
  const ComprisesTest comprises(p, phi, options.comprises);
  std::vector<Mask> out;
  const Mask end = Mask{1} << p.cols();
  for (Mask delta0 = 0; delta0 < end; ++delta0) {
    if (!comprises(delta0)) continue;
    if (trop && !meets_tropical(p, delta0, *trop)) continue;
    out.push_back(delta0);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> admissible_faces(const C1Data& data, const Bunch& phi,
                                                       const FanOptions& options) {
  const IntMatrix p = build_p(data);
  const Fan trop = tropical_fan(data);
  std::vector<std::vector<std::size_t>> out;
  for (Mask m : enumerate(p, phi, options, &trop)) out.push_back(mask_indices(m, p.cols()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Fan ambient_fan(const C1Data& data, const Bunch& phi, const FanOptions& options) {
  const IntMatrix p = build_p(data);
  const Fan trop = tropical_fan(data);
  return fan_from_sets(p, enumerate(p, phi, options, &trop));
}

Fan refine_with_tropical(const Fan& sigma, const Fan& trop) {
  if (sigma.ambient_dim != trop.ambient_dim)
    throw Error(ErrorKind::InvalidArgument, "fans live in different ambient spaces");
  std::vector<Cone> pieces;
  for (const Cone& s : sigma.cones)
    for (const Cone& l : trop.cones) pieces.push_back(s.intersection(l).reduced());
  return Fan{sigma.ambient_dim, maximal_cones(std::move(pieces))};
}

namespace {

Integer det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

std::vector<IntVector> hirzebruch_jung_2d(const IntVector& a_in, const IntVector& b_in) {
  if (a_in.size() != 2 || b_in.size() != 2)
    throw Error(ErrorKind::InvalidArgument, "expected vectors in Z^2");
  if (is_zero(a_in) || is_zero(b_in) || det2(a_in, b_in) == 0)
    throw Error(ErrorKind::DegenerateCone, "the generators are proportional");
  IntVector a = primitive(a_in);
  IntVector b = primitive(b_in);
  if (det2(a, b) < 0) {
    std::vector<IntVector> out = hirzebruch_jung_2d(b, a);
    std::reverse(out.begin(), out.end());
    return out;
  }
  std::vector<IntVector> out;
  IntVector u = a;
  while (true) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), u[0].get_mpz_t(), u[1].get_mpz_t());
    IntVector x{-t, s};  // det(u, x) = 1
    const Integer n = det2(u, b);
    Integer k;
    const Integer neg = -det2(x, b);
    mpz_cdiv_q(k.get_mpz_t(), neg.get_mpz_t(), n.get_mpz_t());
    x[0] += k * u[0];
    x[1] += k * u[1];
    if (det2(x, b) == 0) break;
    out.push_back(x);
    u = x;
  }
  return out;
}

std::vector<IntVector> hirzebruch_jung(const IntVector& a, const IntVector& b,
                                       std::vector<IntVector> plane_basis) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  if (rank(std::vector<IntVector>{a, b}) < 2)
    throw Error(ErrorKind::DegenerateCone, "the generators are proportional");
  if (plane_basis.empty()) plane_basis = saturation_basis({a, b});
  const IntVector ca = lattice_coordinates(a, plane_basis);
  const IntVector cb = lattice_coordinates(b, plane_basis);
  std::vector<IntVector> out;
  for (const IntVector& c : hirzebruch_jung_2d(ca, cb)) {
    IntVector v(a.size(), Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = c[0] * plane_basis[0][i] + c[1] * plane_basis[1][i];
    out.push_back(std::move(v));
  }
  return out;
}

Fan regular_subdivision(const Fan& sigma_prime) {
  Fan out{sigma_prime.ambient_dim, {}};
  for (const Cone& c : sigma_prime.cones) {
    if (!c.lineality().empty())
      throw Error(ErrorKind::UnsupportedDimension, "cone with lineality " + c.to_string());
    const std::size_t dim = c.dimension();
    if (dim >= 3)
      throw Error(ErrorKind::UnsupportedDimension,
                  "only fans of cones of dimension at most two are subdivided");
    if (dim < 2) {
      out.cones.push_back(c);
      continue;
    }
    const Cone red = c.reduced();
    std::vector<IntVector> chain{red.rays()[0]};
    for (IntVector& v : hirzebruch_jung(red.rays()[0], red.rays()[1])) chain.push_back(std::move(v));
    chain.push_back(red.rays()[1]);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      out.cones.push_back(Cone(out.ambient_dim, {chain[i], chain[i + 1]}));
  }
  return out;
}

Bunch gale_dual_bunch(const IntMatrix& p, const Fan& sigma) {
  const std::vector<IntVector> columns = p.column_list();
  std::map<IntVector, std::size_t> index;
  for (std::size_t j = 0; j < columns.size(); ++j) index.emplace(primitive(columns[j]), j);
  const std::vector<IntVector> rays = sigma.rays();
  for (const IntVector& r : rays)
    if (!index.count(r))
      throw Error(ErrorKind::RayMismatch, "ray " + to_string(r) + " is not a column");
  if (rays.size() != index.size())
    throw Error(ErrorKind::RayMismatch, "some column is not a ray of the fan");

  std::set<std::vector<std::size_t>> faces{{}};
  for (const Cone& c : sigma.cones) {
    for (const auto& face : c.faces()) {
      std::vector<std::size_t> cols;
      for (std::size_t k : face) cols.push_back(index.at(c.rays()[k]));
      std::sort(cols.begin(), cols.end());
      faces.insert(std::move(cols));
    }
  }
  const std::vector<IntVector> degrees = column_degrees(p);
  const std::size_t rank = cokernel(p.transpose()).target().free_rank;
  Bunch bunch{rank, {}};
  std::set<std::vector<IntVector>> seen;
  for (const auto& face : faces) {
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < columns.size(); ++j)
      if (!std::binary_search(face.begin(), face.end(), j)) gens.push_back(degrees[j]);
    Cone tau(rank, gens);
    if (seen.insert(tau.rays()).second) bunch.cones.push_back(std::move(tau));
  }
  return bunch;
}

Fan gale_dual_fan(const IntMatrix& p, const Bunch& phi, const FanOptions& options) {
  return fan_from_sets(p, enumerate(p, phi, options, nullptr));
}

}  // namespace c1cox
