#include "c1cox/json_util.hpp"

#include "c1cox/fan.hpp"

namespace c1cox {

Json json_integer(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json json_rational(const Rational& x) { return Json(x.get_str()); }

Json json_vector(std::span<const Integer> v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(json_integer(x));
  return out;
}

Json json_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_vector(m.row(i)));
  return out;
}

Json json_fan(const Fan& fan) {
  Json out;
  out["ambient_dim"] = fan.ambient_dim;
  Json rays = Json::array();
  const std::vector<IntVector> all = fan.rays();
  for (const IntVector& r : all) rays.push_back(json_vector(r));
  out["rays"] = std::move(rays);
  std::vector<std::pair<std::vector<std::size_t>, const Cone*>> cones;
  for (const Cone& c : fan.cones) {
    std::vector<std::size_t> idx;
    for (const IntVector& r : c.rays())
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(all.begin(), all.end(), r) - all.begin()));
    std::sort(idx.begin(), idx.end());
    cones.emplace_back(std::move(idx), &c);
  }
  std::sort(cones.begin(), cones.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->lineality() < b.second->lineality();
  });
  Json list = Json::array();
  bool any_lineality = false;
  for (const auto& [idx, cone] : cones) {
    list.push_back(idx);
    any_lineality = any_lineality || !cone->lineality().empty();
  }
  out["cones"] = std::move(list);
  if (any_lineality) {
    Json lin = Json::array();
    for (const auto& [idx, cone] : cones) {
      Json basis = Json::array();
      for (const IntVector& l : cone->lineality()) basis.push_back(json_vector(l));
      lin.push_back(std::move(basis));
    }
    out["lineality"] = std::move(lin);
  }
  return out;
}

Json json_bunch(const Bunch& bunch) {
  Json out;
  out["rank"] = bunch.rank;
  Json cones = Json::array();
  for (const Cone& c : bunch.cones) {
    Json gens = Json::array();
    for (const IntVector& r : c.rays()) gens.push_back(json_vector(r));
    cones.push_back(std::move(gens));
  }
  out["cones"] = std::move(cones);
  return out;
}

}  // namespace c1cox
