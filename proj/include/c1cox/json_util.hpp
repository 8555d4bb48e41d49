#pragma once

#include <json.hpp>

#include "c1cox/lattice.hpp"

namespace c1cox {

struct Fan;
struct Bunch;

using Json = nlohmann::ordered_json;

/// Integers that fit a long are JSON numbers, larger ones decimal strings.
Json json_integer(const Integer& x);
/// Rationals are always strings ("3", "-1/2").
Json json_rational(const Rational& x);
Json json_vector(std::span<const Integer> v);
/// Row-major nested array.
Json json_matrix(const IntMatrix& m);
Json json_fan(const Fan& fan);
Json json_bunch(const Bunch& bunch);

}  // namespace c1cox
