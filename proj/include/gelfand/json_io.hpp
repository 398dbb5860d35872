#pragma once

#include <json.hpp>

#include "gelfand/linalg.hpp"
#include "gelfand/model.hpp"
#include "gelfand/polymodel.hpp"

namespace gelfand {

using Json = nlohmann::ordered_json;

/// {"signs":[1,-1,...],"perm":[2,1,...]} with 1-based images.
Json to_json(const SignedPermutation& u);
SignedPermutation signed_permutation_from_json(const Json& j);

/// Integral rationals serialize as JSON numbers, others as "p/q" strings.
Json to_json(const Rational& q);

/// [{"tau":...,"coeff":"p/q"}] in canonical key order.
Json to_json(const ModelVector& v);

/// {"n":n,"terms":[{"coeff":...,"exp":[...]}]} sorted graded-lex descending.
Json to_json(const Polynomial& p);

/// {"monomials":[[...]...],"rows":[[...]...]}.
Json to_json(const SubspaceBasis& s);

Json to_json(const GroupType& t);

}  // namespace gelfand
