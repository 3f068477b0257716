#pragma once

#include "json.hpp"
#include "softgrp/category.hpp"
#include "softgrp/coxeter.hpp"
#include "softgrp/soft_group.hpp"

namespace softgrp::io {

using nlohmann::json;

// Every *_from_json re-runs the validating constructors. Malformed documents
// raise Error(Parse); well-formed documents that break an invariant raise
// the invariant's own error code.

json to_json(const SignedPermutation& w);
SignedPermutation permutation_from_json(const json& j);

/// {"degree", "generators", "order"}.
json to_json(const FiniteGroup& g);
/// Elements are recomputed from the generators; an "order" field, when
/// present, must match.
FiniteGroup group_from_json(const json& j);

json to_json(const SignedComposition& a);
SignedComposition composition_from_json(const json& j);
json to_json(const BiPartition& mu);
BiPartition bipartition_from_json(const json& j);

/// Labels are strings, signed compositions integer arrays, bi-partitions
/// {"plus", "minus"} objects and tuples {"tuple": [...]}.
json to_json(const Parameter& a);
Parameter parameter_from_json(const json& j);

/// {"carrier", "params", "assign": [{"param", "subgroup_generators"}]}.
/// Loading also accepts "subgroup_elements" in place of generators.
json to_json(const SoftGroup& s);
SoftGroup soft_group_from_json(const json& j);

/// {"source", "target", "f": {"images": [...]}, "p": [{"from", "to"}]}.
/// Loading also accepts "f": {"table": [{"from", "to"}]}.
json to_json(const SoftHom& h);
SoftHom soft_hom_from_json(const json& j);

/// {"property", "holds", "witness", "note", "oracle"}.
json to_json(const MorphismVerdict& v);
MorphismVerdict verdict_from_json(const json& j);

}  // namespace softgrp::io
