#include "softgrp/bn_example.hpp"

#include "softgrp/coxeter.hpp"
#include "softgrp/error.hpp"

namespace softgrp {

namespace {

void check_degree(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
}

}  // namespace

SoftGroup bipartition_soft_group(int n) {
  check_degree(n);
  std::vector<Parameter> params;
  std::vector<ElementSet> assign;
  for (auto& mu : enumerate_bipartitions(n)) {
    assign.push_back(reflection_subgroup(hat(mu)).elements());
    params.emplace_back(std::move(mu));
  }
  return SoftGroup::make(hyperoctahedral_group(n), std::move(params), std::move(assign));
}

SoftGroup composition_soft_group(int n) {
  check_degree(n);
  std::vector<Parameter> params;
  std::vector<ElementSet> assign;
  for (auto& a : enumerate_signed_compositions(n)) {
    assign.push_back(reflection_subgroup(hat(lambda_map(a))).elements());
    params.emplace_back(std::move(a));
  }
  return SoftGroup::make(hyperoctahedral_group(n), std::move(params), std::move(assign));
}

SoftHom lambda_soft_hom(int n) {
  const SoftGroup source = composition_soft_group(n);
  const SoftGroup target = bipartition_soft_group(n);
  return make_soft_hom(source, target, GroupHom::identity(source.carrier()),
                       [](const Parameter& a) { return Parameter(lambda_map(*a.composition())); });
}

}  // namespace softgrp
