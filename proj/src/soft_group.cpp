#include "softgrp/soft_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "softgrp/error.hpp"

namespace softgrp {

// ---------------------------------------------------------------------------
// Parameter

Parameter Parameter::tuple(Tuple items) { return Parameter(TupleTag{}, std::move(items)); }

std::string Parameter::to_string() const {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const SignedComposition& a) const { return a.to_string(); }
    std::string operator()(const BiPartition& mu) const { return mu.to_string(); }
    std::string operator()(const Tuple& t) const {
      std::string out = "<";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += t[i].to_string();
      }
      return out + ">";
    }
  };
  return std::visit(Visitor{}, value_);
}

bool operator==(const Parameter& a, const Parameter& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Parameter& a, const Parameter& b) {
  if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
  if (auto* s = a.label()) {
    return s->compare(*b.label()) <=> 0;
  }
  if (auto* x = a.composition()) return *x <=> *b.composition();
  if (auto* x = a.bipartition()) return *x <=> *b.bipartition();
  const auto& ta = *a.items();
  const auto& tb = *b.items();
  return std::lexicographical_compare_three_way(ta.begin(), ta.end(), tb.begin(), tb.end());
}

// ---------------------------------------------------------------------------
// SoftGroup

namespace {

std::string describe(const ElementSet& set) {
  constexpr std::size_t kShown = 8;
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size() && i < kShown; ++i) {
    if (i) os << ", ";
    os << set[i].to_string();
  }
  if (set.size() > kShown) os << ", ...";
  os << "} (order " << set.size() << ')';
  return os.str();
}

}  // namespace

SoftGroup SoftGroup::make(FiniteGroup carrier, std::vector<Parameter> params,
                          std::vector<ElementSet> assign) {
  if (assign.size() != params.size()) {
    throw Error(ErrorCode::InvalidArgument, "assignment is not total on the parameters");
  }
  auto data = std::make_shared<Data>();
  data->sorted_index.resize(params.size());
  std::iota(data->sorted_index.begin(), data->sorted_index.end(), 0u);
  std::sort(data->sorted_index.begin(), data->sorted_index.end(),
            [&](std::size_t i, std::size_t j) { return params[i] < params[j]; });
  for (std::size_t k = 1; k < params.size(); ++k) {
    const auto& a = params[data->sorted_index[k - 1]];
    if (a == params[data->sorted_index[k]]) {
      throw Error(ErrorCode::InvalidArgument, "duplicate parameter " + a.to_string());
    }
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    normalize(assign[i]);
    bool ok = false;
    try {
      ok = is_subgroup(assign[i], carrier);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotSubgroup,
                  "value at parameter " + params[i].to_string() + ": " + e.what());
    }
    if (!ok) {
      throw Error(ErrorCode::NotSubgroup, "value at parameter " + params[i].to_string() +
                                              " is not a subgroup: " + describe(assign[i]));
    }
  }
  data->carrier = std::move(carrier);
  data->params = std::move(params);
  data->assign = std::move(assign);
  return SoftGroup(std::move(data));
}

SoftGroup SoftGroup::from_generators(
    FiniteGroup carrier, std::vector<Parameter> params,
    const std::vector<std::vector<SignedPermutation>>& generators) {
  if (generators.size() != params.size()) {
    throw Error(ErrorCode::InvalidArgument, "assignment is not total on the parameters");
  }
  std::vector<ElementSet> assign;
  for (std::size_t i = 0; i < params.size(); ++i) {
    try {
      assign.push_back(subgroup_closure(carrier, generators[i]));
    } catch (const Error& e) {
      throw Error(ErrorCode::NotSubgroup,
                  "value at parameter " + params[i].to_string() + ": " + e.what());
    }
  }
  return make(std::move(carrier), std::move(params), std::move(assign));
}

std::optional<std::size_t> SoftGroup::index_of(const Parameter& a) const {
  const auto& idx = data_->sorted_index;
  const auto& ps = data_->params;
  auto it = std::lower_bound(idx.begin(), idx.end(), a,
                             [&](std::size_t i, const Parameter& x) { return ps[i] < x; });
  if (it == idx.end() || ps[*it] != a) return std::nullopt;
  return *it;
}

const ElementSet& SoftGroup::assigned(const Parameter& a) const {
  auto i = index_of(a);
  if (!i) throw Error(ErrorCode::InvalidArgument, "unknown parameter " + a.to_string());
  return data_->assign[*i];
}

bool operator==(const SoftGroup& a, const SoftGroup& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->params == b.data_->params && a.data_->assign == b.data_->assign &&
         a.data_->carrier == b.data_->carrier;
}

SoftGroup make_soft_group(FiniteGroup carrier, std::vector<Parameter> params,
                          std::vector<ElementSet> assign) {
  return SoftGroup::make(std::move(carrier), std::move(params), std::move(assign));
}

bool is_trivial(const SoftGroup& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.assigned(i).size() != 1) return false;
  }
  return true;
}

bool is_completely_soft(const SoftGroup& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.assigned(i).size() != s.carrier().order()) return false;
  }
  return true;
}

bool is_soft_subset(const SoftGroup& s, const SoftGroup& t) {
  if (!(s.carrier() == t.carrier())) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto j = t.index_of(s.params()[i]);
    if (!j || s.assigned(i) != t.assigned(*j)) return false;
  }
  return true;
}

SoftGroup restrict_params(const SoftGroup& s, std::span<const std::size_t> indices) {
  std::vector<Parameter> params;
  std::vector<ElementSet> assign;
  for (auto i : indices) {
    params.push_back(s.params().at(i));
    assign.push_back(s.assigned(i));
  }
  return SoftGroup::make(s.carrier(), std::move(params), std::move(assign));
}

// ---------------------------------------------------------------------------
// SoftHom

SoftHom SoftHom::make(SoftGroup source, SoftGroup target, GroupHom f,
                      std::vector<std::size_t> param_map) {
  if (!(f.domain() == source.carrier()) || !(f.codomain() == target.carrier())) {
    throw Error(ErrorCode::NotComposable, "group map does not run between the carriers");
  }
  if (param_map.size() != source.size()) {
    throw Error(ErrorCode::InvalidArgument, "parameter map is not total");
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (param_map[i] >= target.size()) {
      throw Error(ErrorCode::InvalidArgument, "parameter map leaves the target parameters");
    }
    const ElementSet lhs = f.image_of(source.assigned(i));
    const ElementSet& rhs = target.assigned(param_map[i]);
    if (lhs != rhs) {
      throw Error(ErrorCode::DiagramViolation,
                  "diagram violation at " + source.params()[i].to_string() +
                      ": f^(F(a)) = " + describe(lhs) + " but H(p(a)) = H(" +
                      target.params()[param_map[i]].to_string() + ") = " + describe(rhs));
    }
  }
  return SoftHom(std::move(source), std::move(target), std::move(f), std::move(param_map));
}

SoftHom SoftHom::unit(const SoftGroup& s) {
  std::vector<std::size_t> p(s.size());
  std::iota(p.begin(), p.end(), 0u);
  return make(s, s, GroupHom::identity(s.carrier()), std::move(p));
}

bool SoftHom::param_injective() const {
  auto p = p_;
  std::sort(p.begin(), p.end());
  return std::adjacent_find(p.begin(), p.end()) == p.end();
}

bool SoftHom::param_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (auto j : p_) hit[j] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool operator==(const SoftHom& a, const SoftHom& b) {
  return a.p_ == b.p_ && a.f_ == b.f_ && a.source_ == b.source_ && a.target_ == b.target_;
}

SoftHom make_soft_hom(SoftGroup source, SoftGroup target, GroupHom f,
                      std::vector<std::size_t> param_map) {
  return SoftHom::make(std::move(source), std::move(target), std::move(f), std::move(param_map));
}

SoftHom make_soft_hom(SoftGroup source, SoftGroup target, GroupHom f,
                      const std::function<Parameter(const Parameter&)>& param_map) {
  std::vector<std::size_t> p;
  for (const auto& a : source.params()) {
    const Parameter b = param_map(a);
    auto j = target.index_of(b);
    if (!j) {
      throw Error(ErrorCode::InvalidArgument,
                  "parameter map sends " + a.to_string() + " to unknown " + b.to_string());
    }
    p.push_back(*j);
  }
  return SoftHom::make(std::move(source), std::move(target), std::move(f), std::move(p));
}

SoftHom compose_soft_homs(const SoftHom& second, const SoftHom& first) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorCode::NotComposable, "target of the first morphism is not the source of the second");
  }
  std::vector<std::size_t> p;
  p.reserve(first.param_map().size());
  for (auto j : first.param_map()) p.push_back(second.param_map()[j]);
  return SoftHom::make(first.source(), second.target(), compose(second.f(), first.f()),
                       std::move(p));
}

bool is_isomorphism(const SoftHom& h) {
  return h.f().is_injective() && h.f().is_surjective() && h.param_injective() &&
         h.param_surjective();
}

// ---------------------------------------------------------------------------
// Soft products

SoftProduct soft_product(std::span<const SoftGroup> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "soft product of no factors");
  std::vector<FiniteGroup> carriers;
  for (const auto& s : factors) carriers.push_back(s.carrier());
  DirectProduct carrier = direct_product(carriers);

  std::vector<Parameter> params;
  std::vector<ElementSet> assign;
  std::vector<std::size_t> digit(factors.size(), 0);
  const bool any_empty = std::any_of(factors.begin(), factors.end(),
                                     [](const SoftGroup& s) { return s.size() == 0; });
  bool more = !any_empty;
  while (more) {
    Parameter::Tuple tuple;
    for (std::size_t k = 0; k < factors.size(); ++k) tuple.push_back(factors[k].params()[digit[k]]);
    params.push_back(Parameter::tuple(std::move(tuple)));

    // Cartesian product of the assigned subgroups, joined block-wise.
    ElementSet value;
    std::vector<std::size_t> inner(factors.size(), 0);
    bool inner_more = true;
    while (inner_more) {
      std::vector<SignedPermutation> blocks;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        blocks.push_back(factors[k].assigned(digit[k])[inner[k]]);
      }
      value.push_back(join_blocks(blocks));
      inner_more = false;
      for (std::size_t k = factors.size(); k-- > 0;) {
        if (++inner[k] < factors[k].assigned(digit[k]).size()) {
          inner_more = true;
          break;
        }
        inner[k] = 0;
      }
    }
    assign.push_back(std::move(value));

    more = false;
    for (std::size_t k = factors.size(); k-- > 0;) {
      if (++digit[k] < factors[k].size()) {
        more = true;
        break;
      }
      digit[k] = 0;
    }
  }
  SoftGroup object = SoftGroup::make(carrier.group, std::move(params), std::move(assign));
  return SoftProduct{std::move(object), std::move(carrier)};
}

SoftProduct soft_product(const SoftGroup& first, const SoftGroup& second) {
  const SoftGroup factors[] = {first, second};
  return soft_product(factors);
}

// ---------------------------------------------------------------------------
// Soft kernels

std::optional<SoftKernel> soft_kernel(const SoftHom& h) {
  const FiniteGroup ker = kernel(h.f());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < h.source().size(); ++i) {
    if (h.source().assigned(i) == ker.elements()) kept.push_back(i);
  }
  if (kept.empty()) return std::nullopt;

  std::vector<Parameter> params;
  std::vector<ElementSet> assign;
  for (auto i : kept) {
    params.push_back(h.source().params()[i]);
    assign.push_back(ker.elements());
  }
  SoftGroup object = SoftGroup::make(ker, std::move(params), std::move(assign));
  SoftHom inclusion =
      SoftHom::make(object, h.source(), GroupHom::inclusion(ker, h.source().carrier()), kept);
  return SoftKernel{std::move(object), std::move(inclusion)};
}

KernelInjectivityReport soft_kernel_is_trivial_iff_injective(const SoftHom& h) {
  auto k = soft_kernel(h);
  if (!k) {
    throw Error(ErrorCode::KernelUndefined, "no parameter is assigned the kernel of f");
  }
  KernelInjectivityReport report;
  report.injective = kernel(h.f()).order() == 1;
  report.trivial = is_trivial(k->object);
  return report;
}

}  // namespace softgrp
