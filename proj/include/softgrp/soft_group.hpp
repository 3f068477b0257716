#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "softgrp/parameter.hpp"
#include "softgrp/signed_perm_group.hpp"

namespace softgrp {

/// (F, A)_G: a parameter list A and an assignment of a subgroup of the
/// carrier G to every parameter. Immutable; copies share storage.
class SoftGroup {
 public:
  /// Validates the soft-group condition. Throws Error(NotSubgroup) naming the
  /// first offending parameter, or Error(InvalidArgument) on duplicate
  /// parameters or a non-total assignment.
  static SoftGroup make(FiniteGroup carrier, std::vector<Parameter> params,
                        std::vector<ElementSet> assign);

  /// Assigns the subgroup generated by each generator list.
  static SoftGroup from_generators(FiniteGroup carrier, std::vector<Parameter> params,
                                   const std::vector<std::vector<SignedPermutation>>& generators);

  const FiniteGroup& carrier() const noexcept { return data_->carrier; }
  const std::vector<Parameter>& params() const noexcept { return data_->params; }
  std::size_t size() const noexcept { return data_->params.size(); }
  const ElementSet& assigned(std::size_t index) const { return data_->assign[index]; }
  const ElementSet& assigned(const Parameter& a) const;
  std::optional<std::size_t> index_of(const Parameter& a) const;

  friend bool operator==(const SoftGroup& a, const SoftGroup& b);

 private:
  struct Data {
    FiniteGroup carrier = FiniteGroup::trivial();
    std::vector<Parameter> params;
    std::vector<ElementSet> assign;
    std::vector<std::size_t> sorted_index;  // params indices in parameter order
  };
  explicit SoftGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

SoftGroup make_soft_group(FiniteGroup carrier, std::vector<Parameter> params,
                          std::vector<ElementSet> assign);

bool is_trivial(const SoftGroup& s);
bool is_completely_soft(const SoftGroup& s);

/// S is a soft subset of T: same carrier, S.params within T.params, and equal
/// assigned subgroups on every parameter of S.
bool is_soft_subset(const SoftGroup& s, const SoftGroup& t);

/// Restriction of S to the parameters at `indices` (kept in the given order).
SoftGroup restrict_params(const SoftGroup& s, std::span<const std::size_t> indices);

/// A soft group homomorphism (f, p): f on carriers and p on parameters,
/// stored as target parameter indices.
class SoftHom {
 public:
  /// Validates f-hat(F(a)) = H(p(a)) for every parameter. Throws
  /// Error(DiagramViolation) at the first failing parameter, printing both
  /// sides; Error(NotComposable) if f does not run between the carriers.
  static SoftHom make(SoftGroup source, SoftGroup target, GroupHom f,
                      std::vector<std::size_t> param_map);

  /// (1_G, 1_A).
  static SoftHom unit(const SoftGroup& s);

  const SoftGroup& source() const noexcept { return source_; }
  const SoftGroup& target() const noexcept { return target_; }
  const GroupHom& f() const noexcept { return f_; }
  const std::vector<std::size_t>& param_map() const noexcept { return p_; }
  const Parameter& map_param(std::size_t source_index) const {
    return target_.params()[p_[source_index]];
  }

  bool param_injective() const;
  bool param_surjective() const;

  /// Component-wise: same endpoints, f tables equal, p maps equal.
  friend bool operator==(const SoftHom& a, const SoftHom& b);

 private:
  SoftHom(SoftGroup source, SoftGroup target, GroupHom f, std::vector<std::size_t> p)
      : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)), p_(std::move(p)) {}

  SoftGroup source_;
  SoftGroup target_;
  GroupHom f_;
  std::vector<std::size_t> p_;
};

SoftHom make_soft_hom(SoftGroup source, SoftGroup target, GroupHom f,
                      std::vector<std::size_t> param_map);

/// Parameter map given as a function; every image must be a target parameter.
SoftHom make_soft_hom(SoftGroup source, SoftGroup target, GroupHom f,
                      const std::function<Parameter(const Parameter&)>& param_map);

/// (f2 . f1, p2 . p1). Throws Error(NotComposable) unless first.target() ==
/// second.source().
SoftHom compose_soft_homs(const SoftHom& second, const SoftHom& first);

bool is_isomorphism(const SoftHom& h);

/// The soft product together with the underlying direct product of carriers.
struct SoftProduct {
  SoftGroup object;
  DirectProduct carrier;
};

/// Parameters are flat tuples (x_1, ..., x_n) in row-major order; each is
/// assigned F_1(x_1) x ... x F_n(x_n) embedded block-wise.
SoftProduct soft_product(std::span<const SoftGroup> factors);
SoftProduct soft_product(const SoftGroup& first, const SoftGroup& second);

/// Restriction of the source to A' = {x : F(x) = Ker f}, carried by Ker f,
/// with its inclusion morphism into the source.
struct SoftKernel {
  SoftGroup object;
  SoftHom inclusion;
};

/// std::nullopt when no parameter is assigned Ker f (the kernel is undefined).
std::optional<SoftKernel> soft_kernel(const SoftHom& h);

struct KernelInjectivityReport {
  bool injective = false;  // |Ker f| == 1
  bool trivial = false;    // the soft kernel is a trivial soft group
  bool agree() const { return injective == trivial; }
};

/// Throws Error(KernelUndefined) when the soft kernel does not exist.
KernelInjectivityReport soft_kernel_is_trivial_iff_injective(const SoftHom& h);

}  // namespace softgrp
