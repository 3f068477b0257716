#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace softgrp {

/// A bijection w of {-n..-1, 1..n} with w(-i) = -w(i), stored as its
/// positive window (w(1), ..., w(n)). Windows compare lexicographically,
/// which is the canonical element order used everywhere.
class SignedPermutation {
 public:
  /// Validates that |window| is a permutation of 1..n; throws
  /// Error(InvalidArgument) otherwise.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(window_.size()); }
  std::span<const int> window() const noexcept { return window_; }

  /// Image of a point in {-n..-1, 1..n}.
  int operator()(int point) const;

  SignedPermutation inverse() const;
  bool is_identity() const noexcept;

  /// Smallest k >= 1 with w^k = e.
  int order() const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    return a.window_ <=> b.window_;
  }

 private:
  struct Unchecked {};
  SignedPermutation(Unchecked, std::vector<int> window) : window_(std::move(window)) {}
  friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
  friend SignedPermutation join_blocks(std::span<const SignedPermutation>);

  std::vector<int> window_;
};

/// (u . v)(i) = u(v(i)). Throws Error(DegreeMismatch).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

/// u^k for k >= 0.
SignedPermutation power(const SignedPermutation& u, int k);

/// r_i swaps i and i+1; requires 1 <= i <= n-1.
SignedPermutation standard_generator_r(int degree, int index);

/// v_i negates i; requires 1 <= i <= n.
SignedPermutation standard_generator_v(int degree, int index);

/// Concatenates windows, shifting each block past the previous ones.
SignedPermutation join_blocks(std::span<const SignedPermutation> blocks);

/// Inverse of join_blocks for the given block degrees.
std::vector<SignedPermutation> split_blocks(const SignedPermutation& w,
                                            std::span<const int> degrees);

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<SignedPermutation>;

void normalize(ElementSet& set);

/// An explicit finite group of signed permutations of one degree.
///
/// Elements are kept in canonical (lexicographic) order. The value is
/// immutable and cheap to copy; copies share the element storage.
class FiniteGroup {
 public:
  /// Smallest subgroup of W_degree containing `generators`. The empty
  /// generating set yields {e}.
  static FiniteGroup closure(int degree, std::vector<SignedPermutation> generators);

  /// {e} at the given degree (degree 1 is the canonical trivial group).
  static FiniteGroup trivial(int degree = 1);

  /// Builds a group from an element list that is already known to be a
  /// group; validates closure exhaustively and throws Error(NotSubgroup)
  /// if it is not.
  static FiniteGroup from_elements(int degree, ElementSet elements,
                                   std::vector<SignedPermutation> generators);

  int degree() const noexcept { return data_->degree; }
  std::size_t order() const noexcept { return data_->elements.size(); }
  const ElementSet& elements() const noexcept { return data_->elements; }
  const std::vector<SignedPermutation>& generators() const noexcept {
    return data_->generators;
  }
  const SignedPermutation& element(std::size_t index) const {
    return data_->elements[index];
  }
  SignedPermutation identity() const { return SignedPermutation::identity(degree()); }

  std::optional<std::size_t> index_of(const SignedPermutation& w) const;
  bool contains(const SignedPermutation& w) const { return index_of(w).has_value(); }
  std::size_t identity_index() const noexcept { return data_->identity_index; }

  /// Equality is on degree and element set; generators are ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    int degree = 1;
    ElementSet elements;
    std::vector<SignedPermutation> generators;
    std::size_t identity_index = 0;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// True iff `candidate` contains e and is closed under product and inverse.
/// Throws Error(InvalidArgument) if some element lies outside `ambient`.
bool is_subgroup(const ElementSet& candidate, const FiniteGroup& ambient);

/// The subgroup of `ambient` generated by `generators` (which must lie in it).
ElementSet subgroup_closure(const FiniteGroup& ambient,
                            std::span<const SignedPermutation> generators);

/// Deterministic generating set: scan elements in canonical order, keeping
/// each one not already in the span of those kept.
std::vector<SignedPermutation> greedy_generating_set(const ElementSet& subgroup);

/// Every subgroup of a small group, in canonical order. Intended for groups
/// of order at most a few dozen.
std::vector<ElementSet> all_subgroups(const FiniteGroup& group);

/// A homomorphism between finite groups stored as a full table, indexed by
/// domain element index and holding codomain element indices.
class GroupHom {
 public:
  /// Validates the homomorphism property over all pairs; throws
  /// Error(NotHomomorphism).
  static GroupHom from_table(FiniteGroup domain, FiniteGroup codomain,
                             std::vector<std::uint32_t> table);

  /// Extends generator images multiplicatively (images[i] is the image of
  /// domain.generators()[i]) and validates exhaustively. Throws
  /// Error(NotHomomorphism) when the images are inconsistent.
  static GroupHom from_generator_images(FiniteGroup domain, FiniteGroup codomain,
                                        std::span<const SignedPermutation> images);
  static GroupHom from_generator_images(
      FiniteGroup domain, FiniteGroup codomain,
      const std::map<SignedPermutation, SignedPermutation>& images);

  /// Non-throwing variant used by enumeration. `generators` must generate
  /// the domain; images[i] is the image of generators[i].
  static std::optional<GroupHom> try_from_images(const FiniteGroup& domain,
                                                 const FiniteGroup& codomain,
                                                 std::span<const SignedPermutation> generators,
                                                 std::span<const SignedPermutation> images);

  static GroupHom identity(const FiniteGroup& group);
  static GroupHom trivial(FiniteGroup domain, FiniteGroup codomain);
  /// Inclusion of a subgroup; the domain's elements must lie in `codomain`.
  static GroupHom inclusion(FiniteGroup domain, FiniteGroup codomain);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  SignedPermutation operator()(const SignedPermutation& g) const;
  const SignedPermutation& at_index(std::size_t domain_index) const {
    return codomain_.element(table_[domain_index]);
  }

  /// f-hat: image of a subset of the domain, as a normalized set.
  ElementSet image_of(const ElementSet& subset) const;

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.table_ == b.table_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
  }

 private:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<std::uint32_t> table)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {}
  static bool respects_products(const FiniteGroup& domain, const FiniteGroup& codomain,
                                const std::vector<std::uint32_t>& table);

  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<std::uint32_t> table_;
};

/// second . first. Throws Error(NotComposable) on mismatched groups.
GroupHom compose(const GroupHom& second, const GroupHom& first);

/// {g in domain : h(g) = e} as a group (generated greedily).
FiniteGroup kernel(const GroupHom& h);

/// Direct product of factors laid out on consecutive position blocks.
struct DirectProduct {
  FiniteGroup group;
  std::vector<int> block_degrees;
  std::vector<GroupHom> projections;
  std::vector<GroupHom> embeddings;
};

DirectProduct direct_product(std::span<const FiniteGroup> factors);
DirectProduct direct_product(const FiniteGroup& first, const FiniteGroup& second);

/// W_n = <r_1, ..., r_{n-1}, v_1>, n >= 1.
FiniteGroup hyperoctahedral_group(int degree);

/// S_n = <r_1, ..., r_{n-1}> inside W_n.
FiniteGroup symmetric_group(int degree);

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

/// Evaluates every defining relation of the type-B presentation on the
/// standard generators at degree n, plus v_i = r_{i-1} v_{i-1} r_{i-1}.
std::vector<RelationCheck> check_presentation(int degree);

}  // namespace softgrp
