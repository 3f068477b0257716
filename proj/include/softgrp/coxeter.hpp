#pragma once

#include <compare>
#include <string>
#include <vector>

#include "softgrp/signed_perm_group.hpp"

namespace softgrp {

/// A finite sequence of nonzero integers (a_1, ..., a_k); its weight is the
/// sum of |a_i|.
class SignedComposition {
 public:
  /// Throws Error(InvalidArgument) on an empty sequence or a zero part.
  explicit SignedComposition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept;
  std::string to_string() const;

  friend bool operator==(const SignedComposition&, const SignedComposition&) = default;
  friend auto operator<=>(const SignedComposition&, const SignedComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// A pair of partitions (plus; minus), each stored weakly decreasing with
/// positive entries. Weight 0 (both empty) is allowed.
class BiPartition {
 public:
  /// Throws Error(InvalidArgument) unless both sides are weakly decreasing
  /// sequences of positive integers.
  BiPartition(std::vector<int> plus, std::vector<int> minus);

  const std::vector<int>& plus() const noexcept { return plus_; }
  const std::vector<int>& minus() const noexcept { return minus_; }
  int weight() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BiPartition&, const BiPartition&) = default;
  friend auto operator<=>(const BiPartition&, const BiPartition&) = default;

 private:
  std::vector<int> plus_;
  std::vector<int> minus_;
};

/// Partitions of n, largest parts first: (n), (n-1,1), ..., (1,...,1).
std::vector<std::vector<int>> enumerate_partitions(int n);

/// SC(n), n >= 1. Order: depth-first on parts, where a part of larger
/// absolute value comes first and +a precedes -a. For n = 2 this gives
/// (2), (-2), (1,1), (1,-1), (-1,1), (-1,-1).
std::vector<SignedComposition> enumerate_signed_compositions(int n);

/// BP(n), n >= 0. Order: |plus| descending, then plus and minus each in
/// partition order (largest parts first).
std::vector<BiPartition> enumerate_bipartitions(int n);

/// Sorted positive parts; sorted absolute values of the negative parts.
BiPartition lambda_map(const SignedComposition& composition);

/// plus parts followed by negated minus parts. Throws for weight 0.
SignedComposition hat(const BiPartition& mu);

/// R_A: r_p for every p strictly inside a block, and v at the first position
/// of every block with a positive part. Sorted, at degree |A|.
std::vector<SignedPermutation> reflection_generators(const SignedComposition& composition);

/// W_A, the closure of R_A in degree |A|.
FiniteGroup reflection_subgroup(const SignedComposition& composition);

/// R'_n = {r_1, ..., r_{n-1}, v_1, ..., v_n}, sorted.
std::vector<SignedPermutation> reflection_superset(int degree);

}  // namespace softgrp
