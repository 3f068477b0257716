#pragma once

// Test-side generators and oracles. Oracles here deliberately avoid the
// library's own algorithms (closure, enumeration order, formulas) so that
// they can disagree with it.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "softgrp/category.hpp"
#include "softgrp/soft_group.hpp"

namespace testing {

using softgrp::SignedPermutation;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(engine_() % k); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& items) { return items[below(items.size())]; }

 private:
  std::mt19937_64 engine_;
};

// All 2^n n! windows, built from permutations and sign vectors.
inline std::vector<SignedPermutation> brute_force_signed_perms(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w(perm);
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) w[i] = -w[i];
      }
      out.emplace_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline SignedPermutation random_signed_perm(Rng& rng, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(w[i], w[rng.below(i + 1)]);
  for (auto& x : w) {
    if (rng.coin()) x = -x;
  }
  return SignedPermutation(w);
}

// Subgroup check by definition, using only compose and inverse.
inline bool is_closed_set(const std::vector<SignedPermutation>& set) {
  std::set<SignedPermutation> s(set.begin(), set.end());
  if (s.empty()) return false;
  if (!s.count(SignedPermutation::identity(set.front().degree()))) return false;
  for (const auto& a : s) {
    if (!s.count(a.inverse())) return false;
    for (const auto& b : s) {
      if (!s.count(softgrp::compose(a, b))) return false;
    }
  }
  return true;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Number of partitions of k by the standard recurrence on the largest part.
inline long long partition_count(int k, int largest) {
  if (k == 0) return 1;
  long long total = 0;
  for (int part = std::min(k, largest); part >= 1; --part) total += partition_count(k - part, part);
  return total;
}
inline long long partition_count(int k) { return partition_count(k, k); }

// Sum_k p(k) p(n - k).
inline long long bipartition_count(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
  return total;
}

// Every integer sequence with nonzero entries in [-n, n] and |.|-sum n,
// found by scanning all sequences of length <= n over that alphabet.
inline std::set<std::vector<int>> brute_force_signed_compositions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> alphabet;
  for (int a = -n; a <= n; ++a) {
    if (a != 0) alphabet.push_back(a);
  }
  for (int len = 1; len <= n; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<int> seq;
      int weight = 0;
      for (auto i : idx) {
        seq.push_back(alphabet[i]);
        weight += std::abs(alphabet[i]);
      }
      if (weight == n) out.insert(seq);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == alphabet.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return out;
}

// prod_{a > 0} 2^a a! * prod_{a < 0} |a|!.
inline long long reflection_order_formula(const std::vector<int>& parts) {
  long long total = 1;
  for (int a : parts) total *= a > 0 ? (1LL << a) * factorial(a) : factorial(-a);
  return total;
}

// A random valid soft group over one of the small carriers, with labels
// prefixed by `tag` so that distinct generators give distinct parameters.
inline softgrp::SoftGroup random_soft_group(Rng& rng, std::size_t max_order = 8,
                                            std::size_t max_params = 3) {
  static const auto carriers = softgrp::small_carriers(8);
  std::vector<softgrp::FiniteGroup> eligible;
  for (const auto& g : carriers) {
    if (g.order() <= max_order) eligible.push_back(g);
  }
  const auto& carrier = rng.pick(eligible);
  const auto subgroups = softgrp::all_subgroups(carrier);
  const std::size_t k = 1 + rng.below(max_params);
  std::vector<softgrp::Parameter> params;
  std::vector<softgrp::ElementSet> assign;
  for (std::size_t i = 0; i < k; ++i) {
    params.emplace_back("p" + std::to_string(i + 1));
    assign.push_back(rng.pick(subgroups));
  }
  return softgrp::SoftGroup::make(carrier, std::move(params), std::move(assign));
}

}  // namespace testing
