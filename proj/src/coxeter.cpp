#include "softgrp/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "softgrp/error.hpp"

namespace softgrp {

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

bool is_partition(const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0) return false;
    if (i && xs[i] > xs[i - 1]) return false;
  }
  return true;
}

}  // namespace

SignedComposition::SignedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidArgument, "empty signed composition");
  if (std::find(parts_.begin(), parts_.end(), 0) != parts_.end()) {
    throw Error(ErrorCode::InvalidArgument, "signed composition (" + join_ints(parts_) +
                                                ") has a zero part");
  }
}

int SignedComposition::weight() const noexcept {
  int n = 0;
  for (int a : parts_) n += std::abs(a);
  return n;
}

std::string SignedComposition::to_string() const { return "(" + join_ints(parts_) + ")"; }

BiPartition::BiPartition(std::vector<int> plus, std::vector<int> minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (!is_partition(plus_) || !is_partition(minus_)) {
    throw Error(ErrorCode::InvalidArgument, "bi-partition " + to_string() +
                                                " needs weakly decreasing positive parts");
  }
}

int BiPartition::weight() const noexcept {
  return std::accumulate(plus_.begin(), plus_.end(), 0) +
         std::accumulate(minus_.begin(), minus_.end(), 0);
}

std::string BiPartition::to_string() const {
  return "((" + join_ints(plus_) + ");(" + join_ints(minus_) + "))";
}

std::vector<std::vector<int>> enumerate_partitions(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative partition weight");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<SignedComposition> enumerate_signed_compositions(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "signed compositions need n >= 1");
  std::vector<SignedComposition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int size = remaining; size >= 1; --size) {
      for (int sign : {1, -1}) {
        current.push_back(sign * size);
        rec(remaining - size);
        current.pop_back();
      }
    }
  };
  rec(n);
  return out;
}

std::vector<BiPartition> enumerate_bipartitions(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative bi-partition weight");
  std::vector<BiPartition> out;
  for (int k = n; k >= 0; --k) {
    const auto pluses = enumerate_partitions(k);
    const auto minuses = enumerate_partitions(n - k);
    for (const auto& p : pluses) {
      for (const auto& m : minuses) out.emplace_back(p, m);
    }
  }
  return out;
}

BiPartition lambda_map(const SignedComposition& composition) {
  std::vector<int> plus;
  std::vector<int> minus;
  for (int a : composition.parts()) (a > 0 ? plus : minus).push_back(std::abs(a));
  std::sort(plus.begin(), plus.end(), std::greater<>());
  std::sort(minus.begin(), minus.end(), std::greater<>());
  return BiPartition(std::move(plus), std::move(minus));
}

SignedComposition hat(const BiPartition& mu) {
  if (mu.weight() == 0) throw Error(ErrorCode::InvalidArgument, "hat of the empty bi-partition");
  std::vector<int> parts = mu.plus();
  for (int m : mu.minus()) parts.push_back(-m);
  return SignedComposition(std::move(parts));
}

std::vector<SignedPermutation> reflection_generators(const SignedComposition& composition) {
  const int n = composition.weight();
  std::vector<SignedPermutation> out;
  int start = 0;  // |a_1| + ... + |a_{j-1}|
  for (int a : composition.parts()) {
    const int size = std::abs(a);
    for (int p = start + 1; p < start + size; ++p) out.push_back(standard_generator_r(n, p));
    if (a > 0) out.push_back(standard_generator_v(n, start + 1));
    start += size;
  }
  normalize(out);
  return out;
}

FiniteGroup reflection_subgroup(const SignedComposition& composition) {
  return FiniteGroup::closure(composition.weight(), reflection_generators(composition));
}

std::vector<SignedPermutation> reflection_superset(int degree) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i < degree; ++i) out.push_back(standard_generator_r(degree, i));
  for (int i = 1; i <= degree; ++i) out.push_back(standard_generator_v(degree, i));
  normalize(out);
  return out;
}

}  // namespace softgrp
