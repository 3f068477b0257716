#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "softgrp/coxeter.hpp"

namespace softgrp {

/// A parameter of a soft set: a symbolic label, a signed composition, a
/// bi-partition, or a tuple of parameters (the parameters of soft products).
/// Equality and ordering are structural.
class Parameter {
 public:
  using Tuple = std::vector<Parameter>;

  Parameter(std::string label) : value_(std::move(label)) {}  // NOLINT(google-explicit-constructor)
  Parameter(const char* label) : value_(std::string(label)) {}  // NOLINT(google-explicit-constructor)
  Parameter(SignedComposition a) : value_(std::move(a)) {}      // NOLINT(google-explicit-constructor)
  Parameter(BiPartition mu) : value_(std::move(mu)) {}          // NOLINT(google-explicit-constructor)

  static Parameter tuple(Tuple items);

  const std::string* label() const { return std::get_if<std::string>(&value_); }
  const SignedComposition* composition() const { return std::get_if<SignedComposition>(&value_); }
  const BiPartition* bipartition() const { return std::get_if<BiPartition>(&value_); }
  const Tuple* items() const { return std::get_if<Tuple>(&value_); }

  std::string to_string() const;

  friend bool operator==(const Parameter& a, const Parameter& b);
  friend std::strong_ordering operator<=>(const Parameter& a, const Parameter& b);

 private:
  struct TupleTag {};
  Parameter(TupleTag, Tuple items) : value_(std::move(items)) {}

  std::variant<std::string, SignedComposition, BiPartition, Tuple> value_;
};

}  // namespace softgrp
