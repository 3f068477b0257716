#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softgrp/soft_group.hpp"

namespace softgrp {

/// Desk-scale guardrails for brute-force enumeration.
struct Bounds {
  std::size_t max_order = 16;           // source carrier order for hom enumeration
  std::size_t max_params = 8;           // source parameter count for hom enumeration
  std::size_t max_candidates = 1u << 20;  // generator-image assignments tried per carrier pair
  std::size_t max_homs = 100000;        // soft homs returned by one enumeration
  std::size_t max_witness_order = 4096; // carrier order of constructed witness objects
};

/// ({a}, F(a) = {e}) over the trivial group.
SoftGroup final_object();

/// The constant morphism S -> final_object().
SoftHom unique_morphism_to_final(const SoftGroup& s);

/// A soft product with its projection morphisms (p_i, Pi_i).
struct ProductCone {
  SoftGroup object;
  DirectProduct carrier;
  std::vector<SoftHom> projections;
};

ProductCone categorical_product(std::span<const SoftGroup> factors);
ProductCone categorical_product(const SoftGroup& first, const SoftGroup& second);

/// (gamma, theta) with gamma(k) = (g1.f(k), g2.f(k)) and
/// theta(b) = (g1.p(b), g2.p(b)). `cone` must be the product of the targets.
/// Throws Error(NotComposable) if the sources differ.
///
/// gamma-hat(H(b)) is the graph {(g1.f(k), g2.f(k)) : k in H(b)}, which is in
/// general a proper subgroup of g1.f-hat(H(b)) x g2.f-hat(H(b)) (the diagonal
/// of a nontrivial group, for instance). The pair is then not a soft
/// homomorphism and Error(DiagramViolation) is thrown; since the projection
/// equations force gamma and theta, no morphism satisfies them in that case.
SoftHom mediating_morphism(const SoftGroup& z, const SoftHom& g1, const SoftHom& g2,
                           const ProductCone& cone);
SoftHom mediating_morphism(const SoftGroup& z, const SoftHom& g1, const SoftHom& g2);
/// std::nullopt exactly when (gamma, theta) breaks the diagram.
std::optional<SoftHom> try_mediating_morphism(const SoftGroup& z, const SoftHom& g1,
                                              const SoftHom& g2, const ProductCone& cone);

/// Every group homomorphism G -> K, found by trying generator images whose
/// order divides the generator's. Throws Error(ScaleBound).
std::vector<GroupHom> enumerate_group_homs(const FiniteGroup& domain, const FiniteGroup& codomain,
                                           const Bounds& bounds = {});

/// Every soft hom S -> T in deterministic order (by group hom, then by
/// parameter map lexicographically). Throws Error(ScaleBound) when S exceeds
/// the bounds.
std::vector<SoftHom> enumerate_soft_homs(const SoftGroup& source, const SoftGroup& target,
                                         const Bounds& bounds = {});

/// Memoizing hom-set oracle over a finite test universe.
class MorphismOracle {
 public:
  explicit MorphismOracle(std::vector<SoftGroup> universe, Bounds bounds = {});

  const std::vector<SoftGroup>& universe() const noexcept { return universe_; }
  const Bounds& bounds() const noexcept { return bounds_; }

  /// nullptr when the pair is out of bounds.
  const std::vector<SoftHom>* homs(const SoftGroup& source, const SoftGroup& target);

 private:
  struct Entry {
    SoftGroup source;
    SoftGroup target;
    std::optional<std::vector<SoftHom>> homs;
  };
  std::vector<SoftGroup> universe_;
  Bounds bounds_;
  std::vector<Entry> cache_;
};

enum class Property { Monic, Epic, SplitMonic };
enum class Holds { True, False, UnknownAtScale };

const char* to_string(Property p) noexcept;
const char* to_string(Holds h) noexcept;

struct Witness {
  enum class Kind {
    /// Two distinct morphisms that the tested morphism fails to cancel.
    CancellationPair,
    /// g with g . h = 1.
    LeftInverse,
    /// No left inverse among `candidates` enumerated morphisms.
    ExhaustiveSearch,
  };
  Kind kind = Kind::CancellationPair;
  std::vector<SoftHom> homs;
  std::size_t candidates = 0;
  std::string construction;
};

struct MorphismVerdict {
  Property property = Property::Monic;
  Holds holds = Holds::UnknownAtScale;
  std::optional<Witness> witness;
  std::string note;
  std::size_t oracle_objects = 0;  // universe objects searched by brute force
  std::size_t oracle_homs = 0;     // morphisms inspected by brute force
};

/// Injective f and p give holds = True; otherwise an explicit cancellation
/// pair is built (kernel constructions when f is not injective and the soft
/// kernel is defined, parameter collapse when p identifies x, y with
/// F(x) = F(y)), falling back to brute force over the oracle universe.
/// Brute force also cross-checks True verdicts; a contradiction throws
/// Error(Internal).
MorphismVerdict check_monic(const SoftHom& h, MorphismOracle& oracle);

/// Surjective f and p give holds = True; otherwise parameter duplication
/// when p misses a target parameter, then brute force.
MorphismVerdict check_epic(const SoftHom& h, MorphismOracle& oracle);

/// Searches all morphisms target -> source for a left inverse.
MorphismVerdict check_split_monic(const SoftHom& h, MorphismOracle& oracle);

/// Re-checks a verdict's witness from scratch: every witness morphism is
/// revalidated and the cancellation / inverse equations are recomputed.
bool verify_verdict(const MorphismVerdict& verdict, const SoftHom& h, const Bounds& bounds = {});

struct NamedCheck {
  std::string name;
  bool ok = false;
};

struct MonoidalReport {
  std::vector<NamedCheck> checks;
  bool ok() const;
};

/// Associator (S x T) x V -> S x (T x V), flattening to S x T x V, the swap
/// S x T -> T x S, and both unit laws against the final object, each
/// validated as a soft isomorphism.
MonoidalReport monoidal_sanity(const SoftGroup& s, const SoftGroup& t, const SoftGroup& v);

/// Small carriers of order at most `max_order`: {e}, W_1, S_2, <v_1, v_2>,
/// <v_1 r_1>, W_2, S_3, <v_1, v_2, v_3>.
std::vector<FiniteGroup> small_carriers(std::size_t max_order = 8);

/// Deterministic pseudo-random soft groups over small_carriers(max_order)
/// with 1..max_params labelled parameters.
std::vector<SoftGroup> seeded_universe(std::uint64_t seed, std::size_t count,
                                       std::size_t max_order = 8, std::size_t max_params = 3);

}  // namespace softgrp
