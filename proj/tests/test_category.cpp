#include "doctest.h"
#include "softgrp/bn_example.hpp"
#include "softgrp/category.hpp"
#include "softgrp/error.hpp"
#include "support.hpp"

using namespace softgrp;

namespace {

ElementSet trivial_set(const FiniteGroup& g) { return {g.identity()}; }

// Counts group homomorphisms by trying every function on generators and
// checking all pairs; independent of enumerate_group_homs' pruning.
std::size_t brute_force_hom_count(const FiniteGroup& g, const FiniteGroup& k) {
  const auto& gens = g.generators();
  std::vector<std::size_t> idx(gens.size(), 0);
  std::size_t count = 0;
  while (true) {
    std::vector<SignedPermutation> images;
    for (auto i : idx) images.push_back(k.element(i));
    if (GroupHom::try_from_images(g, k, gens, images)) ++count;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == k.order()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("final object") {
  const auto t = final_object();
  CHECK(t.size() == 1);
  CHECK(t.carrier().order() == 1);
  CHECK(unique_morphism_to_final(t) == SoftHom::unit(t));
  CHECK(enumerate_soft_homs(t, t).size() == 1);

  const auto f2 = composition_soft_group(2);
  const auto to_final = enumerate_soft_homs(f2, t);
  REQUIRE(to_final.size() == 1);
  CHECK(to_final[0] == unique_morphism_to_final(f2));

  for (const auto& s : seeded_universe(41, 12)) CHECK(enumerate_soft_homs(s, t).size() == 1);
}

TEST_CASE("group hom enumeration agrees with brute force") {
  const auto carriers = small_carriers(8);
  for (const auto& g : carriers) {
    for (const auto& k : carriers) {
      CHECK(enumerate_group_homs(g, k).size() == brute_force_hom_count(g, k));
    }
  }
}

TEST_CASE("soft hom enumeration counts") {
  const auto w1 = hyperoctahedral_group(1);
  const auto e = FiniteGroup::trivial();
  const auto triv = SoftGroup::make(e, {"a"}, {trivial_set(e)});
  const auto target = SoftGroup::make(w1, {"x", "y", "z"}, {trivial_set(w1), w1.elements(), trivial_set(w1)});
  // One group hom {e} -> W_1, and p may pick x or z.
  CHECK(enumerate_soft_homs(triv, target).size() == 2);

  Bounds tight;
  tight.max_params = 2;
  CHECK_THROWS_AS(enumerate_soft_homs(target, triv, tight), Error);
  tight = Bounds{};
  tight.max_order = 4;
  CHECK_THROWS_AS(enumerate_soft_homs(composition_soft_group(2), final_object(), tight), Error);
}

TEST_CASE("oracle caches hom-sets") {
  MorphismOracle oracle(seeded_universe(2, 4));
  const auto& a = oracle.universe()[0];
  const auto* first = oracle.homs(a, a);
  REQUIRE(first);
  CHECK(first == oracle.homs(a, a));
  CHECK_FALSE(first->empty());
  CHECK(oracle.homs(composition_soft_group(3), a) == nullptr);
}

TEST_CASE("product cone") {
  const auto f2 = composition_soft_group(2);
  const auto cone = categorical_product(f2, f2);
  REQUIRE(cone.projections.size() == 2);
  CHECK(cone.object.size() == 36);
  for (const auto& p : cone.projections) {
    CHECK_NOTHROW(SoftHom::make(p.source(), p.target(), p.f(), p.param_map()));
  }

  const auto with_final = categorical_product(f2, final_object());
  for (std::size_t i = 0; i < f2.size(); ++i) CHECK(with_final.object.assigned(i).size() == f2.assigned(i).size());

  const auto w1 = hyperoctahedral_group(1);
  const auto s = SoftGroup::make(w1, {"a", "b"}, {trivial_set(w1), w1.elements()});
  const std::vector<SoftGroup> three{s, s, s};
  const auto triple = categorical_product(three);
  CHECK(triple.projections.size() == 3);
  CHECK(triple.object.size() == 8);
  CHECK(triple.object.carrier().order() == 8);
}

TEST_CASE("mediating morphism") {
  // Over a trivial carrier the diagonal is a soft homomorphism.
  const auto e = FiniteGroup::trivial();
  const auto triv = SoftGroup::make(e, {"a", "b"}, {trivial_set(e), trivial_set(e)});
  const auto u = SoftHom::unit(triv);
  const auto cone = categorical_product(triv, triv);
  const auto diag = mediating_morphism(triv, u, u, cone);
  CHECK(compose_soft_homs(cone.projections[0], diag) == u);
  CHECK(compose_soft_homs(cone.projections[1], diag) == u);

  const auto t = final_object();
  const auto m = mediating_morphism(t, SoftHom::unit(t), SoftHom::unit(t));
  CHECK(enumerate_soft_homs(t, categorical_product(t, t).object) == std::vector<SoftHom>{m});

  // On (F, SC(1)) the diagonal image of F((1)) = W_1 is {(x, x)}, of order 2,
  // while the product assigns W_1 x W_1, of order 4: no morphism satisfies
  // both projection equations.
  const auto f1 = composition_soft_group(1);
  const auto u1 = SoftHom::unit(f1);
  const auto cone1 = categorical_product(f1, f1);
  CHECK_FALSE(try_mediating_morphism(f1, u1, u1, cone1));
  try {
    mediating_morphism(f1, u1, u1, cone1);
    FAIL("diagonal accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DiagramViolation);
  }
  for (const auto& h : enumerate_soft_homs(f1, cone1.object)) {
    CHECK_FALSE((compose_soft_homs(cone1.projections[0], h) == u1 &&
                 compose_soft_homs(cone1.projections[1], h) == u1));
  }
}

TEST_CASE("product universal property over seeded triples") {
  // For every triple: at most one hom satisfies both projection equations,
  // and one exists exactly when (gamma, theta) is a soft homomorphism.
  testing::Rng rng(31);
  const auto universe = seeded_universe(9, 10, 8, 2);
  std::size_t checked = 0, existing = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    const auto& z = rng.pick(universe);
    const auto& s = rng.pick(universe);
    const auto& t = rng.pick(universe);
    if (s.carrier().order() * t.carrier().order() > 16) continue;
    const auto zs = enumerate_soft_homs(z, s);
    const auto zt = enumerate_soft_homs(z, t);
    if (zs.empty() || zt.empty()) continue;
    const auto& g1 = rng.pick(zs);
    const auto& g2 = rng.pick(zt);
    const auto cone = categorical_product(s, t);
    const auto m = try_mediating_morphism(z, g1, g2, cone);
    std::vector<SoftHom> matching;
    for (const auto& h : enumerate_soft_homs(z, cone.object)) {
      if (compose_soft_homs(cone.projections[0], h) == g1 && compose_soft_homs(cone.projections[1], h) == g2) {
        matching.push_back(h);
      }
    }
    CHECK(matching.size() <= 1);
    CHECK(matching.size() == (m ? 1u : 0u));
    if (m && matching.size() == 1) CHECK(matching[0] == *m);
    existing += m.has_value();
    ++checked;
  }
  CHECK(checked >= 10);
  CHECK(existing >= 5);
}

TEST_CASE("monic: hyperoctahedral example at n = 2") {
  const auto h = lambda_soft_hom(2);
  MorphismOracle oracle(seeded_universe(1, 10));
  const auto v = check_monic(h, oracle);
  CHECK(v.holds == Holds::False);
  REQUIRE(v.witness);
  CHECK(v.witness->construction == "parameter-collapse");
  REQUIRE(v.witness->homs.size() == 2);
  const auto& h1 = v.witness->homs[0];
  const auto& h2 = v.witness->homs[1];
  CHECK(h1.f() == GroupHom::identity(h.source().carrier()));
  CHECK(h2.f() == GroupHom::identity(h.source().carrier()));
  CHECK_FALSE(h1 == h2);
  CHECK(compose_soft_homs(h, h1) == compose_soft_homs(h, h2));
  CHECK(lambda_map(SignedComposition({1, -1})) == lambda_map(SignedComposition({-1, 1})));
  CHECK(verify_verdict(v, h));
}

TEST_CASE("monic: unit and constant maps") {
  MorphismOracle oracle(seeded_universe(1, 10));
  const auto f2 = composition_soft_group(2);
  const auto unit = check_monic(SoftHom::unit(f2), oracle);
  CHECK(unit.holds == Holds::True);
  CHECK(verify_verdict(unit, SoftHom::unit(f2)));

  const auto w2 = hyperoctahedral_group(2);
  const auto s = SoftGroup::make(w2, {"x"}, {w2.elements()});
  const auto t = SoftGroup::make(w2, {"u"}, {trivial_set(w2)});
  const auto zero = make_soft_hom(s, t, GroupHom::trivial(w2, w2), std::vector<std::size_t>{0});
  const auto v = check_monic(zero, oracle);
  CHECK(v.holds == Holds::False);
  REQUIRE(v.witness);
  CHECK(v.witness->construction.rfind("kernel-", 0) == 0);
  const auto& k1 = v.witness->homs[0];
  const auto& k2 = v.witness->homs[1];
  CHECK_FALSE(k1 == k2);
  CHECK(compose_soft_homs(zero, k1) == compose_soft_homs(zero, k2));
  CHECK(verify_verdict(v, zero));
}

TEST_CASE("epic") {
  MorphismOracle oracle(seeded_universe(1, 10));
  const auto h = lambda_soft_hom(2);
  const auto v = check_epic(h, oracle);
  CHECK(v.holds == Holds::True);
  CHECK(verify_verdict(v, h));
  const auto unit = SoftHom::unit(h.target());
  CHECK(check_epic(unit, oracle).holds == Holds::True);

  // Into a larger parameter set, missing one target parameter.
  const auto w1 = hyperoctahedral_group(1);
  const auto s = SoftGroup::make(w1, {"a"}, {w1.elements()});
  const auto t = SoftGroup::make(w1, {"a", "b"}, {w1.elements(), w1.elements()});
  const auto into = make_soft_hom(s, t, GroupHom::identity(w1), std::vector<std::size_t>{0});
  const auto e = check_epic(into, oracle);
  CHECK(e.holds == Holds::False);
  REQUIRE(e.witness);
  const auto& g1 = e.witness->homs[0];
  const auto& g2 = e.witness->homs[1];
  CHECK_FALSE(g1 == g2);
  CHECK(compose_soft_homs(g1, into) == compose_soft_homs(g2, into));
  CHECK(verify_verdict(e, into));
}

TEST_CASE("split monic") {
  MorphismOracle oracle(seeded_universe(1, 10));
  const auto f2 = composition_soft_group(2);
  const auto unit = SoftHom::unit(f2);
  const auto v = check_split_monic(unit, oracle);
  CHECK(v.holds == Holds::True);
  REQUIRE(v.witness);
  CHECK(compose_soft_homs(v.witness->homs[0], unit) == SoftHom::unit(f2));

  const auto h = lambda_soft_hom(2);
  const auto no = check_split_monic(h, oracle);
  CHECK(no.holds == Holds::False);
  CHECK(verify_verdict(no, h));

  // Under f-hat(F(a)) = H(p(a)) there is no morphism at all from a trivial
  // soft group over W_1 to a completely soft one.
  const auto w1 = hyperoctahedral_group(1);
  const auto e = FiniteGroup::trivial();
  CHECK(enumerate_soft_homs(SoftGroup::make(w1, {"a"}, {trivial_set(w1)}),
                            SoftGroup::make(w1, {"b"}, {w1.elements()}))
            .empty());

  // {e} into W_1 carrying {b -> {e}}: retracted by W_1 -> {e}.
  const auto triv = SoftGroup::make(e, {"a"}, {trivial_set(e)});
  const auto onto_e = SoftGroup::make(w1, {"b"}, {trivial_set(w1)});
  const auto inc = make_soft_hom(triv, onto_e, GroupHom::inclusion(e, w1), std::vector<std::size_t>{0});
  // The centre of the cyclic group <v_1 r_1> of order 4 has no retraction:
  // injective on both components, yet not split.
  const auto c4 = FiniteGroup::closure(2, {compose(standard_generator_v(2, 1), standard_generator_r(2, 1))});
  const auto centre = FiniteGroup::closure(2, {SignedPermutation({-1, -2})});
  const auto inc2 = make_soft_hom(SoftGroup::make(centre, {"a"}, {trivial_set(centre)}),
                                  SoftGroup::make(c4, {"b"}, {trivial_set(c4)}), GroupHom::inclusion(centre, c4),
                                  std::vector<std::size_t>{0});
  for (const auto* i : {&inc, &inc2}) {
    const auto s = check_split_monic(*i, oracle);
    bool retraction = false;
    for (const auto& g : enumerate_soft_homs(i->target(), i->source())) {
      if (compose_soft_homs(g, *i) == SoftHom::unit(i->source())) retraction = true;
    }
    CHECK((s.holds == Holds::True) == retraction);
    CHECK(i->f().is_injective());
    CHECK(i->param_injective());
    CHECK(verify_verdict(s, *i));
  }
  CHECK(check_split_monic(inc, oracle).holds == Holds::True);
  CHECK(check_split_monic(inc2, oracle).holds == Holds::False);

  // Out of enumeration range, a non-injective Lambda still refutes.
  const auto h3 = lambda_soft_hom(3);
  const auto big = check_split_monic(h3, oracle);
  CHECK(big.holds == Holds::False);
  CHECK(verify_verdict(big, h3));
}

TEST_CASE("verdicts with tampered witnesses fail verification") {
  MorphismOracle oracle(seeded_universe(1, 10));
  const auto h = lambda_soft_hom(2);
  auto v = check_monic(h, oracle);
  REQUIRE(v.witness);
  v.witness->homs[1] = v.witness->homs[0];
  CHECK_FALSE(verify_verdict(v, h));

  auto s = check_split_monic(h, oracle);
  s.witness->candidates += 1;
  CHECK_FALSE(verify_verdict(s, h));

  MorphismVerdict bare;
  bare.property = Property::Monic;
  bare.holds = Holds::False;
  CHECK_FALSE(verify_verdict(bare, h));
}

TEST_CASE("analysis consistency over enumerated homs") {
  const auto universe = seeded_universe(5, 8, 8, 2);
  MorphismOracle oracle(universe);
  std::size_t analyzed = 0;
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      const auto* homs = oracle.homs(a, b);
      REQUIRE(homs);
      for (const auto& h : *homs) {
        const auto m = check_monic(h, oracle);
        const auto e = check_epic(h, oracle);
        const auto s = check_split_monic(h, oracle);
        for (const auto* v : {&m, &e, &s}) {
          if (v->holds == Holds::False) REQUIRE(v->witness);
          REQUIRE(verify_verdict(*v, h));
        }
        if (h.f().is_injective() && h.param_injective()) REQUIRE(m.holds == Holds::True);
        if (s.holds == Holds::True) {
          REQUIRE(m.holds == Holds::True);
          REQUIRE(h.f().is_injective());
          REQUIRE(h.param_injective());
        }
        if (m.holds == Holds::True && soft_kernel(h)) REQUIRE(h.f().is_injective());
        ++analyzed;
      }
    }
  }
  CHECK(analyzed > 50);
}

TEST_CASE("monoidal sanity") {
  const auto t = final_object();
  const auto r = monoidal_sanity(t, t, t);
  CHECK(r.ok());
  CHECK(r.checks.size() >= 4);
  const auto f1 = composition_soft_group(1);
  const auto e = FiniteGroup::trivial();
  const auto triv = SoftGroup::make(e, {"a", "b"}, {trivial_set(e), trivial_set(e)});
  const auto r2 = monoidal_sanity(f1, triv, f1);
  for (const auto& c : r2.checks) {
    INFO(c.name);
    CHECK(c.ok);
  }
  testing::Rng rng(37);
  const auto universe = seeded_universe(13, 10, 8, 2);
  for (int i = 0; i < 5; ++i) {
    const auto rep = monoidal_sanity(rng.pick(universe), rng.pick(universe), rng.pick(universe));
    CHECK(rep.ok());
  }
}

TEST_CASE("seeded universe is deterministic") {
  const auto a = seeded_universe(99, 10);
  const auto b = seeded_universe(99, 10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  CHECK(a.size() >= 10);
  for (const auto& s : a) {
    CHECK(s.carrier().order() <= 8);
    CHECK(s.size() <= 3);
  }
}
