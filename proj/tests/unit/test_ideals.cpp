#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/error.hpp"
#include "tambara/quotient.hpp"

using namespace tambara;

namespace {

FunctorPtr omega_c2() { return test::functor("c2", "omega"); }

IdealFamily two_omega(const FunctorPtr& om) {
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < om->num_levels(); ++c) {
    const LevelRing& r = om->level(c);
    std::vector<Value> gens;
    for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.scale(2, r.basis(i)));
    levels.push_back(level_span(r, gens));
  }
  return IdealFamily(om, levels);
}

IdealFamily principal(const FunctorPtr& t, std::size_t cls, const std::string& x) {
  return generate(t, {Generator{cls, t->parse(cls, x)}}).ideal;
}

}  // namespace

TEST_CASE("level ideals of finite rings") {
  CHECK(finite_ring_ideals(zmod_ring(6)).size() == 4);
  CHECK(finite_ring_ideals(zmod_ring(4)).size() == 3);
  CHECK(finite_ring_ideals(product_field_ring(2, 2)).size() == 4);
  const LevelRing r = zmod_ring(12);
  const LevelIdeal a = level_ideal(r, {Value{4}}), b = level_ideal(r, {Value{6}});
  CHECK(level_count(level_sum(r, a, b)) == 6);
  CHECK(level_count(level_intersect(r, a, b)) == 1);
  CHECK(level_count(level_product(r, a, b)) == 1);
}

TEST_CASE("2*Omega is not an ideal: condition (iii) fails at the norm of 2*[G/e]") {
  const IdealCheckReport r = check_ideal(two_omega(omega_c2()));
  CHECK_FALSE(r.is_ideal);
  CHECK(r.levels_ok);
  CHECK(r.condition_i);
  CHECK(r.condition_ii);
  CHECK_FALSE(r.condition_iii);
  CHECK(r.counterexample ==
        "condition (iii) fails: nm along e->G of 2*[G/e] = 2*[G/G] + 1*[G/e] is not in I(G)");
}

TEST_CASE("saturating 2 at level e") {
  const FunctorPtr om = omega_c2();
  const GenerateResult g = generate(om, {Generator{0, Value{2}}});
  CHECK(g.converged);
  CHECK(g.ideal.format() ==
        "ideal over omega\nlevel e: lattice [2*[G/e]]\nlevel G: lattice [2*[G/G] + 1*[G/e]; 4*[G/G]]\n");
  CHECK(replay(g.ideal));
  const IdealCheckReport r = check_ideal(g.ideal);
  CHECK(r.is_ideal);
  // Every step in the log is derived from earlier steps only.
  const auto& steps = g.ideal.log()->steps;
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (const auto& [coef, j] : steps[i].input) CHECK(j < i);
}

TEST_CASE("membership is tri-state and traced") {
  const IdealFamily i = generate(omega_c2(), {Generator{0, Value{2}}}).ideal;
  const FunctorPtr om = i.owner();
  const MembershipVerdict in = membership(i, 1, om->parse(1, "4*[G/e]"));
  CHECK(in.value == Membership::In);
  CHECK_FALSE(in.trace.empty());
  CHECK(membership(i, 1, om->parse(1, "2*[G/G]")).value == Membership::NotIn);
  // A partial saturation can only say "unknown" outside what it has.
  SaturationOptions opt;
  opt.rounds = 0;
  const GenerateResult partial = generate(om, {Generator{0, Value{2}}}, opt);
  CHECK_FALSE(partial.converged);
  CHECK(membership(partial.ideal, 1, om->parse(1, "2*[G/G]")).value == Membership::Unknown);
}

TEST_CASE("operations on ideals of P_Z/6") {
  const FunctorPtr p = test::functor("c2", "zmod 6 trivial");
  const IdealFamily a = principal(p, 0, "2"), b = principal(p, 0, "3");
  CHECK(combine(CombineOp::Sum, a, b).is_whole());
  CHECK(combine(CombineOp::Intersect, a, b).is_zero());
  CHECK(combine(CombineOp::Product, a, b).is_zero());
  CHECK(a.subset_of(IdealFamily::whole(p)));
  CHECK(IdealFamily::zero(p).subset_of(a));
}

TEST_CASE("radical in P_Z/4") {
  const FunctorPtr p = test::functor("c2", "zmod 4 trivial");
  const IdealFamily r = radical(IdealFamily::zero(p));
  // 2 is nilpotent at both levels; <2> generated at e alone has I(G) = (0).
  CHECK(r == principal(p, 1, "2"));
  CHECK(r.level(0).members == std::vector<bool>{true, false, true, false});
  CHECK(principal(p, 0, "2").subset_of(r));
  CHECK(r != principal(p, 0, "2"));
  CHECK(radical(r) == r);
}

TEST_CASE("invariant ideal lifts") {
  const FunctorPtr om = omega_c2();
  const IdealFamily i0 = invariant_ideal_lift(om, level_zero(om->level(0)));
  CHECK(i0.format() == "ideal over omega\nlevel e: lattice []\nlevel G: lattice [-2*[G/G] + 1*[G/e]]\n");
  CHECK(check_ideal(i0).is_ideal);
  const IdealFamily i2 = invariant_ideal_lift(om, LevelIdeal{{}, {{2}}});
  CHECK(check_ideal(i2).is_ideal);
  CHECK(i0.subset_of(i2));
  // The lift is the largest ideal over its level-e part.
  const IdealFamily g2 = generate(om, {Generator{0, Value{2}}}).ideal;
  CHECK(g2.subset_of(i2));
  CHECK_FALSE(i2.subset_of(g2));
}

TEST_CASE("quotients: cosets, residues and free levels") {
  const FunctorPtr om = omega_c2();
  const QuotientResult q0 = quotient_functor(invariant_ideal_lift(om, level_zero(om->level(0))));
  for (std::size_t c = 0; c < om->num_levels(); ++c) {
    CHECK(q0.quotient->level_kind(c) == QuotientFunctor::LevelKind::Free);
    CHECK(q0.quotient->level(c).rank() == 1);
  }
  const QuotientResult q2 = quotient_functor(invariant_ideal_lift(om, LevelIdeal{{}, {{2}}}));
  for (std::size_t c = 0; c < om->num_levels(); ++c) CHECK(q2.quotient->level(c).size() == 2);
  CHECK(validate_morphism(q2.projection).ok);
  // Partial or uncertified families are refused.
  CHECK_THROWS_AS(quotient_functor(two_omega(om)), InputError);
}

TEST_CASE("kernels, preimages and the first isomorphism theorem") {
  const FunctorPtr om = omega_c2();
  const IdealFamily i0 = invariant_ideal_lift(om, level_zero(om->level(0)));
  const QuotientResult q = quotient_functor(i0);
  CHECK(kernel(q.projection) == i0);
  CHECK(preimage(q.projection, IdealFamily::zero(q.quotient)) == i0);
  const IsoReport iso = first_iso_check(q.projection);
  CHECK(iso.ok);
  CHECK(iso.injective);
  CHECK(iso.surjective);
}

TEST_CASE("Chinese remainder theorem for P_Z/6") {
  const FunctorPtr p = test::functor("c2", "zmod 6 trivial");
  const IdealFamily i2 = invariant_ideal_lift(p, level_ideal(p->level(0), {p->parse(0, "2")}));
  const IdealFamily i3 = invariant_ideal_lift(p, level_ideal(p->level(0), {p->parse(0, "3")}));
  const CrtReport r = coprime_and_crt({i2, i3});
  CHECK_MESSAGE(r.ok(), r.witness);
  CHECK(r.checks >= 2 * 36);
  // Not coprime: (2) and (2).
  CHECK_FALSE(coprime_and_crt({i2, i2}).pairwise_coprime);
}
