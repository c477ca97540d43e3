#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/error.hpp"
#include "tambara/spectrum.hpp"

using namespace tambara;

TEST_CASE("ideal enumeration matches exact ideal checks") {
  const FunctorPtr p = test::functor("c2", "zmod 6 trivial");
  const auto ideals = enumerate_ideals(p);
  CHECK(ideals.size() == 4);
  for (const IdealFamily& i : ideals) CHECK(check_ideal(i).is_ideal);
  CHECK_THROWS_AS(enumerate_ideals(p, 2), ResourceCapError);
  CHECK_THROWS_AS(enumerate_ideals(test::functor("c2", "omega")), UnsupportedError);
}

TEST_CASE("spectra of small fixed point functors") {
  SUBCASE("F2 trivial: a point, field-like") {
    const SpectrumReport s = spec(test::functor("c2", "zmod 2 trivial"));
    CHECK(s.primes.size() == 1);
    CHECK(s.field_like.is_true());
  }
  SUBCASE("F2 x F2 with the swap: field-like although level e is not a domain") {
    const FunctorPtr t = test::functor("c2", "prodfield 2 2 perm");
    const SpectrumReport s = spec(t);
    CHECK(s.primes.size() == 1);
    CHECK(s.field_like.is_true());
    CHECK_FALSE(classify(t).level_e_domain);
  }
  SUBCASE("F2 x F2 trivial: two points, disconnected") {
    const SpectrumReport s = spec(test::functor("c2", "prodfield 2 2 trivial"));
    CHECK(s.primes.size() == 2);
    CHECK(s.connected.value == Truth::False);
    CHECK(s.connectivity.consistent);
    CHECK(s.connectivity.witness.find("a + b = 1") != std::string::npos);
  }
  SUBCASE("Z/4: not reduced, reduction is P_Z/2") {
    const SpectrumReport s = spec(test::functor("c2", "zmod 4 trivial"));
    CHECK(s.reduced.value == Truth::False);
    CHECK(s.reduction_homeomorphism);
    for (std::size_t c = 0; c < s.reduction->num_levels(); ++c) CHECK(s.reduction->level(c).size() == 2);
  }
  SUBCASE("Z/6: two maximal ideals from the level-e bijection") {
    const SpectrumReport s = spec(test::functor("c2", "zmod 6 trivial"));
    CHECK(s.maximals.size() == 2);
    CHECK(s.bijection_agrees);
  }
}

TEST_CASE("topology laws hold on every enumerated spectrum") {
  for (const char* g : {"c2", "c3", "s3"})
    for (const char* d : {"zmod 6 trivial", "zmod 4 trivial", "zmod 2 trivial"}) {
      CAPTURE(g);
      CAPTURE(d);
      const LawReport r = check_topology_laws(spec(test::functor(g, d)));
      CHECK_MESSAGE(r.ok, r.witness);
    }
}

TEST_CASE("spec of a surjection is a homeomorphism onto V(Ker)") {
  const FunctorPtr p = test::functor("c2", "zmod 6 trivial");
  const auto q = quotient_functor(generate(p, {Generator{0, p->parse(0, "2")}}).ideal);
  const SpecMapReport r = spec_map(q.projection);
  CHECK(r.well_defined);
  CHECK(r.continuous);
  CHECK(r.surjective_case);
  CHECK(r.onto_kernel_closed_set);
}

TEST_CASE("prime and maximal verdicts on lattice owners name their route") {
  const FunctorPtr om = test::functor("c2", "omega");
  const PrimeVerdict zero = is_prime(IdealFamily::zero(om));
  CHECK(zero.value == Truth::True);
  CHECK(zero.mode == "by-theorem");
  const IdealFamily i3 = invariant_ideal_lift(om, LevelIdeal{{}, {{3}}});
  CHECK(is_maximal(i3).value == Truth::True);
  const IdealFamily i4 = invariant_ideal_lift(om, LevelIdeal{{}, {{4}}});
  CHECK(is_maximal(i4).value == Truth::False);
  CHECK_THROWS_AS(is_prime(IdealFamily::whole(om)), InputError);
}

TEST_CASE("MRC: Omega is not MRC, its MRC-ization is P_Z") {
  for (const char* g : {"c2", "c3", "s3"}) {
    CAPTURE(g);
    const FunctorPtr om = test::functor(g, "omega");
    CHECK_FALSE(is_mrc(*om));
    CHECK_THROWS_AS(mrc_embed(om), InputError);
    const QuotientResult q = mrcize(om);
    CHECK(is_mrc(*q.quotient));
    const IsoReport iso = first_iso_check(restriction_to_free_level(q.quotient));
    CHECK_MESSAGE(iso.ok, iso.witness);
    const FactorizationReport f = mrc_factorization(restriction_to_free_level(om));
    CHECK_MESSAGE(f.ok, f.witness);
  }
  CHECK(is_mrc(*test::functor("c2", "zmod 4 trivial")));
}

TEST_CASE("classification of Omega and of field-like functors") {
  const ClassifyReport om = classify(test::functor("c2", "omega"));
  CHECK(om.domain_like.is_true());
  CHECK(om.domain_like.mode == "by-theorem");
  CHECK(om.field_like.value == Truth::False);
  const ClassifyReport f = classify(test::functor("c2", "prodfield 2 2 perm"));
  CHECK(f.field_like.is_true());
  REQUIRE(f.fixed_field_e.has_value());
  CHECK(*f.fixed_field_e);
}

TEST_CASE("Omega domain witnesses") {
  const auto om = omega_functor(test::context("c2"));
  const DomainWitness w = omega_domain_witness(*om, 1, om->parse(1, "[G/e]"), 1, om->parse(1, "[G/e]"));
  CHECK(w.ok);
  CHECK(w.a.rho == 2);
  CHECK(w.rho_product == 4);
  CHECK_THROWS_AS(omega_domain_witness(*om, 1, om->level(1).zero(), 0, Value{1}), InputError);
  for (const char* g : {"c2", "c3", "s3"}) {
    const DomainSweep s = omega_domain_sweep(*omega_functor(test::context(g)), 20);
    CHECK(s.failures == 0);
  }
}

TEST_CASE("distinct primes of Omega") {
  const SpecInclusionReport r = spec_inclusion_demo(omega_functor(test::context("c2")));
  CHECK(r.primes.size() == 4);
  CHECK(r.distinct);
  CHECK(r.zero_not_lifted);
  for (const auto& e : r.primes) CHECK(e.prime.value == Truth::True);
}
