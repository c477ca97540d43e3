#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/error.hpp"

using namespace tambara;

namespace {

GSetPtr coset(const ContextPtr& ctx, std::size_t cls) { return ctx->coset(cls).set; }

// X = G/e u G/G over the given group.
GSetPtr mixed(const ContextPtr& ctx) {
  return coproduct(coset(ctx, 0), coset(ctx, ctx->catalog().top_class())).set;
}

}  // namespace

TEST_CASE("coset spaces are transitive with the right stabilizers") {
  const ContextPtr ctx = test::context("s3");
  for (std::size_t c = 0; c < ctx->num_levels(); ++c) {
    const GSetPtr x = coset(ctx, c);
    CHECK(x->is_valid());
    CHECK(x->size() * ctx->catalog().rep_subgroup(c).order() == ctx->group().order());
    CHECK(stabilizer(*x, 0) == ctx->catalog().rep_subgroup(c).mask);
    const OrbitDecomposition d = orbit_decompose(ctx->catalog(), *x);
    REQUIRE(d.orbits.size() == 1);
    CHECK(d.orbits[0].cls == c);
  }
}

TEST_CASE("orbit decomposition of a coproduct") {
  const ContextPtr ctx = test::context("c2");
  const GSetPtr x = mixed(ctx);
  const OrbitDecomposition d = orbit_decompose(ctx->catalog(), *x);
  CHECK(d.orbits.size() == 2);
  CHECK(d.signature == std::vector<std::size_t>{1, 1});
  for (int p = 0; p < x->size(); ++p) CHECK(x->act(d.transversal[p], d.orbits[d.orbit_of[p]].base) == p);
}

TEST_CASE("equivariant maps between coset spaces") {
  // Hom(G/K, G/H) has one element per fixed point of K on G/H.
  const ContextPtr ctx = test::context("s3");
  const auto& cat = ctx->catalog();
  for (std::size_t k = 0; k < ctx->num_levels(); ++k)
    for (std::size_t h = 0; h < ctx->num_levels(); ++h) {
      const auto maps = enumerate_gmaps(cat, coset(ctx, k), coset(ctx, h));
      std::size_t fixed = 0;
      const GSetPtr y = coset(ctx, h);
      for (int p = 0; p < y->size(); ++p) {
        bool f = true;
        for (int g : cat.rep_subgroup(k).elements) f &= y->act(g, p) == p;
        fixed += f;
      }
      CHECK(maps.size() == fixed);
      CHECK(maps.size() == ctx->maps_between(k, h).size());
      for (const GMap& m : maps) CHECK(m.is_equivariant());
    }
}

TEST_CASE("pullback of two projections") {
  const ContextPtr ctx = test::context("c2");
  const GMap p = ctx->realize(ctx->projection(0, 1));
  const Pullback pb = pullback(p, p);
  CHECK(pb.set->size() == 4);  // G/e x G/e = 2 * G/e
  CHECK(pb.pr1.is_equivariant());
  for (int q = 0; q < pb.set->size(); ++q) CHECK(p(pb.pr1(q)) == p(pb.pr2(q)));
}

TEST_CASE("dependent product: sections of 2*G/e over G/e -> G/G") {
  const ContextPtr ctx = test::context("c2");
  const GMap f = ctx->realize(ctx->projection(0, 1));
  // A = G/e u G/e over X = G/e by the fold map.
  const Coproduct a = coproduct(coset(ctx, 0), coset(ctx, 0));
  const GMap fold = copair(identity_map(coset(ctx, 0)), identity_map(coset(ctx, 0)));
  const DependentProduct d = dependent_product(f, fold);
  // Sections choose one of two preimages over each of two points: 4 of them,
  // two fixed by the swap and one free orbit.
  CHECK(d.set->size() == 4);
  const OrbitDecomposition o = orbit_decompose(ctx->catalog(), *d.set);
  CHECK(o.signature == std::vector<std::size_t>{1, 2});
}

TEST_CASE("exponential diagrams commute and the folding construction is consistent") {
  const ContextPtr ctx = test::context("c2");
  const GMap f = ctx->realize(ctx->projection(0, 1));
  const GMap p = identity_map(coset(ctx, 0));
  const ExponentialDiagram e = exponential_diagram(f, p);
  for (int z = 0; z < e.lambda.src().size(); ++z) CHECK(f(p(e.lambda(z))) == e.pi(e.rho(z)));
  const FoldingExponential fe = folding_exponential(f);
  CHECK(fe.v->size() == 4);  // subsets of the single fiber of size 2
  CHECK(fe.u->size() + fe.u_prime->size() == 2 * fe.v->size());
}

TEST_CASE("resource caps refuse oversized constructions") {
  const ContextPtr ctx = test::context("s3");
  const GMap f = ctx->realize(ctx->projection(0, ctx->catalog().top_class()));
  const Coproduct a = coproduct(coset(ctx, 0), coset(ctx, 0));
  const GMap fold = copair(identity_map(coset(ctx, 0)), identity_map(coset(ctx, 0)));
  CHECK_THROWS_AS(dependent_product(f, fold, 10), ResourceCapError);
}

TEST_CASE("invalid actions and maps are rejected") {
  const GroupPtr g = builtin_group("c2");
  CHECK_THROWS_AS(GSet::from_rows(g, {{1, 0}, {1, 0}}), InputError);
  const ContextPtr ctx = test::context("c2");
  CHECK_THROWS_AS(GMap(coset(ctx, 1), coset(ctx, 0), {0}), InputError);
}
