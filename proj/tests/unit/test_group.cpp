#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/error.hpp"

using namespace tambara;

TEST_CASE("built-in groups have the expected orders and subgroup lattices") {
  struct Row {
    const char* name;
    int order;
    std::size_t subgroups;
    std::size_t classes;
  };
  for (const Row& r : {Row{"c2", 2, 2, 2}, Row{"c3", 3, 2, 2}, Row{"c4", 4, 3, 3}, Row{"s3", 6, 6, 4},
                       Row{"c2xc2", 4, 5, 5}}) {
    CAPTURE(r.name);
    const ContextPtr ctx = test::context(r.name);
    CHECK(ctx->group().order() == r.order);
    CHECK(ctx->catalog().all().size() == r.subgroups);
    CHECK(ctx->num_levels() == r.classes);
  }
}

TEST_CASE("group tables satisfy the group axioms") {
  for (const auto& name : builtin_group_names()) {
    const FiniteGroup& g = test::context(name)->group();
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.mul(g.identity(), a) == a);
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("catalog classes and names") {
  const SubgroupCatalog& cat = test::context("s3")->catalog();
  CHECK(cat.class_name(cat.trivial_class()) == "e");
  CHECK(cat.class_name(cat.top_class()) == "G");
  REQUIRE(cat.class_by_name("H1").has_value());
  CHECK(cat.rep_subgroup(*cat.class_by_name("H1")).order() == 2);
  CHECK(cat.rep_subgroup(*cat.class_by_name("H2")).order() == 3);
  CHECK_FALSE(cat.class_by_name("H9").has_value());
  // The three subgroups of order 2 are conjugate and the conjugators say so.
  for (std::size_t i = 0; i < cat.all().size(); ++i) {
    const std::size_t c = cat.class_of(i);
    CHECK(cat.conjugate(cat.rep_subgroup(c).mask, cat.conjugator(i)) == cat.subgroup(i).mask);
  }
}

TEST_CASE("subconjugacy order") {
  const SubgroupCatalog& cat = test::context("s3")->catalog();
  for (std::size_t c = 0; c < cat.num_classes(); ++c) {
    CHECK(cat.precedes(cat.trivial_class(), c));
    CHECK(cat.precedes(c, cat.top_class()));
  }
  CHECK_FALSE(cat.precedes(1, 2));
  CHECK_FALSE(cat.precedes(2, 1));
}

TEST_CASE("double cosets of C2 in S3") {
  const ContextPtr ctx = test::context("s3");
  const SubgroupMask h = ctx->catalog().rep_subgroup(1).mask;
  CHECK(double_cosets(ctx->group(), h, h).size() == 2);
  const SubgroupMask e = ctx->catalog().rep_subgroup(0).mask;
  CHECK(double_cosets(ctx->group(), e, e).size() == 6);
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_permutations("bad", 2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(builtin_group("a5"), InputError);
}

TEST_CASE("transitive maps: canonical forms, degrees, composition") {
  const ContextPtr ctx = test::context("s3");
  for (const TransitiveMap& f : ctx->maps()) {
    CHECK(ctx->canonical(f) == f);
    CHECK(ctx->realize(f).is_equivariant());
    const auto& cat = ctx->catalog();
    CHECK(ctx->degree(f) * cat.rep_subgroup(f.src).order() == static_cast<std::size_t>(cat.rep_subgroup(f.dst).order()));
    for (std::size_t id : ctx->maps_between(f.dst, cat.top_class())) {
      const TransitiveMap h = ctx->maps()[id];
      const GMap direct = ctx->realize(ctx->compose(h, f));
      const GMap composed = compose(ctx->realize(h), ctx->realize(f));
      CHECK(direct.images() == composed.images());
    }
  }
}
