#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/error.hpp"

using namespace tambara;

TEST_CASE("fixed subrings of the product field under the swap") {
  const auto p = test::functor("c2", "prodfield 2 2 perm");
  CHECK(p->level(0).size() == 4);
  CHECK(p->level(1).size() == 2);  // (0,0) and (1,1)
  const auto triv = test::functor("c2", "prodfield 2 2 trivial");
  CHECK(triv->level(1).size() == 4);
}

TEST_CASE("transfer and norm in P_Z/6 over C2 are 2x and x^2") {
  const auto p = test::functor("c2", "zmod 6 trivial");
  const TransitiveMap f{0, 1, 0};
  for (int x = 0; x < 6; ++x) {
    const Value v = p->parse(0, std::to_string(x));
    CHECK(p->format(1, p->transfer(f, v)) == std::to_string(2 * x % 6));
    CHECK(p->format(1, p->norm(f, v)) == std::to_string(x * x % 6));
  }
}

TEST_CASE("P_Z: transfer multiplies by the degree, norm raises to it") {
  const auto p = test::functor("s3", "pz");
  for (const TransitiveMap& f : p->context().maps()) {
    const auto d = static_cast<std::int64_t>(p->context().degree(f));
    for (std::int64_t m = -3; m <= 3; ++m) {
      CHECK(p->transfer(f, Value{m}) == Value{d * m});
      std::int64_t pw = 1;
      for (std::int64_t i = 0; i < d; ++i) pw *= m;
      CHECK(p->norm(f, Value{m}) == Value{pw});
      CHECK(p->restrict(f, Value{m}) == Value{m});
    }
  }
}

TEST_CASE("transfers and norms do not depend on coset representatives") {
  for (const char* g : {"c2", "s3", "c2xc2"})
    for (const char* d : {"zmod 6 trivial", "zmod 4 trivial"}) {
      const auto p = std::dynamic_pointer_cast<const FixedPointFunctor>(test::functor(g, d));
      REQUIRE(p);
      const RepresentativeReport r = check_representative_independence(*p);
      CHECK_MESSAGE(r.ok, r.witness);
      CHECK(r.checks > 0);
    }
  const auto swap = std::dynamic_pointer_cast<const FixedPointFunctor>(test::functor("c2", "prodfield 2 2 perm"));
  CHECK(check_representative_independence(*swap).ok);
}

TEST_CASE("G-ring validation") {
  const GroupPtr g = builtin_group("c2");
  CHECK_THROWS_AS(product_field(g, 4, 2, true), InputError);
  CHECK_THROWS(make_functor(test::context("c2"), "zmod 0 trivial"));
  CHECK_THROWS_AS(make_functor(test::context("c2"), "prodfield 4 2 perm"), InputError);
  CHECK_THROWS_AS(make_functor(test::context("c2"), "gring R"), InputError);
}
