#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/error.hpp"

using namespace tambara;

namespace {

std::shared_ptr<const BurnsideFunctor> omega(const std::string& g) { return omega_functor(test::context(g)); }

}  // namespace

TEST_CASE("norm of 2*[G/e] over C2 by explicit sections") {
  const auto om = omega("c2");
  const TransitiveMap p{0, 1, 0};
  const Value x = om->parse(0, "2*[G/e]");
  CHECK(om->format(1, om->norm_by_enumeration(p, x)) == "2*[G/G] + 1*[G/e]");
  CHECK(om->norm(p, x) == om->norm_by_enumeration(p, x));
}

TEST_CASE("Burnside ring of C2: [G/e]^2 = 2[G/e]") {
  const auto om = omega("c2");
  const Value x = om->parse(1, "[G/e]");
  CHECK(om->level(1).mul(x, x) == om->parse(1, "2*[G/e]"));
  CHECK(om->level(1).one() == om->parse(1, "[G/G]"));
}

TEST_CASE("marks are a faithful ring homomorphism") {
  for (const auto& g : builtin_group_names()) {
    CAPTURE(g);
    const auto om = omega(g);
    SeededRng rng(11);
    for (std::size_t c = 0; c < om->num_levels(); ++c)
      for (int i = 0; i < 20; ++i) {
        const Value a = random_value(om->level(c), rng), b = random_value(om->level(c), rng);
        const IntVec ma = om->marks(c, a), mb = om->marks(c, b), mp = om->marks(c, om->level(c).mul(a, b));
        for (std::size_t k = 0; k < ma.size(); ++k) CHECK(mp[k] == ma[k] * mb[k]);
        CHECK(om->from_marks(c, ma) == a);
      }
  }
}

TEST_CASE("norm polynomial agrees with the marks oracle on virtual elements") {
  for (const char* g : {"c2", "c3", "c4", "s3", "c2xc2"}) {
    CAPTURE(g);
    const auto om = omega(g);
    SeededRng rng(5);
    for (const TransitiveMap& f : om->context().maps())
      for (int i = 0; i < 15; ++i) {
        const Value x = random_value(om->level(f.src), rng);
        CHECK(om->norm(f, x) == om->norm_by_marks(f, x));
      }
  }
}

TEST_CASE("norm polynomial agrees with fresh enumeration off the interpolation grid") {
  const auto om = omega("s3");
  const TransitiveMap f = om->context().projection(0, om->catalog().top_class());
  for (std::int64_t m = 0; m <= 4; ++m) CHECK(om->norm(f, Value{m}) == om->norm_by_enumeration(f, IntVec{m}));
}

TEST_CASE("rho of pt_! equals rho") {
  for (const char* g : {"c2", "c3", "c4", "s3"}) {
    const RhoNormReport r = check_rho_norm(*omega(g));
    CHECK_MESSAGE(r.ok, r.witness);
    CHECK(r.samples == kDefaultSamples);
  }
}

TEST_CASE("restriction and transfer matrices on basis elements") {
  const auto om = omega("c2");
  const TransitiveMap p{0, 1, 0};
  CHECK(om->restrict(p, om->parse(1, "[G/e]")) == Value{2});
  CHECK(om->restrict(p, om->parse(1, "[G/G]")) == Value{1});
  CHECK(om->transfer(p, Value{1}) == om->parse(1, "[G/e]"));
}

TEST_CASE("realize and classify_over are inverse") {
  const auto om = omega("s3");
  const std::size_t top = om->catalog().top_class();
  IntVec alpha(om->rank(top), 0);
  alpha[0] = 1;
  alpha[1] = 2;
  CHECK(om->classify_over(top, om->realize(top, alpha)) == alpha);
}

TEST_CASE("element literals") {
  const auto om = omega("s3");
  const std::size_t top = om->catalog().top_class();
  const Value v = om->parse(top, "3*[G/H1] + -2*[G/e] + 1");
  CHECK(om->parse(top, om->format(top, v)) == v);
  CHECK(om->parse(top, "3*[G/H1] - 2*[G/e] + [G/G]") == v);
  CHECK_THROWS_AS(om->parse(top, "3*[G/Q]"), InputError);
  CHECK_THROWS_AS(om->parse(0, "[G/H1]"), InputError);
  CHECK_THROWS_AS(om->parse(top, "2*[G/e] +"), InputError);
}
