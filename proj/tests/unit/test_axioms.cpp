#include <doctest.h>

#include "fixtures.hpp"
#include "tambara/axioms.hpp"

using namespace tambara;

namespace {

// Omega with the transfer along G/e -> G/G shifted by rho(x)*[G/G]. The shift
// is additive, so only the Mackey and projection identities can notice it.
class PerturbedTransfer final : public TambaraFunctor {
 public:
  explicit PerturbedTransfer(std::shared_ptr<const BurnsideFunctor> base)
      : TambaraFunctor(base->context_ptr()), base_(std::move(base)) {}
  std::string name() const override { return "omega-perturbed"; }
  const LevelRing& level(std::size_t cls) const override { return base_->level(cls); }
  Value restrict(const TransitiveMap& f, const Value& y) const override { return base_->restrict(f, y); }
  Value norm(const TransitiveMap& f, const Value& x) const override { return base_->norm(f, x); }
  Value transfer(const TransitiveMap& f, const Value& x) const override {
    Value y = base_->transfer(f, x);
    if (f.src == 0 && f.dst == catalog().top_class()) y[base_->top(f.dst)] += x[0];
    return y;
  }
  std::string format(std::size_t cls, const Value& v) const override { return base_->format(cls, v); }

 private:
  std::shared_ptr<const BurnsideFunctor> base_;
};

}  // namespace

TEST_CASE("Omega satisfies every identity over small groups") {
  for (const char* g : {"c2", "c3"}) {
    CAPTURE(g);
    const AxiomReport r = verify_axioms(omega_functor(test::context(g)));
    CHECK_MESSAGE(r.ok, r.format());
    CHECK(r.checks.size() >= 16);
  }
}

TEST_CASE("fixed point functors satisfy every identity, exhaustively where finite") {
  for (const char* d : {"zmod 6 trivial", "prodfield 2 2 perm", "prodfield 2 2 trivial", "zmod 4 trivial"}) {
    CAPTURE(d);
    const AxiomReport r = verify_axioms(test::functor("c2", d));
    CHECK_MESSAGE(r.ok, r.format());
    const AxiomCheck* mackey = r.find("Mackey condition (transfer)");
    REQUIRE(mackey);
    CHECK(mackey->exhaustive);
  }
  CHECK(verify_axioms(test::functor("s3", "pz")).ok);
}

TEST_CASE("fault injection: a perturbed transfer breaks the Mackey condition") {
  const auto bad = std::make_shared<const PerturbedTransfer>(omega_functor(test::context("c2")));
  const AxiomReport r = verify_axioms(bad);
  CHECK_FALSE(r.ok);
  const AxiomCheck* mackey = r.find("Mackey condition (transfer)");
  REQUIRE(mackey);
  CHECK_FALSE(mackey->ok);
  CHECK_FALSE(mackey->witness.empty());
  // The additive half of the perturbation is invisible on its own.
  CHECK(r.find("transfer is additive")->ok);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  const auto t = omega_functor(test::context("c2"));
  CHECK(verify_axioms(t).format() == verify_axioms(t).format());
}
