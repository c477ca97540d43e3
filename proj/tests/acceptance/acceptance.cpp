// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tambara/axioms.hpp"
#include "tambara/builtin.hpp"
#include "tambara/spectrum.hpp"

using namespace tambara;

namespace {

ContextPtr ctx(const std::string& name) {
  static std::map<std::string, ContextPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  return cache[name] = GroupContext::create(builtin_group(name));
}

FunctorPtr functor(const std::string& group, const std::string& designator) {
  return make_functor(ctx(group), designator);
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) detail = why;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1 ----------------------------------------------------------------------
Outcome norm_example() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto om = omega_functor(ctx("c2"));
  const TransitiveMap p = ctx("c2")->projection(0, 1);
  const Value by_sections = om->norm_by_enumeration(p, om->parse(0, "2*[G/e]"));
  const std::string got = om->format(1, by_sections);
  o.require(got == "2*[G/G] + 1*[G/e]", "got " + got);
  o.require(om->norm(p, Value{2}) == by_sections, "norm polynomial disagrees with enumeration");
  const double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + "s");
  if (o.ok) o.detail = got;
  return o;
}

// ---- 2 ----------------------------------------------------------------------
Outcome axiom_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, FunctorPtr>> cases;
  for (const char* g : {"c2", "c3", "c4", "s3"}) cases.emplace_back(std::string("omega/") + g, functor(g, "omega"));
  for (const char* d : {"zmod 6 trivial", "prodfield 2 2 perm", "prodfield 2 2 trivial", "zmod 4 trivial"})
    cases.emplace_back(std::string(d) + "/c2", functor("c2", d));
  std::size_t identities = 0, skipped = 0;
  for (const auto& [name, t] : cases) {
    const AxiomReport r = verify_axioms(t);
    for (const AxiomCheck& c : r.checks) {
      if (c.informational) continue;
      ++identities;
      skipped += c.skipped;
      o.require(c.ok, name + ": " + c.name + ": " + c.witness);
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 60.0, "took " + std::to_string(s) + "s");
  if (o.ok)
    o.detail = std::to_string(cases.size()) + " functors, " + std::to_string(identities) + " identity families, " +
               std::to_string(skipped) + " diagrams above 10^4 points, " + std::to_string(s).substr(0, 5) + "s";
  return o;
}

// ---- 3 ----------------------------------------------------------------------
Outcome rho_norm() {
  Outcome o;
  std::size_t total = 0;
  for (const char* g : {"c2", "c3", "c4", "s3"}) {
    const RhoNormReport r = check_rho_norm(*omega_functor(ctx(g)), 200, kDefaultSeed, 3);
    total += r.samples;
    o.require(r.ok && r.failures == 0 && r.samples == 200, std::string(g) + ": " + r.witness);
  }
  if (o.ok) o.detail = std::to_string(total) + " samples, 0 failures";
  return o;
}

// ---- 4 ----------------------------------------------------------------------
Outcome omega_mrc() {
  Outcome o;
  for (const char* g : {"c2", "c3", "s3"}) {
    const QuotientResult q = mrcize(functor(g, "omega"));
    const IsoReport iso = first_iso_check(restriction_to_free_level(q.quotient));
    o.require(iso.ok, std::string(g) + ": " + iso.witness);
  }
  // The induced norm over C2: transport m through the isomorphism and back.
  const QuotientResult q = mrcize(functor("c2", "omega"));
  const TambaraMorphism psi = restriction_to_free_level(q.quotient);
  const FunctorPtr pz = psi.target();
  const TransitiveMap p = ctx("c2")->projection(0, 1);
  const std::int64_t unit = psi.apply(0, q.quotient->level(0).basis(0))[0];
  o.require(unit == 1 || unit == -1, "level e of Omega_MRC does not map onto Z");
  for (std::int64_t m = -5; m <= 5 && o.ok; ++m) {
    const Value x = q.quotient->level(0).scale(m * unit, q.quotient->level(0).basis(0));
    const Value induced = psi.apply(1, q.quotient->norm(p, x));
    o.require(induced == Value{m * m} && pz->norm(p, Value{m}) == induced,
              "nm(" + std::to_string(m) + ") = " + pz->format(1, induced));
  }
  if (o.ok) o.detail = "isomorphisms for c2, c3, s3; nm m -> m^2 on [-5,5]";
  return o;
}

// ---- 5 ----------------------------------------------------------------------
Outcome two_omega() {
  Outcome o;
  const FunctorPtr om = functor("c2", "omega");
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < om->num_levels(); ++c) {
    const LevelRing& r = om->level(c);
    std::vector<Value> gens;
    for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.scale(2, r.basis(i)));
    levels.push_back(level_span(r, gens));
  }
  const IdealCheckReport r = check_ideal(IdealFamily(om, levels));
  const std::string expected = "condition (iii) fails: nm along e->G of 2*[G/e] = 2*[G/G] + 1*[G/e] is not in I(G)";
  o.require(!r.is_ideal && r.condition_i && r.condition_ii && !r.condition_iii, "wrong conditions flagged");
  o.require(r.counterexample == expected, "counterexample: " + r.counterexample);
  if (o.ok) o.detail = r.counterexample;
  return o;
}

// ---- 6 ----------------------------------------------------------------------
Outcome spectra(std::vector<SpectrumReport>& keep) {
  Outcome o;
  const SpectrumReport f2 = spec(functor("c2", "zmod 2 trivial"));
  o.require(f2.primes.size() == 1 && f2.ideals[f2.primes[0]].is_zero(), "F2: Spec is not {(0)}");
  o.require(f2.field_like.is_true() && f2.field_like.mode == "proved", "F2: not field-like");

  const FunctorPtr swap_t = functor("c2", "prodfield 2 2 perm");
  const SpectrumReport sw = spec(swap_t);
  o.require(sw.primes.size() == 1 && sw.ideals[sw.primes[0]].is_zero(), "F2xF2 swap: Spec is not {(0)}");
  o.require(sw.field_like.is_true(), "F2xF2 swap: not field-like");
  o.require(!classify(swap_t).level_e_domain, "F2xF2 swap: level e reported as a domain");

  const SpectrumReport tr = spec(functor("c2", "prodfield 2 2 trivial"));
  o.require(tr.primes.size() == 2, "F2xF2 trivial: expected 2 primes");
  o.require(tr.connected.value == Truth::False && tr.connectivity.consistent, "F2xF2 trivial: not disconnected");
  o.require(tr.connectivity.witness.find("a + b = 1, <a><b> = (0)") != std::string::npos,
            "F2xF2 trivial: no idempotent witness");

  const SpectrumReport z4 = spec(functor("c2", "zmod 4 trivial"));
  o.require(z4.reduced.value == Truth::False, "Z/4: reported reduced");
  // T_red -> P_Z/2, reading each class through its Z/4 representative mod 2.
  const auto red = z4.reduction;
  const auto base = std::dynamic_pointer_cast<const FixedPointFunctor>(red->base_ptr());
  const auto z2 = std::dynamic_pointer_cast<const FixedPointFunctor>(functor("c2", "zmod 2 trivial"));
  const TambaraMorphism phi = TambaraMorphism::from_function(red, z2, [&](std::size_t c, const Value& y) {
    return z2->from_ring(c, base->to_ring(c, red->lift(c, y)) % 2);
  });
  o.require(validate_morphism(phi).ok && is_injective(phi) && is_surjective(phi), "Z/4: T_red is not P_Z/2");
  o.require(z4.reduction_homeomorphism, "Z/4: Spec(T_red) -> Spec(T) not a bijection");
  keep = {f2, sw, tr, z4};
  if (o.ok) o.detail = "{(0)}, {(0)}, two primes with idempotent split, T_red = P_Z/2";
  return o;
}

// ---- 7 ----------------------------------------------------------------------
Outcome crt() {
  Outcome o;
  const FunctorPtr p = functor("c2", "zmod 6 trivial");
  const IdealFamily i2 = invariant_ideal_lift(p, level_ideal(p->level(0), {p->parse(0, "2")}));
  const IdealFamily i3 = invariant_ideal_lift(p, level_ideal(p->level(0), {p->parse(0, "3")}));
  const CrtReport r = coprime_and_crt({i2, i3});
  o.require(r.pairwise_coprime, "not coprime: " + r.coprime_failure);
  o.require(r.levelwise_products && r.product_is_intersection, "IJ != I n J: " + r.witness);
  o.require(r.iso_valid && r.iso_bijective && r.iso.has_value(), "CRT map invalid: " + r.witness);
  // Elementwise: all 36 pairs per level separate exactly modulo I n J.
  const IdealFamily meet = combine(CombineOp::Intersect, i2, i3);
  std::size_t pairs = 0;
  if (r.iso)
    for (std::size_t c = 0; c < p->num_levels(); ++c) {
      std::size_t here = 0;
      const LevelRing& lr = p->level(c);
      for (const Value& x : lr.elements())
        for (const Value& y : lr.elements()) {
          ++here;
          const Value dx = quotient_functor(meet).projection.apply(c, x);
          const Value dy = quotient_functor(meet).projection.apply(c, y);
          const bool same = r.iso->apply(c, dx) == r.iso->apply(c, dy);
          o.require(same == meet.contains(c, lr.sub(x, y)), "CRT separation fails at level " + std::to_string(c));
        }
      o.require(here == 36, "expected 36 pair checks at each level");
      pairs += here;
    }
  if (o.ok) o.detail = std::to_string(r.checks) + " report checks, " + std::to_string(pairs) + " pair checks";
  return o;
}

// ---- 8 ----------------------------------------------------------------------
Outcome omega_domain() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (const char* g : {"c2", "c3", "s3"}) {
    const DomainSweep s = omega_domain_sweep(*omega_functor(ctx(g)), 50, kDefaultSeed);
    pairs += s.pairs;
    o.require(s.failures == 0 && s.pairs == 50, std::string(g) + ": " + s.first_failure);
  }
  const double s = seconds_since(t0);
  o.require(s < 120.0, "took " + std::to_string(s) + "s");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs certified";
  return o;
}

// ---- 9 ----------------------------------------------------------------------
Outcome topology(std::vector<SpectrumReport> reports) {
  Outcome o;
  for (const char* g : {"c2", "c3", "s3"})
    for (const char* d : {"zmod 6 trivial", "zmod 4 trivial", "zmod 2 trivial"}) reports.push_back(spec(functor(g, d)));
  std::size_t checks = 0;
  for (const SpectrumReport& s : reports) {
    const LawReport r = check_topology_laws(s);
    checks += r.checks;
    o.require(r.ok, s.owner->name() + ": " + r.witness);
  }
  if (o.ok) o.detail = std::to_string(reports.size()) + " spectra, " + std::to_string(checks) + " checks";
  return o;
}

// ---- 10 ---------------------------------------------------------------------
Outcome maximal_bijection() {
  Outcome o;
  const FunctorPtr p = functor("c2", "zmod 6 trivial");
  const SpectrumReport s = spec(p);
  o.require(s.maximals.size() == 2, "expected 2 maximal ideals");
  o.require(s.bijection_agrees, "maximal ideals differ from the level-e bijection");
  for (const char* q : {"2", "3"}) {
    const IdealFamily lift = invariant_ideal_lift(p, level_ideal(p->level(0), {p->parse(0, q)}));
    bool found = false;
    for (std::size_t m : s.maximals) found |= s.ideals[m] == lift;
    o.require(found, std::string("no maximal ideal over (") + q + ")");
  }
  const SpecInclusionReport d = spec_inclusion_demo(omega_functor(ctx("c2")));
  std::size_t primes = 0;
  for (const auto& e : d.primes) primes += e.prime.value == Truth::True;
  o.require(d.distinct && primes >= 3, "fewer than 3 distinct primes of Omega");
  for (const auto& sep : d.separations) o.require(sep.find(" lies in ") != std::string::npos, "missing separator");
  if (o.ok) o.detail = "maximals over (2), (3); " + std::to_string(primes) + " distinct primes of Omega";
  return o;
}

// ---- 11 ---------------------------------------------------------------------
Outcome saturation() {
  Outcome o;
  const FunctorPtr om = functor("c2", "omega");
  const GenerateResult g = generate(om, {Generator{0, Value{2}}});
  o.require(g.converged, "saturation did not converge");
  o.require(g.ideal.log().has_value() && !g.ideal.log()->steps.empty(), "no derivation log");
  if (!o.ok) return o;
  const auto& steps = g.ideal.log()->steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const bool gen = steps[i].kind == DerivationStep::Kind::Generator;
    o.require(gen || !steps[i].input.empty(), "step " + std::to_string(i) + " has no inputs");
    for (const auto& [coef, j] : steps[i].input) o.require(j < i, "step refers forward");
  }
  o.require(replay(g.ideal), "replay does not reproduce the stored lattice");
  if (o.ok) o.detail = std::to_string(steps.size()) + " steps replayed";
  return o;
}

}  // namespace

int main() {
  std::vector<SpectrumReport> spectra_kept;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"norm of 2*[G/e] over C2", norm_example},
      {"axiom suite", axiom_suite},
      {"rho-norm property", rho_norm},
      {"Omega_MRC = P_Z", omega_mrc},
      {"2*Omega rejected", two_omega},
      {"spectra", [&] { return spectra(spectra_kept); }},
      {"Chinese remainder theorem", crt},
      {"Omega domain-like", omega_domain},
      {"topology laws", [&] { return topology(spectra_kept); }},
      {"maximal-ideal bijection", maximal_bijection},
      {"saturation soundness", saturation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
