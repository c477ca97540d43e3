#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tambara/functor.hpp"

namespace tambara {

struct AxiomBounds {
  std::size_t samples = kDefaultSamples;  // per identity instance when not exhaustive
  std::uint32_t seed = kDefaultSeed;
  std::size_t diagram_points = 10'000;    // exponential/folding diagrams above this are skipped
  std::int64_t box = 3;                   // lattice sample coordinates in [-box, box]
  bool parallel = true;
};

struct AxiomCheck {
  std::string name;
  bool ok = true;
  bool exhaustive = true;
  bool informational = false;  // reported but never fails the suite
  std::size_t instances = 0;   // squares, diagrams or maps examined
  std::size_t cases = 0;       // element tuples evaluated
  std::size_t skipped = 0;     // instances refused by the point bound
  std::string witness;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;  // fixed order

  const AxiomCheck* find(const std::string& name) const;
  std::string format() const;
};

// Ring axioms, structure-map homomorphism properties, functoriality, both Mackey
// conditions, the distributive law, f.(0) = eta+(1), projection and addition
// formulas, the five shriek identities, and (informational) additive cohomology.
AxiomReport verify_axioms(const FunctorPtr& t, const AxiomBounds& bounds = {});

// Every tuple of elements of T(X1) x ... when all levels are finite tables of
// size <= 64 and the joint domain has <= 4096 tuples; otherwise `samples` draws.
inline constexpr std::size_t kExhaustiveDomainLimit = 4096;
std::vector<std::vector<SetValue>> element_tuples(const TambaraFunctor& t, const std::vector<const Evaluation*>& vars,
                                                  std::size_t samples, SeededRng& rng, bool& exhaustive,
                                                  std::int64_t box = 3);

}  // namespace tambara
