#include "tambara/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tambara/error.hpp"
#include "tambara/fixed_point.hpp"

namespace tambara {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: break;
  }
  return "unknown";
}

namespace {

Flag flag(bool v, std::string mode) { return Flag{v ? Truth::True : Truth::False, std::move(mode)}; }

bool all_finite(const TambaraFunctor& t) {
  for (std::size_t c = 0; c < t.num_levels(); ++c)
    if (!t.level(c).is_finite()) return false;
  return true;
}

using Key = std::vector<std::vector<bool>>;

Key key_of(const IdealFamily& i) {
  Key k;
  for (const auto& l : i.levels()) k.push_back(l.members);
  return k;
}

bool is_domain(const LevelRing& r) {
  if (r.is_finite()) {
    if (r.size() < 2) return false;
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b)
        if (static_cast<int>(a) != r.zero_index() && static_cast<int>(b) != r.zero_index() &&
            r.mul_index(static_cast<int>(a), static_cast<int>(b)) == r.zero_index())
          return false;
    return true;
  }
  // Only Z itself is recognised among lattice rings.
  return r.rank() == 1 && r.one() == Value{1};
}

bool is_field(const LevelRing& r) {
  if (!r.is_finite() || r.size() < 2) return false;
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (static_cast<int>(a) == r.zero_index()) continue;
    bool unit = false;
    for (std::size_t b = 0; b < r.size() && !unit; ++b)
      unit = r.mul_index(static_cast<int>(a), static_cast<int>(b)) == r.one_index();
    if (!unit) return false;
  }
  return true;
}

std::int64_t as_prime(const LevelRing& r, const LevelIdeal& i) {
  if (r.is_finite() || r.rank() != 1 || r.one() != Value{1} || i.basis.size() != 1) return 0;
  const std::int64_t q = i.basis[0][0];
  if (q < 2) return 0;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return 0;
  return q;
}

}  // namespace

// ---- Enumeration ------------------------------------------------------------

std::vector<IdealFamily> enumerate_ideals(const FunctorPtr& t, std::size_t cap) {
  if (!all_finite(*t)) throw UnsupportedError("ideal enumeration needs finite-table levels");
  const GroupContext& ctx = t->context();
  const std::size_t n = t->num_levels();
  std::vector<std::vector<LevelIdeal>> cands;
  std::size_t total = 1;
  for (std::size_t c = 0; c < n; ++c) {
    cands.push_back(finite_ring_ideals(t->level(c)));
    if (cands.back().size() > cap / total) throw ResourceCapError("too many candidate ideal families");
    total *= cands.back().size();
  }
  struct Tables {
    std::vector<int> res, tr, nm;
  };
  std::vector<Tables> tab;
  for (const TransitiveMap& f : ctx.maps()) {
    Tables tb;
    for (const Value& y : t->level(f.dst).elements()) tb.res.push_back(static_cast<int>(t->restrict(f, y)[0]));
    for (const Value& x : t->level(f.src).elements()) {
      tb.tr.push_back(static_cast<int>(t->transfer(f, x)[0]));
      tb.nm.push_back(static_cast<int>(t->norm(f, x)[0]));
    }
    tab.push_back(std::move(tb));
  }
  auto map_ok = [&](std::size_t id, const LevelIdeal& src, const LevelIdeal& dst) {
    const Tables& tb = tab[id];
    for (std::size_t y = 0; y < dst.members.size(); ++y)
      if (dst.members[y] && !src.members[tb.res[y]]) return false;
    for (std::size_t x = 0; x < src.members.size(); ++x)
      if (src.members[x] && (!dst.members[tb.tr[x]] || !dst.members[tb.nm[x]])) return false;
    return true;
  };
  // Maps grouped by the later of their two levels, for pruning.
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t id = 0; id < ctx.maps().size(); ++id) {
    const TransitiveMap& f = ctx.maps()[id];
    closing[std::max(f.src, f.dst)].push_back(id);
  }
  Certificate cert;
  cert.restriction = cert.transfer = cert.shriek = CertMode::ProvedExhaustive;
  std::vector<IdealFamily> out;
  std::vector<std::size_t> pick(n, 0);
  std::vector<const LevelIdeal*> chosen(n, nullptr);
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (c == n) {
      std::vector<LevelIdeal> levels;
      for (const auto* l : chosen) levels.push_back(*l);
      out.emplace_back(t, std::move(levels), cert);
      return;
    }
    for (const LevelIdeal& cand : cands[c]) {
      chosen[c] = &cand;
      bool ok = true;
      for (std::size_t id : closing[c]) {
        const TransitiveMap& f = ctx.maps()[id];
        if (!map_ok(id, *chosen[f.src], *chosen[f.dst])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, c + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---- IdealLattice -----------------------------------------------------------

IdealLattice::IdealLattice(const FunctorPtr& t, std::vector<IdealFamily> ideals)
    : owner_(t), ideals_(std::move(ideals)) {
  const std::size_t n = ideals_.size();
  std::map<Key, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) where[key_of(ideals_[i])] = i;
  auto find = [&](const std::vector<LevelIdeal>& levels) {
    Key k;
    for (const auto& l : levels) k.push_back(l.members);
    const auto it = where.find(k);
    if (it == where.end()) throw InputError("ideal list is not closed under lattice operations");
    return it->second;
  };
  const std::size_t nl = t->num_levels();
  subset_.assign(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) subset_[a][b] = ideals_[a].subset_of(ideals_[b]);
  whole_ = find(IdealFamily::whole(t).levels());
  zero_ = find(IdealFamily::zero(t).levels());
  // The smallest listed ideal containing the given level subsets: the listed
  // ideals are all ideals, so this is the intersection of those containing them.
  auto closure = [&](const std::vector<LevelIdeal>& seed) {
    std::vector<LevelIdeal> acc = ideals_[whole_].levels();
    for (std::size_t k = 0; k < n; ++k) {
      bool contains = true;
      for (std::size_t c = 0; c < nl && contains; ++c)
        contains = level_subset(t->level(c), seed[c], ideals_[k].level(c));
      if (contains)
        for (std::size_t c = 0; c < nl; ++c) acc[c] = level_intersect(t->level(c), acc[c], ideals_[k].level(c));
    }
    return find(acc);
  };
  product_.assign(n, std::vector<std::size_t>(n));
  sum_ = meet_ = product_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<LevelIdeal> prod, sum, meet;
      for (std::size_t c = 0; c < nl; ++c) {
        const LevelRing& r = t->level(c);
        prod.push_back(level_product(r, ideals_[a].level(c), ideals_[b].level(c)));
        sum.push_back(level_sum(r, ideals_[a].level(c), ideals_[b].level(c)));
        meet.push_back(level_intersect(r, ideals_[a].level(c), ideals_[b].level(c)));
      }
      product_[a][b] = product_[b][a] = closure(prod);
      sum_[a][b] = sum_[b][a] = closure(sum);
      meet_[a][b] = meet_[b][a] = find(meet);
    }
}

std::size_t IdealLattice::index_of(const IdealFamily& i) const {
  for (std::size_t k = 0; k < ideals_.size(); ++k)
    if (ideals_[k] == i) return k;
  throw InputError("ideal is not among the enumerated ideals");
}

bool IdealLattice::is_prime(std::size_t p) const {
  if (p == whole_) return false;
  for (std::size_t a = 0; a < size(); ++a) {
    if (subset_[a][p]) continue;
    for (std::size_t b = a; b < size(); ++b)
      if (!subset_[b][p] && subset_[product_[a][b]][p]) return false;
  }
  return true;
}

bool IdealLattice::is_maximal(std::size_t p) const {
  if (p == whole_) return false;
  for (std::size_t q = 0; q < size(); ++q)
    if (q != p && q != whole_ && subset_[p][q]) return false;
  return true;
}

// ---- MRC --------------------------------------------------------------------

bool is_mrc(const TambaraFunctor& t) {
  const LevelRing& re = t.level(0);
  for (std::size_t c = 0; c < t.num_levels(); ++c) {
    const LevelRing& r = t.level(c);
    const TransitiveMap f{0, c, 0};
    if (r.is_finite()) {
      std::vector<Value> seen;
      for (const Value& x : r.elements()) seen.push_back(t.restrict(f, x));
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    } else if (r.rank() > 0) {
      if (re.is_finite()) return false;
      IntMat images;
      for (std::size_t i = 0; i < r.rank(); ++i) images.push_back(t.restrict(f, r.basis(i)));
      if (!left_kernel(images, re.rank()).empty()) return false;
    }
  }
  return true;
}

TambaraMorphism restriction_to_free_level(const FunctorPtr& t) {
  const LevelRing& re = t->level(0);
  const GroupContext& ctx = t->context();
  if (re.is_finite()) {
    std::vector<std::vector<int>> action;
    for (int g = 0; g < t->group().order(); ++g) {
      std::vector<int> row;
      for (const Value& x : re.elements()) row.push_back(static_cast<int>(t->act_on_free_level(g, x)[0]));
      action.push_back(std::move(row));
    }
    auto gring = std::make_shared<const GRing>(ctx.group_ptr(), re, std::move(action), "T(G/e)");
    auto p = std::make_shared<const FixedPointFunctor>(t->context_ptr(), gring);
    return TambaraMorphism::from_function(t, p, [&](std::size_t c, const Value& x) {
      return p->from_ring(c, static_cast<int>(t->restrict(TransitiveMap{0, c, 0}, x)[0]));
    });
  }
  if (!is_domain(re)) throw UnsupportedError("level e must be a finite ring or Z");
  for (int g = 0; g < t->group().order(); ++g)
    if (t->act_on_free_level(g, re.one()) != re.one() || t->act_on_free_level(g, Value{1}) != Value{1})
      throw UnsupportedError("G must act trivially on level e = Z");
  auto pz = integer_fixed_point_functor(t->context_ptr());
  return TambaraMorphism::from_function(
      t, pz, [&](std::size_t c, const Value& x) { return t->restrict(TransitiveMap{0, c, 0}, x); });
}

TambaraMorphism mrc_embed(const FunctorPtr& t) {
  if (!is_mrc(*t)) throw InputError("functor does not satisfy MRC; no embedding into a fixed-point functor");
  return restriction_to_free_level(t);
}

QuotientResult mrcize(const FunctorPtr& t) {
  return quotient_functor(invariant_ideal_lift(t, level_zero(t->level(0))));
}

FactorizationReport mrc_factorization(const TambaraMorphism& phi) {
  FactorizationReport rep;
  const FunctorPtr& t = phi.source();
  rep.target_mrc = is_mrc(*phi.target());
  const IdealFamily i0 = invariant_ideal_lift(t, level_zero(t->level(0)));
  rep.kernel_contains_i0 = i0.subset_of(kernel(phi));
  if (!rep.target_mrc || !rep.kernel_contains_i0) {
    rep.witness = rep.target_mrc ? "kernel does not contain I_(0)" : "target is not MRC";
    return rep;
  }
  const QuotientResult q = quotient_functor(i0);
  const auto quot = q.quotient;
  TambaraMorphism psi = TambaraMorphism::from_function(
      quot, phi.target(), [&](std::size_t c, const Value& y) { return phi.apply(c, quot->lift(c, y)); });
  const MorphismReport v = validate_morphism(psi);
  rep.factor_valid = v.ok;
  if (!v.ok) rep.witness = v.witness;
  rep.commutes = is_surjective(q.projection);
  for (std::size_t c = 0; c < t->num_levels() && rep.commutes; ++c) {
    const LevelRing& r = t->level(c);
    std::vector<Value> dom;
    if (r.is_finite())
      dom = r.elements();
    else
      for (std::size_t i = 0; i < r.rank(); ++i) dom.push_back(r.basis(i));
    for (const Value& x : dom)
      if (psi.apply(c, q.projection.apply(c, x)) != phi.apply(c, x)) {
        rep.commutes = false;
        rep.witness = "factorization differs at " + t->format(c, x);
        break;
      }
  }
  rep.ok = rep.factor_valid && rep.commutes;
  return rep;
}

// ---- Prime and maximal verdicts ---------------------------------------------

std::vector<IdealFamily> maximal_ideals_by_bijection(const FunctorPtr& t) {
  const LevelRing& re = t->level(0);
  if (!re.is_finite()) throw UnsupportedError("level-e ideal enumeration needs a finite ring");
  std::vector<LevelIdeal> inv;
  for (LevelIdeal& i : finite_ring_ideals(re))
    if (!level_is_whole(re, i) && is_g_invariant(*t, i)) inv.push_back(std::move(i));
  std::vector<IdealFamily> out;
  for (const LevelIdeal& i : inv) {
    bool maximal = true;
    for (const LevelIdeal& j : inv)
      if (!(j == i) && level_subset(re, i, j)) maximal = false;
    if (maximal) out.push_back(invariant_ideal_lift(t, i));
  }
  return out;
}

PrimeVerdict is_maximal(const IdealFamily& p) {
  if (p.is_whole()) throw InputError("the whole functor is not a proper ideal");
  const FunctorPtr& t = p.owner();
  PrimeVerdict v;
  if (all_finite(*t)) {
    IdealLattice lat(t, enumerate_ideals(t));
    v.value = lat.is_maximal(lat.index_of(p)) ? Truth::True : Truth::False;
    v.mode = "proved";
    v.reason = "exhaustive enumeration of ideals";
    return v;
  }
  const LevelRing& re = t->level(0);
  if (re.is_finite() || !is_domain(re)) {
    v.reason = "level e is neither finite nor Z";
    return v;
  }
  // Maximal ideals correspond to maximal G-invariant ideals of Z, i.e. (q) for q prime.
  v.mode = "by-theorem";
  const std::int64_t q = as_prime(re, p.level(0));
  if (!q) {
    v.value = Truth::False;
    v.reason = "level-e component is not a maximal ideal of Z";
  } else if (!(invariant_ideal_lift(t, p.level(0)) == p)) {
    v.value = Truth::False;
    v.reason = "not the largest ideal over its level-e component";
  } else {
    v.value = Truth::True;
    v.reason = "lift of the maximal ideal (" + std::to_string(q) + ")";
  }
  return v;
}

PrimeVerdict is_prime(const IdealFamily& p) {
  if (p.is_whole()) throw InputError("the whole functor is not a proper ideal");
  const FunctorPtr& t = p.owner();
  PrimeVerdict v;
  if (all_finite(*t)) {
    IdealLattice lat(t, enumerate_ideals(t));
    v.value = lat.is_prime(lat.index_of(p)) ? Truth::True : Truth::False;
    v.mode = "proved";
    v.reason = "ideal-pair criterion over all enumerated ideals";
    return v;
  }
  if (t->is_burnside() && p.is_zero()) {
    v.value = Truth::True;
    v.mode = "by-theorem";
    v.reason = "Omega is domain-like (rho-certified products)";
    return v;
  }
  try {
    if (invariant_ideal_lift(t, p.level(0)) == p) {
      const QuotientResult q = quotient_functor(p);
      if (is_mrc(*q.quotient) && is_domain(q.quotient->level(0))) {
        v.value = Truth::True;
        v.mode = "by-theorem";
        v.reason = "quotient satisfies MRC and its level e is an integral domain";
        return v;
      }
    }
  } catch (const std::exception& e) {
    v.reason = e.what();
  }
  const PrimeVerdict m = is_maximal(p);
  if (m.value == Truth::True) {
    v.value = Truth::True;
    v.mode = "by-theorem";
    v.reason = "maximal ideals are prime";
    return v;
  }
  if (v.reason.empty()) v.reason = "no theorem-backed route applies to this lattice ideal";
  return v;
}

// ---- Spec -------------------------------------------------------------------

namespace {

std::vector<bool> closed_set(const IdealLattice& lat, const std::vector<std::size_t>& primes, std::size_t i) {
  std::vector<bool> v(primes.size());
  for (std::size_t k = 0; k < primes.size(); ++k) v[k] = lat.subset(i, primes[k]);
  return v;
}

std::vector<std::size_t> positions(const std::vector<bool>& v) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) out.push_back(k);
  return out;
}

std::vector<std::size_t> prime_indices(const IdealLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_prime(i)) out.push_back(i);
  return out;
}

ConnectivityReport connectivity(const IdealLattice& lat, const std::vector<std::size_t>& primes,
                                const FunctorPtr& red) {
  ConnectivityReport rep;
  auto& cond = rep.conditions;
  // (1) a partition of Spec into two nonempty closed sets.
  std::vector<std::vector<bool>> closed;
  for (std::size_t i = 0; i < lat.size(); ++i) closed.push_back(closed_set(lat, primes, i));
  for (std::size_t a = 0; a < closed.size() && !cond[0]; ++a)
    for (std::size_t b = 0; b < closed.size() && !cond[0]; ++b) {
      bool cover = true, disjoint = true, na = false, nb = false;
      for (std::size_t k = 0; k < primes.size(); ++k) {
        cover &= closed[a][k] || closed[b][k];
        disjoint &= !(closed[a][k] && closed[b][k]);
        na |= closed[a][k];
        nb |= closed[b][k];
      }
      cond[0] = cover && disjoint && na && nb;
    }

  IdealLattice rl(red, enumerate_ideals(red));
  // (2) and (5) on T_red.
  for (std::size_t a = 0; a < rl.size(); ++a)
    for (std::size_t b = a + 1; b < rl.size(); ++b) {
      if (a == rl.whole() || b == rl.whole()) continue;
      if (rl.sum(a, b) != rl.whole() || rl.intersection(a, b) != rl.zero()) continue;
      cond[1] = true;
      if (!cond[4]) {
        const CrtReport crt = coprime_and_crt({rl.ideals()[a], rl.ideals()[b]});
        cond[4] = crt.ok() && rl.ideals()[rl.product(a, b)].is_zero();
      }
    }
  // (3), (4): a + b = 1 with <a><b> = 0 and a, b nonzero.
  bool every = red->num_levels() > 0;
  for (std::size_t c = 0; c < red->num_levels(); ++c) {
    const LevelRing& r = red->level(c);
    bool here = false;
    for (const Value& a : r.elements()) {
      const Value b = r.sub(r.one(), a);
      if (r.is_zero(a) || r.is_zero(b)) continue;
      const std::size_t ia = rl.index_of(generate(red, {Generator{c, a}}).ideal);
      const std::size_t ib = rl.index_of(generate(red, {Generator{c, b}}).ideal);
      if (rl.product(ia, ib) == rl.zero()) {
        here = true;
        if (rep.witness.empty())
          rep.witness = "a = " + red->format(c, a) + ", b = " + red->format(c, b) + " at " +
                        red->catalog().class_name(c) + ": a + b = 1, <a><b> = (0)";
        break;
      }
    }
    every &= here;
    cond[3] |= here;
  }
  cond[2] = every;
  rep.consistent = std::all_of(cond.begin(), cond.end(), [&](bool x) { return x == cond[0]; });
  return rep;
}

}  // namespace

SpectrumReport spec(const FunctorPtr& t, const std::vector<std::pair<std::string, IdealFamily>>& named,
                    std::size_t cap) {
  SpectrumReport rep;
  rep.owner = t;
  IdealLattice lat(t, enumerate_ideals(t, cap));
  rep.ideals = lat.ideals();
  rep.primes = prime_indices(lat);
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.is_maximal(i)) rep.maximals.push_back(i);

  rep.closed_sets.emplace_back("(0)", positions(closed_set(lat, rep.primes, lat.zero())));
  rep.closed_sets.emplace_back("T", positions(closed_set(lat, rep.primes, lat.whole())));
  for (const auto& [name, ideal] : named)
    rep.closed_sets.emplace_back(name, positions(closed_set(lat, rep.primes, lat.index_of(ideal))));
  for (std::size_t k = 0; k < rep.primes.size(); ++k)
    rep.closed_sets.emplace_back("p" + std::to_string(k + 1), positions(closed_set(lat, rep.primes, rep.primes[k])));

  rep.mrc = flag(is_mrc(*t), "proved");
  const bool nonzero = lat.zero() != lat.whole();
  rep.domain_like = flag(nonzero && lat.is_prime(lat.zero()), "proved");
  rep.field_like = flag(nonzero && lat.is_maximal(lat.zero()), "proved");

  IdealFamily nil = IdealFamily::whole(t);
  for (std::size_t p : rep.primes) nil = combine(CombineOp::Intersect, nil, rep.ideals[p]);
  nil = rep.ideals[lat.index_of(nil)];
  rep.reduced = flag(nil.is_zero(), "proved");
  rep.nilradical = nil;
  const QuotientResult red = quotient_functor(nil);
  rep.reduction = red.quotient;

  // Spec(T_red) -> Spec(T) by preimage must be a bijection.
  IdealLattice rl(red.quotient, enumerate_ideals(red.quotient, cap));
  const auto rprimes = prime_indices(rl);
  std::vector<std::size_t> hit;
  bool ok = true;
  for (std::size_t q : rprimes) {
    const std::size_t i = lat.index_of(preimage(red.projection, rl.ideals()[q]));
    ok &= lat.is_prime(i);
    hit.push_back(i);
  }
  std::sort(hit.begin(), hit.end());
  rep.reduction_homeomorphism = ok && hit == rep.primes;

  std::vector<std::size_t> bij;
  for (const IdealFamily& m : maximal_ideals_by_bijection(t)) bij.push_back(lat.index_of(m));
  std::sort(bij.begin(), bij.end());
  rep.bijection_agrees = bij == rep.maximals;

  rep.connectivity = connectivity(lat, rep.primes, red.quotient);
  rep.connected = flag(!rep.connectivity.conditions[0], "proved");
  return rep;
}

std::string SpectrumReport::format() const {
  std::ostringstream os;
  os << "spectrum of " << owner->name() << "\n";
  os << "ideals " << ideals.size() << ", primes " << primes.size() << ", maximal " << maximals.size() << "\n";
  for (std::size_t k = 0; k < primes.size(); ++k) {
    const bool maximal = std::find(maximals.begin(), maximals.end(), primes[k]) != maximals.end();
    os << "prime p" << (k + 1) << (maximal ? " (maximal)" : "") << "\n";
    std::istringstream body(ideals[primes[k]].format());
    std::string line;
    std::getline(body, line);
    while (std::getline(body, line)) os << "  " << line << "\n";
  }
  for (const auto& [name, set] : closed_sets) {
    os << "closed V(" << name << ") = {";
    for (std::size_t i = 0; i < set.size(); ++i) os << (i ? ", " : "") << "p" << (set[i] + 1);
    os << "}\n";
  }
  auto line = [&](const char* name, const Flag& f) {
    os << "flag " << name << " = " << to_string(f.value) << " (" << f.mode << ")\n";
  };
  line("reduced", reduced);
  line("connected", connected);
  line("domain_like", domain_like);
  line("field_like", field_like);
  line("mrc", mrc);
  os << "reduction homeomorphism = " << (reduction_homeomorphism ? "verified" : "FAILED") << "\n";
  os << "maximal ideals match level-e bijection = " << (bijection_agrees ? "yes" : "NO") << "\n";
  os << "connectivity conditions =";
  for (bool c : connectivity.conditions) os << " " << (c ? 1 : 0);
  os << (connectivity.consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
  if (!connectivity.witness.empty()) os << "split witness: " << connectivity.witness << "\n";
  return os.str();
}

LawReport check_topology_laws(const SpectrumReport& s) {
  LawReport rep;
  IdealLattice lat(s.owner, s.ideals);
  const auto& pr = s.primes;
  auto v = [&](std::size_t i) { return closed_set(lat, pr, i); };
  auto fail = [&](const std::string& why) {
    if (rep.ok) rep.witness = why;
    rep.ok = false;
  };
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = 0; b < lat.size(); ++b) {
      const auto va = v(a), vb = v(b), vp = v(lat.product(a, b)), vs = v(lat.sum(a, b)), vm = v(lat.intersection(a, b));
      for (std::size_t k = 0; k < pr.size(); ++k) {
        rep.checks += 3;
        if (vp[k] != (va[k] || vb[k])) fail("V(IJ) != V(I) u V(J) for ideals " + std::to_string(a) + ", " + std::to_string(b));
        if (vs[k] != (va[k] && vb[k])) fail("V(I+J) != V(I) n V(J) for ideals " + std::to_string(a) + ", " + std::to_string(b));
        if ((va[k] || vb[k]) && !vm[k]) fail("V(I n J) misses V(I) u V(J) for ideals " + std::to_string(a) + ", " + std::to_string(b));
      }
    }
  for (std::size_t a = 0; a < lat.size(); ++a) {
    const std::size_t r = lat.index_of(radical(lat.ideals()[a]));
    ++rep.checks;
    if (v(r) != v(a)) fail("V(sqrt I) != V(I) for ideal " + std::to_string(a));
    for (std::size_t k = 0; k < pr.size(); ++k)
      if (lat.subset(a, pr[k]) && !lat.subset(r, pr[k])) fail("sqrt I not inside a prime of V(I), ideal " + std::to_string(a));
  }
  for (std::size_t m : s.maximals) {
    ++rep.checks;
    if (std::find(pr.begin(), pr.end(), m) == pr.end()) fail("a maximal ideal is not prime");
  }
  return rep;
}

SpecMapReport spec_map(const TambaraMorphism& phi, std::size_t cap) {
  SpecMapReport rep;
  const FunctorPtr& t = phi.source();
  const FunctorPtr& s = phi.target();
  IdealLattice lt(t, enumerate_ideals(t, cap));
  IdealLattice ls(s, enumerate_ideals(s, cap));
  const auto pt = prime_indices(lt);
  const auto ps = prime_indices(ls);
  for (std::size_t q : ps) {
    const std::size_t i = lt.index_of(preimage(phi, ls.ideals()[q]));
    const auto it = std::find(pt.begin(), pt.end(), i);
    if (it == pt.end()) {
      rep.well_defined = false;
      rep.witness = "preimage of a prime is not prime";
      rep.map.push_back(pt.size());
    } else {
      rep.map.push_back(static_cast<std::size_t>(it - pt.begin()));
    }
  }
  // The preimage of each closed set V(I) must be V(J) for some ideal J of S.
  std::vector<std::vector<bool>> closed_s;
  for (std::size_t j = 0; j < ls.size(); ++j) closed_s.push_back(closed_set(ls, ps, j));
  for (std::size_t i = 0; i < lt.size() && rep.well_defined; ++i) {
    const auto vi = closed_set(lt, pt, i);
    std::vector<bool> pre(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) pre[k] = vi[rep.map[k]];
    if (std::find(closed_s.begin(), closed_s.end(), pre) == closed_s.end()) {
      rep.continuous = false;
      if (rep.witness.empty()) rep.witness = "preimage of V(ideal " + std::to_string(i) + ") is not closed";
    }
  }
  rep.surjective_case = is_surjective(phi);
  if (rep.surjective_case && rep.well_defined) {
    auto image = rep.map;
    std::sort(image.begin(), image.end());
    const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
    const auto vk = positions(closed_set(lt, pt, lt.index_of(kernel(phi))));
    rep.onto_kernel_closed_set = injective && image == vk;
  }
  return rep;
}

// ---- classify ---------------------------------------------------------------

ClassifyReport classify(const FunctorPtr& t) {
  ClassifyReport rep;
  const LevelRing& re = t->level(0);
  const bool mrc = is_mrc(*t);
  rep.mrc = flag(mrc, "proved");
  rep.level_e_domain = is_domain(re);
  const bool finite_owner = all_finite(*t);

  bool no_invariant = false;
  if (re.is_finite()) {
    for (const LevelIdeal& i : finite_ring_ideals(re))
      if (is_g_invariant(*t, i)) ++rep.invariant_ideals;
    no_invariant = re.size() > 1 && rep.invariant_ideals == 2;
  }
  // A nonzero lattice level e always has the proper G-invariant ideal 2 T(G/e).
  rep.field_like = flag(mrc && no_invariant, "by-theorem");

  std::optional<IdealLattice> lat;
  if (finite_owner) {
    lat.emplace(t, enumerate_ideals(t));
    const bool nonzero = lat->zero() != lat->whole();
    const bool exact_field = nonzero && lat->is_maximal(lat->zero());
    if (exact_field != rep.field_like.is_true())
      throw std::logic_error("field-like criterion disagrees with enumeration");
    rep.field_like.mode = "proved";
    rep.domain_like = flag(nonzero && lat->is_prime(lat->zero()), "proved");
    rep.reduced = flag(radical(IdealFamily::zero(t)).is_zero(), "proved");
  } else {
    if (t->is_burnside())
      rep.domain_like = flag(true, "by-theorem");
    else if (rep.field_like.is_true() || (mrc && rep.level_e_domain))
      rep.domain_like = flag(true, "by-theorem");
    if (rep.domain_like.is_true()) rep.reduced = flag(true, "by-theorem");
  }

  if (rep.field_like.is_true() && re.is_finite()) {
    std::vector<int> fixed;
    for (const Value& x : re.elements()) {
      bool inv = true;
      for (int g = 0; g < t->group().order() && inv; ++g) inv = t->act_on_free_level(g, x) == x;
      if (inv) fixed.push_back(static_cast<int>(x[0]));
    }
    bool field = fixed.size() > 1;
    for (int x : fixed) {
      if (x == re.zero_index()) continue;
      bool unit = false;
      for (int y : fixed) unit |= re.mul_index(x, y) == re.one_index();
      field &= unit;
    }
    rep.fixed_field_e = field;
    const std::size_t top = t->catalog().top_class();
    bool sub = is_field(t->level(top));
    for (const Value& y : t->level(top).elements()) {
      const Value x = t->restrict(TransitiveMap{0, top, 0}, y);
      sub &= std::find(fixed.begin(), fixed.end(), static_cast<int>(x[0])) != fixed.end();
    }
    rep.top_subfield = sub;
  }
  return rep;
}

std::string ClassifyReport::format() const {
  std::ostringstream os;
  auto line = [&](const char* name, const Flag& f) {
    os << "flag " << name << " = " << to_string(f.value) << " (" << f.mode << ")\n";
  };
  line("mrc", mrc);
  line("field_like", field_like);
  line("domain_like", domain_like);
  line("reduced", reduced);
  os << "level e integral domain = " << (level_e_domain ? "true" : "false") << "\n";
  if (invariant_ideals) os << "G-invariant ideals of level e = " << invariant_ideals << "\n";
  if (fixed_field_e) os << "fixed ring of level e is a field = " << (*fixed_field_e ? "true" : "false") << "\n";
  if (top_subfield) os << "top level is a subfield = " << (*top_subfield ? "true" : "false") << "\n";
  return os.str();
}

// ---- Omega domain witness ---------------------------------------------------

DomainWitness omega_domain_witness(const BurnsideFunctor& omega, std::size_t cls_a, const Value& a, std::size_t cls_b,
                                   const Value& b) {
  const SubgroupCatalog& cat = omega.catalog();
  const GroupContext& ctx = omega.context();
  const std::size_t top = cat.top_class();
  auto side = [&](std::size_t cls, const Value& x) {
    if (cls >= omega.num_levels() || !omega.level(cls).is_valid(x)) throw InputError("not an element of Omega");
    if (vec_is_zero(x)) throw InputError("the domain witness needs nonzero elements");
    const LocalClasses& loc = cat.local(cls);
    std::size_t pick = x.size();
    for (std::size_t i = 0; i < x.size() && pick == x.size(); ++i) {
      if (!x[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < x.size() && maximal; ++j)
        if (j != i && x[j] && loc.precedes[i][j]) maximal = false;
      if (maximal) pick = i;
    }
    DomainWitness::Side s;
    s.level = cls;
    s.element = x;
    s.subgroup = loc.reps[pick];
    const std::size_t kc = cat.class_of(s.subgroup);
    const SubgroupMask k = cat.subgroup(s.subgroup).mask;
    int g = -1;
    for (int h = 0; h < omega.group().order() && g < 0; ++h)
      if (cat.conjugate(cat.rep_subgroup(kc).mask, h) == k) g = h;
    s.nu = ctx.canonical(TransitiveMap{kc, cls, g});
    s.restricted = omega.restrict(s.nu, x);
    s.rho = omega.rho(kc, s.restricted);
    s.pushed = shriek(omega, TransitiveMap{kc, top, 0}, s.restricted);
    return s;
  };
  DomainWitness w;
  w.a = side(cls_a, a);
  w.b = side(cls_b, b);
  w.product = omega.level(top).mul(w.a.pushed, w.b.pushed);
  w.rho_product = omega.rho(top, w.product);
  w.ok = w.a.rho != 0 && w.b.rho != 0 && omega.rho(top, w.a.pushed) == w.a.rho &&
         omega.rho(top, w.b.pushed) == w.b.rho && w.rho_product == w.a.rho * w.b.rho && w.rho_product != 0;
  return w;
}

std::string DomainWitness::format(const BurnsideFunctor& omega) const {
  std::ostringstream os;
  const GroupContext& ctx = omega.context();
  for (const Side* s : {&a, &b}) {
    const std::size_t kc = s->nu.src;
    os << (s == &a ? "a" : "b") << " = " << omega.format(s->level, s->element) << " at "
       << omega.catalog().class_name(s->level) << "\n";
    os << "  K maximal in support: " << omega.catalog().class_name(kc) << ", nu = " << ctx.describe(s->nu) << "\n";
    os << "  nu^*(x) = " << omega.format(kc, s->restricted) << ", rho = " << s->rho << "\n";
    os << "  pt_!(nu^*(x)) = " << omega.format(omega.catalog().top_class(), s->pushed) << "\n";
  }
  os << "product = " << omega.format(omega.catalog().top_class(), product) << "\n";
  os << "rho(product) = " << rho_product << " = " << a.rho << " * " << b.rho << (ok ? " (nonzero, certified)" : " (FAILED)")
     << "\n";
  return os.str();
}

DomainSweep omega_domain_sweep(const BurnsideFunctor& omega, std::size_t pairs, std::uint32_t seed,
                               std::int64_t bound) {
  DomainSweep rep;
  SeededRng rng(seed);
  auto draw = [&](std::size_t& cls) {
    cls = static_cast<std::size_t>(rng.below(omega.num_levels()));
    Value v;
    do v = random_value(omega.level(cls), rng, bound);
    while (vec_is_zero(v));
    return v;
  };
  for (std::size_t i = 0; i < pairs; ++i) {
    std::size_t ca = 0, cb = 0;
    const Value a = draw(ca);
    const Value b = draw(cb);
    DomainWitness w = omega_domain_witness(omega, ca, a, cb, b);
    ++rep.pairs;
    if (!w.ok) {
      if (!rep.failures) rep.first_failure = w.format(omega);
      ++rep.failures;
    }
    if (!rep.first) rep.first = std::move(w);
  }
  return rep;
}

// ---- Spec inclusion ---------------------------------------------------------

SpecInclusionReport spec_inclusion_demo(const std::shared_ptr<const BurnsideFunctor>& omega,
                                        std::vector<std::int64_t> rational_primes) {
  const FunctorPtr t = omega;
  const LevelRing& re = t->level(0);
  SpecInclusionReport rep;
  auto entry = [&](std::string name, IdealFamily i) {
    PrimeVerdict p = is_prime(i);
    PrimeVerdict m = is_maximal(i);
    rep.primes.push_back({std::move(name), std::move(i), std::move(p), std::move(m)});
  };
  entry("(0)", IdealFamily::zero(t));
  entry("I_(0)", invariant_ideal_lift(t, level_zero(re)));
  for (std::int64_t q : rational_primes) entry("I_(" + std::to_string(q) + ")", invariant_ideal_lift(t, LevelIdeal{{}, {{q}}}));

  rep.distinct = true;
  for (std::size_t i = 0; i < rep.primes.size(); ++i)
    for (std::size_t j = i + 1; j < rep.primes.size(); ++j) {
      std::string sep;
      for (int pass = 0; pass < 2 && sep.empty(); ++pass) {
        const auto& in = rep.primes[pass ? j : i];
        const auto& out = rep.primes[pass ? i : j];
        for (std::size_t c = 0; c < t->num_levels() && sep.empty(); ++c)
          for (const Value& x : in.ideal.generators(c))
            if (!out.ideal.contains(c, x)) {
              sep = t->format(c, x) + " at " + t->catalog().class_name(c) + " lies in " + in.name + " but not in " +
                    out.name;
              break;
            }
      }
      if (sep.empty()) {
        rep.distinct = false;
        sep = rep.primes[i].name + " and " + rep.primes[j].name + " coincide";
      }
      rep.separations.push_back(sep);
    }
  rep.zero_not_lifted = !is_mrc(*t) && !(rep.primes[0].ideal == rep.primes[1].ideal);
  return rep;
}

std::string SpecInclusionReport::format() const {
  std::ostringstream os;
  for (const Entry& e : primes) {
    os << "ideal " << e.name << ": prime = " << to_string(e.prime.value) << " (" << e.prime.mode << ")"
       << ", maximal = " << to_string(e.maximal.value) << " (" << e.maximal.mode << ")\n";
    std::istringstream body(e.ideal.format());
    std::string line;
    std::getline(body, line);
    while (std::getline(body, line)) os << "  " << line << "\n";
  }
  for (const auto& s : separations) os << "separate: " << s << "\n";
  os << "pairwise distinct = " << (distinct ? "true" : "false") << "\n";
  os << "(0) is not of the form I_I (Omega not MRC) = " << (zero_not_lifted ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace tambara
