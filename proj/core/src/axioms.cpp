#include "tambara/axioms.hpp"

#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string AxiomReport::format() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    if (c.informational)
      os << "INFO " << c.name << " = " << (c.ok ? "true" : "false");
    else
      os << (c.ok ? "PASS " : "FAIL ") << c.name;
    os << " (" << c.instances << " instances, " << c.cases << " cases, " << (c.exhaustive ? "exhaustive" : "sampled");
    if (c.skipped) os << ", " << c.skipped << " skipped by point bound";
    os << ")";
    if (!c.ok) os << "\n  witness: " << c.witness;
    os << "\n";
  }
  os << (ok ? "all identities hold" : "some identities FAILED") << "\n";
  return os.str();
}

std::vector<std::vector<SetValue>> element_tuples(const TambaraFunctor& t, const std::vector<const Evaluation*>& vars,
                                                  std::size_t samples, SeededRng& rng, bool& exhaustive,
                                                  std::int64_t box) {
  std::vector<const LevelRing*> slots;
  std::vector<std::size_t> var_of;
  for (std::size_t v = 0; v < vars.size(); ++v)
    for (std::size_t c : vars[v]->levels) {
      slots.push_back(&t.level(c));
      var_of.push_back(v);
    }
  bool small = true;
  std::size_t total = 1;
  for (const LevelRing* r : slots) {
    if (!r->is_finite() || r->size() > kExhaustiveLevelLimit || total > kExhaustiveDomainLimit / r->size()) {
      small = false;
      break;
    }
    total *= r->size();
  }
  auto assemble = [&](const std::vector<Value>& vals) {
    std::vector<SetValue> tuple(vars.size());
    for (std::size_t s = 0; s < slots.size(); ++s) tuple[var_of[s]].push_back(vals[s]);
    return tuple;
  };
  std::vector<std::vector<SetValue>> out;
  std::vector<Value> vals(slots.size());
  if (small) {
    exhaustive = true;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        vals[s] = slots[s]->element(rest % slots[s]->size());
        rest /= slots[s]->size();
      }
      out.push_back(assemble(vals));
    }
    return out;
  }
  exhaustive = false;
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t s = 0; s < slots.size(); ++s) vals[s] = random_value(*slots[s], rng, box);
    out.push_back(assemble(vals));
  }
  return out;
}

namespace {

using Tuple = std::vector<SetValue>;
using Failure = std::optional<std::string>;

class Suite {
 public:
  Suite(FunctorPtr t, const AxiomBounds& b) : t_(std::move(t)), ctx_(t_->context()), b_(b) {
    for (std::size_t c = 0; c < ctx_.num_levels(); ++c) cos_.push_back(evaluate(ctx_, ctx_.coset(c).set));
    top_ = ctx_.catalog().top_class();
  }

  AxiomReport run() {
    const std::vector<std::string> names = {
        "ring axioms",
        "restriction is a ring homomorphism",
        "transfer is additive",
        "norm is multiplicative",
        "functoriality",
        "Mackey condition (transfer)",
        "Mackey condition (norm)",
        "distributive law",
        "f.(0) = eta+(1)",
        "projection formula",
        "addition formula",
        "shriek (1) multiplicativity",
        "shriek (2) surjective maps",
        "shriek (3) pullbacks",
        "shriek (4) exponential diagrams",
        "shriek (5) morphism naturality",
        "additively cohomological",
    };
    checks_.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) checks_[i].name = names[i];
    checks_.back().informational = true;

    std::vector<std::function<void()>> tasks = {
        [&] { ring_axioms(checks_[0]); },
        [&] { homomorphisms(checks_[1], checks_[2], checks_[3]); },
        [&] { functoriality(checks_[4]); },
        [&] { mackey(checks_[5], checks_[6]); },
        [&] { exponential(checks_[7], checks_[14]); },
        [&] { empty_norm(checks_[8]); },
        [&] { projection(checks_[9], checks_[16]); },
        [&] { addition(checks_[10]); },
        [&] { shrieks(checks_[11], checks_[12], checks_[15]); },
        [&] { shriek_pullbacks(checks_[13]); },
    };
    if (b_.parallel) {
      std::vector<std::future<void>> fs;
      for (auto& task : tasks) fs.push_back(std::async(std::launch::async, task));
      for (auto& f : fs) f.get();
    } else {
      for (auto& task : tasks) task();
    }
    AxiomReport rep;
    rep.checks = checks_;
    for (const auto& c : rep.checks)
      if (!c.informational && !c.ok) rep.ok = false;
    return rep;
  }

 private:
  // Each task owns a generator derived from the seed and its first check, so
  // results do not depend on scheduling.
  SeededRng rng_for(const AxiomCheck& c) const {
    return SeededRng(b_.seed + static_cast<std::uint32_t>(&c - checks_.data()) * 0x9E3779B9u);
  }

  MapPlan plan(const TransitiveMap& f) const { return MapPlan(ctx_, ctx_.realize(f), cos_[f.src], cos_[f.dst]); }
  std::string show(const Evaluation& e, const SetValue& v) const { return format_set_value(*t_, e, v); }
  std::string lvl(std::size_t c, const Value& v) const { return t_->format(c, v); }

  template <class Body>
  void run(AxiomCheck& c, SeededRng& rng, const std::vector<const Evaluation*>& vars, const std::string& where,
           Body body) {
    ++c.instances;
    if (!c.ok) return;  // the first witness is kept
    bool ex = true;
    const auto tuples = element_tuples(*t_, vars, b_.samples, rng, ex, b_.box);
    c.exhaustive = c.exhaustive && ex;
    for (const auto& tu : tuples) {
      ++c.cases;
      if (Failure w = body(tu)) {
        if (c.ok) c.witness = where + ": " + *w;
        c.ok = false;
        return;
      }
    }
  }

  static Failure expect(bool ok, const std::function<std::string()>& why) {
    if (ok) return std::nullopt;
    return why();
  }

  void ring_axioms(AxiomCheck& c) {
    for (std::size_t l = 0; l < ctx_.num_levels(); ++l) {
      ++c.instances;
      const RingAxiomReport r = check_ring_axioms(t_->level(l));
      c.cases += r.checks;
      if (!t_->level(l).is_finite()) c.exhaustive = false;
      if (!r.ok && c.ok) {
        c.ok = false;
        c.witness = "level " + ctx_.catalog().class_name(l) + ": " + r.failure;
      }
    }
  }

  void homomorphisms(AxiomCheck& res, AxiomCheck& tr, AxiomCheck& nm) {
    SeededRng rng = rng_for(res);
    for (const TransitiveMap& f : ctx_.maps()) {
      const LevelRing& s = t_->level(f.src);
      const LevelRing& d = t_->level(f.dst);
      const std::string at = ctx_.describe(f);
      run(res, rng, {&cos_[f.dst], &cos_[f.dst]}, "res along " + at, [&](const Tuple& x) -> Failure {
        const Value& a = x[0][0];
        const Value& b = x[1][0];
        if (t_->restrict(f, d.one()) != s.one()) return "res(1) != 1";
        if (t_->restrict(f, d.add(a, b)) != s.add(t_->restrict(f, a), t_->restrict(f, b)))
          return "res(a+b) != res(a)+res(b) for a = " + lvl(f.dst, a) + ", b = " + lvl(f.dst, b);
        return expect(t_->restrict(f, d.mul(a, b)) == s.mul(t_->restrict(f, a), t_->restrict(f, b)), [&] {
          return "res(ab) != res(a)res(b) for a = " + lvl(f.dst, a) + ", b = " + lvl(f.dst, b);
        });
      });
      run(tr, rng, {&cos_[f.src], &cos_[f.src]}, "tr along " + at, [&](const Tuple& x) -> Failure {
        const Value& a = x[0][0];
        const Value& b = x[1][0];
        if (t_->transfer(f, s.zero()) != d.zero()) return "tr(0) != 0";
        return expect(t_->transfer(f, s.add(a, b)) == d.add(t_->transfer(f, a), t_->transfer(f, b)), [&] {
          return "tr(a+b) != tr(a)+tr(b) for a = " + lvl(f.src, a) + ", b = " + lvl(f.src, b);
        });
      });
      run(nm, rng, {&cos_[f.src], &cos_[f.src]}, "nm along " + at, [&](const Tuple& x) -> Failure {
        const Value& a = x[0][0];
        const Value& b = x[1][0];
        if (t_->norm(f, s.one()) != d.one()) return "nm(1) != 1";
        return expect(t_->norm(f, s.mul(a, b)) == d.mul(t_->norm(f, a), t_->norm(f, b)), [&] {
          return "nm(ab) != nm(a)nm(b) for a = " + lvl(f.src, a) + ", b = " + lvl(f.src, b);
        });
      });
    }
  }

  void functoriality(AxiomCheck& c) {
    SeededRng rng = rng_for(c);
    for (std::size_t l = 0; l < ctx_.num_levels(); ++l) {
      const TransitiveMap id = ctx_.identity(l);
      run(c, rng, {&cos_[l]}, "identity on " + ctx_.catalog().class_name(l), [&](const Tuple& x) -> Failure {
        const Value& a = x[0][0];
        return expect(t_->restrict(id, a) == a && t_->transfer(id, a) == a && t_->norm(id, a) == a,
                      [&] { return "identity map moves " + lvl(l, a); });
      });
    }
    for (const TransitiveMap& f : ctx_.maps())
      for (const TransitiveMap& g : ctx_.maps()) {
        if (f.dst != g.src) continue;
        const TransitiveMap gf = ctx_.compose(g, f);
        const std::string at = ctx_.describe(g) + " o " + ctx_.describe(f);
        run(c, rng, {&cos_[g.dst], &cos_[f.src]}, at, [&](const Tuple& x) -> Failure {
          const Value& z = x[0][0];
          const Value& a = x[1][0];
          if (t_->restrict(gf, z) != t_->restrict(f, t_->restrict(g, z))) return "res not functorial at " + lvl(g.dst, z);
          if (t_->transfer(gf, a) != t_->transfer(g, t_->transfer(f, a))) return "tr not functorial at " + lvl(f.src, a);
          return expect(t_->norm(gf, a) == t_->norm(g, t_->norm(f, a)),
                        [&] { return "nm not functorial at " + lvl(f.src, a); });
        });
      }
  }

  // res_g tr_f = tr_{pr2} res_{pr1} and the same for nm, over P = G/K x_{G/H} G/L.
  void mackey(AxiomCheck& add, AxiomCheck& mul) {
    SeededRng rng = rng_for(add);
    for (const TransitiveMap& f : ctx_.maps())
      for (const TransitiveMap& g : ctx_.maps()) {
        if (f.dst != g.dst) continue;
        const Pullback pb = pullback(ctx_.realize(f), ctx_.realize(g));
        const MapPlan p1(ctx_, pb.pr1, evaluate(ctx_, pb.set), cos_[f.src]);
        const MapPlan p2(ctx_, pb.pr2, p1.source(), cos_[g.src]);
        const std::string at = "square " + ctx_.describe(f) + " / " + ctx_.describe(g);
        run(add, rng, {&cos_[f.src]}, at, [&](const Tuple& x) -> Failure {
          const Value& a = x[0][0];
          const Value lhs = t_->restrict(g, t_->transfer(f, a));
          const SetValue rhs = transfer_along(*t_, p2, restrict_along(*t_, p1, x[0]));
          return expect(lhs == rhs[0], [&] {
            return "x = " + lvl(f.src, a) + ": res tr x = " + lvl(g.src, lhs) + " but tr' res' x = " + lvl(g.src, rhs[0]);
          });
        });
        run(mul, rng, {&cos_[f.src]}, at, [&](const Tuple& x) -> Failure {
          const Value& a = x[0][0];
          const Value lhs = t_->restrict(g, t_->norm(f, a));
          const SetValue rhs = norm_along(*t_, p2, restrict_along(*t_, p1, x[0]));
          return expect(lhs == rhs[0], [&] {
            return "x = " + lvl(f.src, a) + ": res nm x = " + lvl(g.src, lhs) + " but nm' res' x = " + lvl(g.src, rhs[0]);
          });
        });
      }
  }

  // A -> G/K built from one or two transitive maps into K.
  std::vector<std::pair<GMap, std::string>> covers(std::size_t k) const {
    std::vector<TransitiveMap> into;
    for (const TransitiveMap& q : ctx_.maps())
      if (q.dst == k) into.push_back(q);
    std::vector<std::pair<GMap, std::string>> out;
    for (const auto& q : into) out.emplace_back(ctx_.realize(q), ctx_.describe(q));
    for (std::size_t i = 0; i < into.size(); ++i)
      for (std::size_t j = i; j < into.size(); ++j)
        out.emplace_back(copair(ctx_.realize(into[i]), ctx_.realize(into[j])),
                         "[" + ctx_.describe(into[i]) + ", " + ctx_.describe(into[j]) + "]");
    return out;
  }

  void exponential(AxiomCheck& dist, AxiomCheck& shriek4) {
    SeededRng rng = rng_for(dist);
    for (const TransitiveMap& f : ctx_.maps()) {
      const GMap fm = ctx_.realize(f);
      for (const auto& [p, pname] : covers(f.src)) {
        std::optional<ExponentialDiagram> ed;
        try {
          ed = exponential_diagram(fm, p, b_.diagram_points);
        } catch (const ResourceCapError&) {
          ++dist.skipped;
          ++shriek4.skipped;
          continue;
        }
        const MapPlan pf(ctx_, fm, cos_[f.src], cos_[f.dst]);
        const MapPlan pp(ctx_, p, evaluate(ctx_, p.src_ptr()), cos_[f.src]);
        const Evaluation z = evaluate(ctx_, ed->lambda.src_ptr());
        const Evaluation pi_src = evaluate(ctx_, ed->pi.src_ptr());
        const MapPlan pl(ctx_, ed->lambda, z, pp.source());
        const MapPlan pr(ctx_, ed->rho, z, pi_src);
        const MapPlan ppi(ctx_, ed->pi, pi_src, cos_[f.dst]);
        const std::string at = "f = " + ctx_.describe(f) + ", p = " + pname;
        run(dist, rng, {&pp.source()}, at, [&](const Tuple& x) -> Failure {
          const SetValue lhs = norm_along(*t_, pf, transfer_along(*t_, pp, x[0]));
          const SetValue rhs = transfer_along(*t_, ppi, norm_along(*t_, pr, restrict_along(*t_, pl, x[0])));
          return expect(lhs == rhs, [&] {
            return "x = " + show(pp.source(), x[0]) + ": f.p+ x = " + show(pf.target(), lhs) +
                   " but pi+ rho. lambda* x = " + show(pf.target(), rhs);
          });
        });
        run(shriek4, rng, {&pp.source()}, at, [&](const Tuple& x) -> Failure {
          const SetValue lhs = transfer_along(*t_, ppi, shriek_along(*t_, pr, restrict_along(*t_, pl, x[0])));
          const SetValue rhs = shriek_along(*t_, pf, transfer_along(*t_, pp, x[0]));
          return expect(lhs == rhs, [&] {
            return "x = " + show(pp.source(), x[0]) + ": pi+ rho! lambda* x = " + show(pf.target(), lhs) +
                   " but f! p+ x = " + show(pf.target(), rhs);
          });
        });
      }
    }
  }

  // Non-surjective j = inl o f : G/K -> G/H u G/top, together with the complement inclusion.
  struct Inclusion {
    GMap j;
    GMap complement;
    std::string name;
  };
  Inclusion inclusion(const TransitiveMap& f) const {
    const Coproduct y = coproduct(ctx_.coset(f.dst).set, ctx_.coset(top_).set);
    return Inclusion{compose(y.inl, ctx_.realize(f)), y.inr, "inl o " + ctx_.describe(f)};
  }

  void empty_norm(AxiomCheck& c) {
    SeededRng rng = rng_for(c);
    for (const TransitiveMap& f : ctx_.maps()) {
      ++c.instances;
      ++c.cases;
      const Value z = t_->norm(f, t_->level(f.src).zero());
      if (z != t_->level(f.dst).zero() && c.ok) {
        c.ok = false;
        c.witness = "surjective " + ctx_.describe(f) + ": f.(0) = " + lvl(f.dst, z) + " != 0";
      }
      const Inclusion inc = inclusion(f);
      const MapPlan pj(ctx_, inc.j, cos_[f.src], evaluate(ctx_, inc.j.dst_ptr()));
      const MapPlan pe(ctx_, inc.complement, evaluate(ctx_, inc.complement.src_ptr()), pj.target());
      run(c, rng, {}, inc.name, [&](const Tuple&) -> Failure {
        const SetValue lhs = norm_along(*t_, pj, set_zero(*t_, pj.source()));
        const SetValue rhs = transfer_along(*t_, pe, set_one(*t_, pe.source()));
        return expect(lhs == rhs, [&] {
          return "f.(0) = " + show(pj.target(), lhs) + " but eta+(1) = " + show(pj.target(), rhs);
        });
      });
    }
  }

  void projection(AxiomCheck& proj, AxiomCheck& cohom) {
    SeededRng rng = rng_for(proj);
    for (const TransitiveMap& f : ctx_.maps()) {
      const LevelRing& s = t_->level(f.src);
      const LevelRing& d = t_->level(f.dst);
      run(proj, rng, {&cos_[f.src], &cos_[f.dst]}, ctx_.describe(f), [&](const Tuple& x) -> Failure {
        const Value& a = x[0][0];
        const Value& b = x[1][0];
        return expect(t_->transfer(f, s.mul(a, t_->restrict(f, b))) == d.mul(t_->transfer(f, a), b), [&] {
          return "f+(a f*(b)) != f+(a) b for a = " + lvl(f.src, a) + ", b = " + lvl(f.dst, b);
        });
      });
      const auto deg = static_cast<std::int64_t>(ctx_.degree(f));
      run(cohom, rng, {&cos_[f.dst]}, ctx_.describe(f), [&](const Tuple& x) -> Failure {
        const Value& b = x[0][0];
        return expect(t_->transfer(f, t_->restrict(f, b)) == d.scale(deg, b),
                      [&] { return "f+f*(b) != deg(f) b for b = " + lvl(f.dst, b); });
      });
    }
  }

  // f.(a+b) = s+(t. r*(a) * t'. r'*(b)) on the folding diagram.
  void addition(AxiomCheck& c) {
    SeededRng rng = rng_for(c);
    for (const TransitiveMap& f : ctx_.maps()) {
      std::optional<FoldingExponential> fe;
      try {
        fe = folding_exponential(ctx_.realize(f), b_.diagram_points);
      } catch (const ResourceCapError&) {
        ++c.skipped;
        continue;
      }
      const Evaluation u = evaluate(ctx_, fe->u), up = evaluate(ctx_, fe->u_prime), v = evaluate(ctx_, fe->v);
      const MapPlan pr(ctx_, fe->r, u, cos_[f.src]);
      const MapPlan prp(ctx_, fe->r_prime, up, cos_[f.src]);
      const MapPlan pt(ctx_, fe->t, u, v);
      const MapPlan ptp(ctx_, fe->t_prime, up, v);
      const MapPlan ps(ctx_, fe->s, v, cos_[f.dst]);
      const LevelRing& s = t_->level(f.src);
      run(c, rng, {&cos_[f.src], &cos_[f.src]}, ctx_.describe(f), [&](const Tuple& x) -> Failure {
        const Value lhs = t_->norm(f, s.add(x[0][0], x[1][0]));
        const SetValue prod = set_mul(*t_, v, norm_along(*t_, pt, restrict_along(*t_, pr, x[0])),
                                      norm_along(*t_, ptp, restrict_along(*t_, prp, x[1])));
        const SetValue rhs = transfer_along(*t_, ps, prod);
        return expect(lhs == rhs[0], [&] {
          return "a = " + lvl(f.src, x[0][0]) + ", b = " + lvl(f.src, x[1][0]) + ": f.(a+b) = " + lvl(f.dst, lhs) +
                 " but folding composite = " + lvl(f.dst, rhs[0]);
        });
      });
    }
  }

  struct ShriekMap {
    MapPlan plan;
    std::string name;
    bool surjective;
  };
  std::vector<ShriekMap> shriek_maps() const {
    std::vector<ShriekMap> out;
    for (const TransitiveMap& f : ctx_.maps()) {
      out.push_back(ShriekMap{plan(f), ctx_.describe(f), true});
      const Inclusion inc = inclusion(f);
      out.push_back(ShriekMap{MapPlan(ctx_, inc.j, cos_[f.src], evaluate(ctx_, inc.j.dst_ptr())), inc.name, false});
    }
    return out;
  }

  void shrieks(AxiomCheck& one, AxiomCheck& two, AxiomCheck& five) {
    SeededRng rng = rng_for(one);
    const TambaraMorphism phi = diagonal_morphism(t_);
    const TambaraFunctor& tt = *phi.target();
    for (const ShriekMap& m : shriek_maps()) {
      const Evaluation& x = m.plan.source();
      const Evaluation& y = m.plan.target();
      run(one, rng, {&x, &x}, m.name, [&](const Tuple& v) -> Failure {
        const SetValue lhs = set_mul(*t_, y, shriek_along(*t_, m.plan, v[0]), shriek_along(*t_, m.plan, v[1]));
        const SetValue rhs = shriek_along(*t_, m.plan, set_mul(*t_, x, v[0], v[1]));
        return expect(lhs == rhs, [&] {
          return "x = " + show(x, v[0]) + ", y = " + show(x, v[1]) + ": f!(x)f!(y) = " + show(y, lhs) +
                 " but f!(xy) = " + show(y, rhs);
        });
      });
      if (m.surjective)
        run(two, rng, {&x}, m.name, [&](const Tuple& v) -> Failure {
          const SetValue a = shriek_along(*t_, m.plan, v[0]);
          const SetValue b = norm_along(*t_, m.plan, v[0]);
          return expect(a == b, [&] { return "x = " + show(x, v[0]) + ": f!(x) = " + show(y, a) + " != f.(x)"; });
        });
      run(five, rng, {&x}, m.name + " under the diagonal", [&](const Tuple& v) -> Failure {
        const SetValue lhs = phi.apply(y, shriek_along(*t_, m.plan, v[0]));
        const SetValue rhs = shriek_along(tt, m.plan, phi.apply(x, v[0]));
        return expect(lhs == rhs, [&] { return "x = " + show(x, v[0]) + ": phi f! != f! phi"; });
      });
    }
  }

  // f'! xi* = eta* f! for the pullback of f along eta.
  void shriek_pullbacks(AxiomCheck& c) {
    SeededRng rng = rng_for(c);
    for (const TransitiveMap& f : ctx_.maps()) {
      // One coproduct shared by j and every eta into it.
      const Coproduct y = coproduct(ctx_.coset(f.dst).set, ctx_.coset(top_).set);
      const GMap j = compose(y.inl, ctx_.realize(f));
      const std::string jname = "inl o " + ctx_.describe(f);
      std::vector<GMap> etas_f, etas_j;
      std::vector<std::string> names_f, names_j;
      for (const TransitiveMap& g : ctx_.maps()) {
        if (g.dst != f.dst) continue;
        etas_f.push_back(ctx_.realize(g));
        names_f.push_back(ctx_.describe(g));
        etas_j.push_back(compose(y.inl, ctx_.realize(g)));
        names_j.push_back("inl o " + ctx_.describe(g));
      }
      etas_j.push_back(y.inr);
      names_j.push_back("inr");
      auto square = [&](const GMap& fm, const std::string& fname, const GMap& eta, const std::string& ename) {
        const Pullback pb = pullback(fm, eta);
        const Evaluation xp = evaluate(ctx_, pb.set);
        const MapPlan pf(ctx_, fm, cos_[f.src], evaluate(ctx_, fm.dst_ptr()));
        const MapPlan pxi(ctx_, pb.pr1, xp, cos_[f.src]);
        const MapPlan pfp(ctx_, pb.pr2, xp, evaluate(ctx_, eta.src_ptr()));
        const MapPlan peta(ctx_, eta, pfp.target(), pf.target());
        run(c, rng, {&cos_[f.src]}, "f = " + fname + ", eta = " + ename, [&](const Tuple& v) -> Failure {
          const SetValue lhs = shriek_along(*t_, pfp, restrict_along(*t_, pxi, v[0]));
          const SetValue rhs = restrict_along(*t_, peta, shriek_along(*t_, pf, v[0]));
          return expect(lhs == rhs, [&] {
            return "x = " + show(pf.source(), v[0]) + ": f'! xi* x = " + show(peta.source(), lhs) +
                   " but eta* f! x = " + show(peta.source(), rhs);
          });
        });
      };
      for (std::size_t i = 0; i < etas_f.size(); ++i) square(ctx_.realize(f), ctx_.describe(f), etas_f[i], names_f[i]);
      for (std::size_t i = 0; i < etas_j.size(); ++i) square(j, jname, etas_j[i], names_j[i]);
    }
  }

  FunctorPtr t_;
  const GroupContext& ctx_;
  AxiomBounds b_;
  std::vector<Evaluation> cos_;
  std::size_t top_ = 0;
  std::vector<AxiomCheck> checks_;
};

}  // namespace

AxiomReport verify_axioms(const FunctorPtr& t, const AxiomBounds& bounds) { return Suite(t, bounds).run(); }

}  // namespace tambara
