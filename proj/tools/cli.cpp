#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "tambara/axioms.hpp"
#include "tambara/builtin.hpp"
#include "tambara/error.hpp"
#include "tambara/spectrum.hpp"
#include "tambara/text_format.hpp"

namespace tambara::cli {

namespace {

struct Config {
  std::string group = "c2";
  std::string functor = "omega";
  std::vector<std::string> files;
  std::size_t cap_points = kDefaultPointCap;
  std::int64_t box = 3;
  std::size_t rounds = 32;
  std::uint32_t seed = kDefaultSeed;
  std::string format = "text";
  // Subcommand arguments.
  std::string map, elem, set, src, dst, along, op = "sum";
  std::vector<std::string> gens;
  std::size_t pairs = 50;
  bool trace = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Named objects loaded from --file documents, plus built-ins on demand.
class Session {
 public:
  explicit Session(const Config& cfg) : cfg_(cfg) {
    std::vector<TextBlock> ideals;
    for (const auto& path : cfg.files) {
      for (TextBlock& b : split_blocks(read_file(path))) {
        try {
          if (b.keyword == "group") {
            GroupPtr g = parse_group(b.text);
            groups_[g->name()] = g;
          } else if (b.keyword == "gset") {
            GSetPtr x = parse_gset(b.text, [&](const std::string& n) { return group(n); });
            sets_[x->label()] = x;
          } else if (b.keyword == "gmap") {
            gmaps_.push_back(parse_gmap(b.text, [&](const std::string& n) { return gset(n); }));
          } else if (b.keyword == "gring") {
            GRingPtr r = parse_gring(b.text, [&](const std::string& n) { return group(n); });
            grings_[r->name()] = r;
          } else {
            ideals.push_back(std::move(b));
          }
        } catch (const InputError& e) {
          throw InputError(path + " (block at line " + std::to_string(b.first_line) + "): " + e.what());
        }
      }
    }
    for (const TextBlock& b : ideals) {
      try {
        std::string designator, group_name;
        ideals_.push_back(parse_ideal(b.text, [&](const std::string& d, const std::string& g) {
          designator = d;
          group_name = g.empty() ? cfg_.group : g;
          return functor(d, group_name);
        }));
        ideal_names_.emplace_back(designator, group_name);
      } catch (const InputError& e) {
        throw InputError("ideal block at line " + std::to_string(b.first_line) + ": " + e.what());
      }
    }
  }

  GroupPtr group(const std::string& name) {
    auto it = groups_.find(name);
    if (it != groups_.end()) return it->second;
    return groups_[name] = builtin_group(name);
  }

  ContextPtr context(const std::string& name) {
    auto it = contexts_.find(name);
    if (it != contexts_.end()) return it->second;
    return contexts_[name] = GroupContext::create(group(name));
  }

  GSetPtr gset(const std::string& name) const {
    auto it = sets_.find(name);
    if (it == sets_.end()) throw InputError("no gset named '" + name + "' loaded");
    return it->second;
  }

  const GMap& gmap(const std::string& spec) const {
    for (const auto& m : gmaps_)
      if (m.src + "->" + m.dst == spec) return m.map;
    throw InputError("no gmap '" + spec + "' loaded (name maps as <src>-><dst>)");
  }

  FunctorPtr functor(const std::string& designator, const std::string& group_name) {
    const std::string key = designator + "|" + group_name;
    auto it = functors_.find(key);
    if (it != functors_.end()) return it->second;
    auto lookup = [&](const std::string& n) {
      auto g = grings_.find(n);
      if (g == grings_.end()) throw InputError("no gring named '" + n + "' loaded");
      return g->second;
    };
    return functors_[key] = make_functor(context(group_name), designator, lookup, cfg_.cap_points);
  }

  FunctorPtr functor() { return functor(cfg_.functor, cfg_.group); }

  const IdealFamily& ideal(std::size_t i) const {
    if (i >= ideals_.size())
      throw InputError("this command needs " + std::to_string(i + 1) + " ideal(s) from --file, found " +
                       std::to_string(ideals_.size()));
    return ideals_[i];
  }
  const std::pair<std::string, std::string>& ideal_name(std::size_t i) const { return ideal_names_[i]; }

 private:
  const Config& cfg_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, ContextPtr> contexts_;
  std::map<std::string, GSetPtr> sets_;
  std::vector<NamedGMap> gmaps_;
  std::map<std::string, GRingPtr> grings_;
  std::map<std::string, FunctorPtr> functors_;
  std::vector<IdealFamily> ideals_;
  std::vector<std::pair<std::string, std::string>> ideal_names_;
};

std::string elements_text(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string images_text(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

void describe_level(std::ostream& out, const TambaraFunctor& t, std::size_t c) {
  const LevelRing& r = t.level(c);
  out << "level " << t.catalog().class_name(c) << ": ";
  if (r.is_finite()) {
    out << r.size() << " elements {";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? ", " : "") << t.format(c, r.element(i));
    out << "}\n";
  } else {
    out << "lattice of rank " << r.rank() << ", basis";
    for (std::size_t i = 0; i < r.rank(); ++i) out << (i ? "; " : " ") << t.format(c, r.basis(i));
    out << "\n";
  }
}

std::string cert_text(const Certificate& c) {
  return std::string("(i) ") + to_string(c.restriction) + ", (ii) " + to_string(c.transfer) + ", (iii') " +
         to_string(c.shriek) + ", box " + std::to_string(c.box);
}

SaturationOptions saturation(const Config& cfg) { return SaturationOptions{cfg.box, cfg.rounds}; }

// ---- group ------------------------------------------------------------------

void group_info(Session& s, const Config& cfg, std::ostream& out) {
  const ContextPtr ctx = s.context(cfg.group);
  const SubgroupCatalog& cat = ctx->catalog();
  out << "group " << ctx->group().name() << " of order " << ctx->group().order() << "\n";
  out << "subgroups " << cat.all().size() << " in " << cat.num_classes() << " conjugacy classes\n";
  for (std::size_t c = 0; c < cat.num_classes(); ++c) {
    std::size_t conj = 0;
    for (std::size_t i = 0; i < cat.all().size(); ++i) conj += cat.class_of(i) == c;
    out << "class " << cat.class_name(c) << ": order " << cat.rep_subgroup(c).order() << ", "
        << conj << " conjugate(s), representative " << elements_text(cat.rep_subgroup(c).elements) << "\n";
  }
  out << "transitive maps " << ctx->maps().size() << "\n";
  out << format_group(ctx->group());
}

void group_subgroups(Session& s, const Config& cfg, std::ostream& out) {
  const SubgroupCatalog& cat = s.context(cfg.group)->catalog();
  for (std::size_t i = 0; i < cat.all().size(); ++i) {
    const Subgroup& h = cat.subgroup(i);
    out << "S" << i << ": class " << cat.class_name(cat.class_of(i)) << ", order " << h.order() << ", elements "
        << elements_text(h.elements) << "\n";
  }
}

// ---- gset -------------------------------------------------------------------

void gset_orbits(Session& s, const Config& cfg, std::ostream& out) {
  const GSetPtr x = s.gset(cfg.set);
  const SubgroupCatalog& cat = s.context(x->group().name())->catalog();
  const OrbitDecomposition d = orbit_decompose(cat, *x);
  out << "gset " << cfg.set << ": " << x->size() << " points, " << d.orbits.size() << " orbit(s)\n";
  for (std::size_t i = 0; i < d.orbits.size(); ++i)
    out << "orbit " << i << ": points " << elements_text(d.orbits[i].points) << ", type G/"
        << cat.class_name(d.orbits[i].cls) << ", base " << d.orbits[i].base << "\n";
}

void gset_maps(Session& s, const Config& cfg, std::ostream& out) {
  const GSetPtr x = s.gset(cfg.src);
  const GSetPtr y = s.gset(cfg.dst);
  const SubgroupCatalog& cat = s.context(x->group().name())->catalog();
  const auto maps = enumerate_gmaps(cat, x, y, cfg.cap_points);
  out << maps.size() << " equivariant map(s) " << cfg.src << " -> " << cfg.dst << "\n";
  for (const GMap& f : maps) out << "images " << images_text(f.images()) << "\n";
}

void gset_pi(Session& s, const Config& cfg, std::ostream& out) {
  const GMap& f = s.gmap(cfg.map);
  const GMap& p = s.gmap(cfg.along);
  if (p.dst_ptr() != f.src_ptr()) throw InputError("p must land in the source of f");
  const SubgroupCatalog& cat = s.context(f.src().group().name())->catalog();
  const DependentProduct d = dependent_product(f, p, cfg.cap_points);
  const OrbitDecomposition o = orbit_decompose(cat, *d.set);
  out << "Pi_f(p): " << d.set->size() << " points, orbit types";
  for (std::size_t c = 0; c < o.signature.size(); ++c)
    if (o.signature[c]) out << " " << o.signature[c] << "*G/" << cat.class_name(c);
  out << "\npi images " << images_text(d.pi.images()) << "\n";
}

// ---- tam --------------------------------------------------------------------

void tam_eval(Session& s, const Config& cfg, std::ostream& out) {
  const FunctorPtr t = s.functor();
  if (!cfg.elem.empty()) {
    const LevelElement x = parse_level_element(*t, cfg.elem, t->catalog().top_class());
    out << t->format(x.level, x.value) << "\n";
    if (const auto* om = dynamic_cast<const BurnsideFunctor*>(t.get())) {
      out << "rho = " << om->rho(x.level, x.value) << ", marks";
      for (auto m : om->marks(x.level, x.value)) out << " " << m;
      out << "\n";
    }
    return;
  }
  if (!cfg.set.empty()) {
    const Evaluation ev = evaluate(t->context(), s.gset(cfg.set));
    out << t->name() << "(" << cfg.set << ") = product over " << ev.orbits.orbits.size() << " orbit(s)\n";
    for (std::size_t i = 0; i < ev.levels.size(); ++i) {
      out << "orbit " << i << ": ";
      describe_level(out, *t, ev.levels[i]);
    }
    return;
  }
  out << "functor " << t->name() << " over " << t->group().name() << "\n";
  for (std::size_t c = 0; c < t->num_levels(); ++c) describe_level(out, *t, c);
}

void tam_structure(Session& s, const Config& cfg, std::ostream& out, TransportTag tag, bool shriek_map) {
  const FunctorPtr t = s.functor();
  const TransitiveMap f = parse_transitive_map(t->context(), cfg.map);
  const std::size_t in_level = tag == TransportTag::Restrict ? f.dst : f.src;
  const std::size_t out_level = tag == TransportTag::Restrict ? f.src : f.dst;
  const LevelElement x = parse_level_element(*t, cfg.elem, in_level);
  if (x.level != in_level) throw InputError("element is at the wrong level for " + t->context().describe(f));
  Value y;
  if (shriek_map)
    y = shriek(*t, f, x.value);
  else if (tag == TransportTag::Restrict)
    y = t->restrict(f, x.value);
  else if (tag == TransportTag::Transfer)
    y = t->transfer(f, x.value);
  else
    y = t->norm(f, x.value);
  out << t->format(out_level, y) << "\n";
}

int tam_axioms(Session& s, const Config& cfg, std::ostream& out) {
  AxiomBounds b;
  b.seed = cfg.seed;
  b.box = cfg.box;
  const AxiomReport rep = verify_axioms(s.functor(), b);
  out << rep.format();
  return rep.ok ? kOk : kVerificationFailed;
}

// ---- ideal ------------------------------------------------------------------

std::vector<Generator> parse_generators(const TambaraFunctor& t, const std::vector<std::string>& gens,
                                        std::size_t default_level) {
  std::vector<Generator> out;
  for (const auto& g : gens) {
    LevelElement x = parse_level_element(t, g, default_level);
    out.push_back(Generator{x.level, std::move(x.value)});
  }
  return out;
}

void print_ideal(std::ostream& out, const IdealFamily& i, const Config& cfg) {
  out << format_ideal(i, cfg.functor, cfg.group);
}

int ideal_gen(Session& s, const Config& cfg, std::ostream& out) {
  const FunctorPtr t = s.functor();
  if (cfg.gens.empty()) throw InputError("ideal gen needs at least one --gen");
  const GenerateResult g = generate(t, parse_generators(*t, cfg.gens, t->catalog().top_class()), saturation(cfg));
  print_ideal(out, g.ideal, cfg);
  out << "saturation " << (g.converged ? "converged" : "stopped at the round cap") << " after " << g.rounds
      << " round(s)\n";
  out << "certificate " << cert_text(g.ideal.certificate()) << "\n";
  if (cfg.trace && g.ideal.log())
    for (std::size_t i = 0; i < g.ideal.log()->steps.size(); ++i) out << g.ideal.log()->describe(*t, i) << "\n";
  return g.converged ? kOk : kVerificationFailed;
}

IdealCheckReport checked(const IdealFamily& i, const Config& cfg, IdealFamily& certified) {
  IdealCheckReport rep = check_ideal(i, cfg.box);
  certified = i;
  if (rep.is_ideal) certified.set_certificate(rep.certificate);
  return rep;
}

int ideal_check(Session& s, const Config& cfg, std::ostream& out) {
  const IdealCheckReport rep = check_ideal(s.ideal(0), cfg.box);
  out << "levels are ring ideals: " << (rep.levels_ok ? "yes" : "no") << "\n";
  out << "condition (i): " << (rep.condition_i ? "holds" : "fails") << "\n";
  out << "condition (ii): " << (rep.condition_ii ? "holds" : "fails") << "\n";
  out << "condition (iii): " << (rep.condition_iii ? "holds" : "fails") << "\n";
  if (!rep.counterexample.empty()) out << rep.counterexample << "\n";
  out << "checks " << rep.checks << "\n";
  if (rep.is_ideal) out << "certificate " << cert_text(rep.certificate) << "\n";
  out << "ideal: " << (rep.is_ideal ? "yes" : "no") << "\n";
  return rep.is_ideal ? kOk : kVerificationFailed;
}

int ideal_op(Session& s, const Config& cfg, std::ostream& out) {
  CombineOp op;
  if (cfg.op == "sum")
    op = CombineOp::Sum;
  else if (cfg.op == "product")
    op = CombineOp::Product;
  else if (cfg.op == "intersect")
    op = CombineOp::Intersect;
  else
    throw InputError("--op must be sum, product or intersect");
  IdealFamily a = s.ideal(0), b = s.ideal(1);
  if (a.owner() != b.owner()) throw InputError("the two ideals live in different functors");
  for (IdealFamily* x : {&a, &b}) {
    IdealFamily c = *x;
    if (!checked(*x, cfg, c).is_ideal) throw InputError("an input of ideal op is not an ideal");
    *x = c;
  }
  const IdealFamily r = combine(op, a, b, saturation(cfg));
  out << format_ideal(r, s.ideal_name(0).first, s.ideal_name(0).second);
  out << "certificate " << cert_text(r.certificate()) << "\n";
  return r.exact() ? kOk : kVerificationFailed;
}

int ideal_radical(Session& s, const Config&, std::ostream& out) {
  const IdealFamily r = radical(s.ideal(0));
  out << format_ideal(r, s.ideal_name(0).first, s.ideal_name(0).second);
  return kOk;
}

int ideal_lift(Session& s, const Config& cfg, std::ostream& out) {
  const FunctorPtr t = s.functor();
  std::vector<Value> gens;
  for (const auto& g : parse_generators(*t, cfg.gens, 0)) {
    if (g.level != 0) throw InputError("ideal lift takes generators at level e");
    gens.push_back(g.value);
  }
  const LevelIdeal i0 = level_ideal(t->level(0), gens);
  if (!is_g_invariant(*t, i0)) {
    out << "the level-e ideal is not G-invariant\n";
    return kVerificationFailed;
  }
  print_ideal(out, invariant_ideal_lift(t, i0), cfg);
  return kOk;
}

int ideal_quotient(Session& s, const Config& cfg, std::ostream& out) {
  IdealFamily i = s.ideal(0);
  const IdealCheckReport rep = checked(s.ideal(0), cfg, i);
  if (!rep.is_ideal) {
    out << "not an ideal: " << rep.counterexample << "\n";
    return kVerificationFailed;
  }
  const QuotientResult q = quotient_functor(i);
  out << "quotient " << q.quotient->name() << "\n";
  for (std::size_t c = 0; c < q.quotient->num_levels(); ++c) describe_level(out, *q.quotient, c);
  const MorphismReport v = validate_morphism(q.projection, kDefaultSamples, cfg.seed);
  out << "projection is a morphism: " << (v.ok ? "yes" : "no") << "\n";
  return v.ok ? kOk : kVerificationFailed;
}

int ideal_member(Session& s, const Config& cfg, std::ostream& out) {
  const IdealFamily& i = s.ideal(0);
  const LevelElement x = parse_level_element(*i.owner(), cfg.elem, i.owner()->catalog().top_class());
  const MembershipVerdict v = membership(i, x.level, x.value);
  out << to_string(v.value) << "\n";
  if (!v.explain.empty()) out << v.explain << "\n";
  return kOk;
}

// ---- spec -------------------------------------------------------------------

int spec_compute(Session& s, const Config& cfg, std::ostream& out) {
  const FunctorPtr t = s.functor();
  std::vector<std::pair<std::string, IdealFamily>> named;
  for (std::size_t k = 0; k < cfg.files.size(); ++k) {
    try {
      named.emplace_back("I" + std::to_string(k + 1), s.ideal(k));
    } catch (const InputError&) {
      break;
    }
  }
  const SpectrumReport rep = spec(t, named);
  out << rep.format();
  const LawReport laws = check_topology_laws(rep);
  out << "topology laws: " << (laws.ok ? "hold" : "FAIL") << " (" << laws.checks << " checks)\n";
  if (!laws.ok) out << laws.witness << "\n";
  const bool ok = laws.ok && rep.reduction_homeomorphism && rep.bijection_agrees && rep.connectivity.consistent;
  return ok ? kOk : kVerificationFailed;
}

int spec_classify(Session& s, const Config&, std::ostream& out) {
  out << classify(s.functor()).format();
  return kOk;
}

int spec_map_cmd(Session& s, const Config& cfg, std::ostream& out) {
  IdealFamily i = s.ideal(0);
  if (!checked(s.ideal(0), cfg, i).is_ideal) throw InputError("spec map needs an ideal");
  const QuotientResult q = quotient_functor(i);
  const SpecMapReport rep = spec_map(q.projection);
  out << "Spec(T/I) -> Spec(T) by preimage under the projection\n";
  for (std::size_t k = 0; k < rep.map.size(); ++k) out << "q" << (k + 1) << " -> p" << (rep.map[k] + 1) << "\n";
  out << "well defined: " << (rep.well_defined ? "yes" : "no") << "\n";
  out << "continuous: " << (rep.continuous ? "yes" : "no") << "\n";
  out << "homeomorphism onto V(Ker): " << (rep.onto_kernel_closed_set ? "yes" : "no") << "\n";
  if (!rep.witness.empty()) out << rep.witness << "\n";
  return rep.well_defined && rep.continuous && rep.onto_kernel_closed_set ? kOk : kVerificationFailed;
}

// ---- demo -------------------------------------------------------------------

int demo_norm_example(Session& s, const Config& cfg, std::ostream& out) {
  const ContextPtr ctx = s.context(cfg.group);
  const auto om = omega_functor(ctx, cfg.cap_points);
  const TransitiveMap pt = ctx->projection(0, ctx->catalog().top_class());
  const Value x = om->parse(0, "2*[G/e]");
  const Value by_pi = om->norm_by_enumeration(pt, x);
  const Value by_poly = om->norm(pt, x);
  const Value by_marks = om->norm_by_marks(pt, x);
  out << "nm along " << ctx->describe(pt) << " of " << om->format(0, x) << "\n";
  out << "explicit Pi_f enumeration: " << om->format(pt.dst, by_pi) << "\n";
  out << "norm polynomial:           " << om->format(pt.dst, by_poly) << "\n";
  out << "table of marks oracle:     " << om->format(pt.dst, by_marks) << "\n";
  const bool ok = by_pi == by_poly && by_pi == by_marks;
  out << (ok ? "all three agree\n" : "MISMATCH\n");
  return ok ? kOk : kVerificationFailed;
}

int demo_mrc(Session& s, const Config& cfg, std::ostream& out) {
  const ContextPtr ctx = s.context(cfg.group);
  const FunctorPtr om = omega_functor(ctx, cfg.cap_points);
  const QuotientResult mrc = mrcize(om);
  const TambaraMorphism to_pz = restriction_to_free_level(mrc.quotient);
  const IsoReport iso = first_iso_check(to_pz);
  out << "Omega_MRC = Omega / I_(0) -> P_Z by restriction to G/e\n";
  out << iso.table;
  out << "valid morphism: " << (iso.valid ? "yes" : "no") << ", injective: " << (iso.injective ? "yes" : "no")
      << ", surjective: " << (iso.surjective ? "yes" : "no") << "\n";
  if (!iso.witness.empty()) out << iso.witness << "\n";
  out << (iso.ok ? "isomorphism Omega_MRC = P_Z verified\n" : "isomorphism check FAILED\n");
  return iso.ok ? kOk : kVerificationFailed;
}

int demo_crt(Session& s, const Config& cfg, std::ostream& out) {
  const ContextPtr ctx = s.context(cfg.group);
  const FunctorPtr p = make_functor(ctx, "zmod 6 trivial");
  const LevelRing& re = p->level(0);
  const IdealFamily i2 = invariant_ideal_lift(p, level_ideal(re, {p->parse(0, "2")}));
  const IdealFamily i3 = invariant_ideal_lift(p, level_ideal(re, {p->parse(0, "3")}));
  out << format_ideal(i2, "zmod 6 trivial", cfg.group) << format_ideal(i3, "zmod 6 trivial", cfg.group);
  const CrtReport rep = coprime_and_crt({i2, i3}, saturation(cfg));
  out << "pairwise coprime: " << (rep.pairwise_coprime ? "yes" : "no") << "\n";
  out << "product equals intersection: " << (rep.product_is_intersection ? "yes" : "no") << "\n";
  out << "levelwise products: " << (rep.levelwise_products ? "yes" : "no") << "\n";
  out << "T/(I n J) -> T/I x T/J valid: " << (rep.iso_valid ? "yes" : "no")
      << ", bijective: " << (rep.iso_bijective ? "yes" : "no") << "\n";
  out << "checks " << rep.checks << "\n";
  if (!rep.witness.empty()) out << rep.witness << "\n";
  return rep.ok() ? kOk : kVerificationFailed;
}

int demo_omega_domain(Session& s, const Config& cfg, std::ostream& out) {
  const auto om = omega_functor(s.context(cfg.group), cfg.cap_points);
  const DomainSweep sw = omega_domain_sweep(*om, cfg.pairs, cfg.seed, cfg.box);
  if (sw.first) out << sw.first->format(*om);
  out << sw.pairs << " random nonzero pair(s), " << sw.failures << " failure(s)\n";
  if (sw.failures) out << sw.first_failure;
  return sw.failures ? kVerificationFailed : kOk;
}

int demo_spec_inclusion(Session& s, const Config& cfg, std::ostream& out) {
  const auto om = omega_functor(s.context(cfg.group), cfg.cap_points);
  const SpecInclusionReport rep = spec_inclusion_demo(om);
  out << rep.format();
  return rep.distinct && rep.zero_not_lifted ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact computations with Tambara functors on finite groups", "tambara"};
  app.require_subcommand(1);
  std::function<int(Session&)> action;

  auto common = [&](CLI::App* c) {
    c->add_option("--group", cfg.group, "built-in group (c2, c3, c4, s3, c2xc2) or a group loaded by --file");
    c->add_option("--functor", cfg.functor, "omega | pz | zmod <n> trivial | prodfield <q> <n> perm|trivial | gring <name>");
    c->add_option("--file", cfg.files, "text document with group/gset/gmap/gring/ideal blocks");
    c->add_option("--cap-points", cfg.cap_points, "maximum constructed G-set points per call");
    c->add_option("--box", cfg.box, "coordinate bound for lattice sampling");
    c->add_option("--rounds", cfg.rounds, "saturation round cap");
    c->add_option("--seed", cfg.seed, "seed for every random draw");
    c->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text"}));
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    CLI::App* c = parent->add_subcommand(name, help);
    common(c);
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto wrap = [&](void (*fn)(Session&, const Config&, std::ostream&)) {
    return [&cfg, &out, fn](Session& s) {
      fn(s, cfg, out);
      return static_cast<int>(kOk);
    };
  };
  auto wrapi = [&](int (*fn)(Session&, const Config&, std::ostream&)) {
    return [&cfg, &out, fn](Session& s) { return fn(s, cfg, out); };
  };

  CLI::App* group = app.add_subcommand("group", "finite groups and subgroup catalogs");
  group->require_subcommand(1);
  leaf(group, "info", "order, subgroup classes and canonical description", wrap(group_info));
  leaf(group, "subgroups", "every subgroup with its class", wrap(group_subgroups));

  CLI::App* gset = app.add_subcommand("gset", "finite G-sets loaded by --file");
  gset->require_subcommand(1);
  leaf(gset, "orbits", "orbit decomposition", wrap(gset_orbits))->add_option("--set", cfg.set)->required();
  auto* maps = leaf(gset, "maps", "all equivariant maps", wrap(gset_maps));
  maps->add_option("--src", cfg.src)->required();
  maps->add_option("--dst", cfg.dst)->required();
  auto* pi = leaf(gset, "pi", "dependent product Pi_f(p)", wrap(gset_pi));
  pi->add_option("--map", cfg.map, "f as <X>-><Y>")->required();
  pi->add_option("--along", cfg.along, "p as <A>-><X>")->required();

  CLI::App* tam = app.add_subcommand("tam", "structure maps of a Tambara functor");
  tam->require_subcommand(1);
  auto* eval = leaf(tam, "eval", "levels, T(X) for a loaded G-set, or an element in normal form", wrap(tam_eval));
  eval->add_option("--set", cfg.set);
  eval->add_option("--elem", cfg.elem, "[<H>:] literal");
  for (auto [name, tag, sh] : {std::tuple{"res", TransportTag::Restrict, false},
                               std::tuple{"tr", TransportTag::Transfer, false},
                               std::tuple{"nm", TransportTag::Norm, false},
                               std::tuple{"shriek", TransportTag::Norm, true}}) {
    auto* c = leaf(tam, name, std::string(name) + " along a transitive map",
                   [&cfg, &out, tag = tag, sh = sh](Session& s) {
                     tam_structure(s, cfg, out, tag, sh);
                     return static_cast<int>(kOk);
                   });
    c->add_option("--map", cfg.map, "<K>-><H>[@g] or p<H><K>")->required();
    c->add_option("--elem", cfg.elem, "element literal")->required();
  }
  leaf(tam, "axioms", "verify every Tambara functor identity", wrapi(tam_axioms));

  CLI::App* ideal = app.add_subcommand("ideal", "ideals of Tambara functors");
  ideal->require_subcommand(1);
  auto* gen = leaf(ideal, "gen", "saturate generators into an ideal", wrapi(ideal_gen));
  gen->add_option("--gen", cfg.gens, "[<H>:] literal")->required();
  gen->add_flag("--trace", cfg.trace, "print the derivation log");
  leaf(ideal, "check", "check the ideal conditions", wrapi(ideal_check));
  leaf(ideal, "op", "sum, product or intersection of two ideals", wrapi(ideal_op))
      ->add_option("--op", cfg.op, "sum | product | intersect");
  leaf(ideal, "radical", "radical of an ideal of a finite functor", wrapi(ideal_radical));
  leaf(ideal, "lift", "largest ideal over a G-invariant level-e ideal", wrapi(ideal_lift))
      ->add_option("--gen", cfg.gens, "level-e generators")
      ->required();
  leaf(ideal, "quotient", "quotient functor T/I", wrapi(ideal_quotient));
  leaf(ideal, "member", "tri-state membership with a derivation trace", wrapi(ideal_member))
      ->add_option("--elem", cfg.elem, "[<H>:] literal")
      ->required();

  CLI::App* sp = app.add_subcommand("spec", "prime spectra");
  sp->require_subcommand(1);
  leaf(sp, "compute", "primes, closed sets, flags and connectivity", wrapi(spec_compute));
  leaf(sp, "classify", "MRC, field-like, domain-like and reduced flags", wrapi(spec_classify));
  leaf(sp, "map", "Spec(T/I) -> Spec(T) for an ideal loaded by --file", wrapi(spec_map_cmd));

  CLI::App* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  leaf(demo, "norm-example", "nm of 2*[G/e] along G/e -> G/G", wrapi(demo_norm_example));
  leaf(demo, "mrc", "Omega_MRC is isomorphic to P_Z", wrapi(demo_mrc));
  leaf(demo, "crt", "Chinese remainder theorem for P_Z/6", wrapi(demo_crt));
  leaf(demo, "omega-domain", "certified nonzero products in Omega", wrapi(demo_omega_domain))
      ->add_option("--pairs", cfg.pairs, "number of random pairs");
  leaf(demo, "spec-inclusion", "distinct primes of Omega", wrapi(demo_spec_inclusion));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    Session session(cfg);
    return action(session);
  } catch (const ResourceCapError& e) {
    err << "refused: " << e.what() << "\n";
    return kResourceCap;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace tambara::cli
