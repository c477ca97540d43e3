#include "tambara/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "tambara/error.hpp"
#include "tambara/quotient.hpp"

namespace tambara {

// ---- Level-ideal arithmetic -------------------------------------------------

namespace {

int idx(const Value& v) { return static_cast<int>(v[0]); }

std::vector<bool> finite_closure(const LevelRing& r, std::vector<bool> members, const std::vector<Value>& gens) {
  std::deque<int> queue;
  for (int x = 0; x < static_cast<int>(members.size()); ++x)
    if (members[x]) queue.push_back(x);
  if (!members[r.zero_index()]) {
    members[r.zero_index()] = true;
    queue.push_back(r.zero_index());
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const Value& g : gens) {
      const int y = r.add_index(x, idx(g));
      if (!members[y]) {
        members[y] = true;
        queue.push_back(y);
      }
    }
  }
  return members;
}

void check_shape(const LevelRing& r, const LevelIdeal& i) {
  if (r.is_finite()) {
    if (i.members.size() != r.size()) throw InputError("level ideal does not match its ring");
  } else {
    for (const auto& row : i.basis)
      if (row.size() != r.rank()) throw InputError("level ideal basis has wrong width");
  }
}

}  // namespace

LevelIdeal level_zero(const LevelRing& r) {
  LevelIdeal i;
  if (r.is_finite()) {
    i.members.assign(r.size(), false);
    i.members[r.zero_index()] = true;
  }
  return i;
}

LevelIdeal level_whole(const LevelRing& r) {
  LevelIdeal i;
  if (r.is_finite())
    i.members.assign(r.size(), true);
  else
    i.basis = identity_matrix(r.rank());
  return i;
}

LevelIdeal level_span(const LevelRing& r, const std::vector<Value>& gens) {
  for (const Value& g : gens)
    if (!r.is_valid(g)) throw InputError("invalid ring element in ideal generators");
  LevelIdeal i;
  if (r.is_finite()) {
    i.members = finite_closure(r, std::vector<bool>(r.size(), false), gens);
  } else {
    i.basis = hermite_rows(IntMat(gens.begin(), gens.end()), r.rank());
  }
  return i;
}

LevelIdeal level_ideal(const LevelRing& r, const std::vector<Value>& gens) {
  std::vector<Value> all;
  const auto scalars = level_generators(r, level_whole(r));
  for (const Value& g : gens)
    for (const Value& s : scalars) all.push_back(r.mul(s, g));
  return level_span(r, all);
}

bool level_contains(const LevelRing& r, const LevelIdeal& i, const Value& x) {
  if (r.is_finite()) return i.members[idx(x)];
  return lattice_contains(i.basis, x);
}

bool level_subset(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b) {
  if (r.is_finite()) {
    for (std::size_t x = 0; x < a.members.size(); ++x)
      if (a.members[x] && !b.members[x]) return false;
    return true;
  }
  return lattice_subset(a.basis, b.basis);
}

bool level_is_whole(const LevelRing& r, const LevelIdeal& i) { return level_contains(r, i, r.one()); }

bool level_is_zero(const LevelRing& r, const LevelIdeal& i) {
  if (r.is_finite()) return level_count(i) == 1;
  return i.basis.empty();
}

LevelIdeal level_intersect(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b) {
  LevelIdeal out;
  if (r.is_finite()) {
    out.members.resize(a.members.size());
    for (std::size_t x = 0; x < a.members.size(); ++x) out.members[x] = a.members[x] && b.members[x];
  } else {
    out.basis = lattice_intersection(a.basis, b.basis, r.rank());
  }
  return out;
}

LevelIdeal level_sum(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b) {
  auto gens = level_generators(r, a);
  const auto more = level_generators(r, b);
  gens.insert(gens.end(), more.begin(), more.end());
  return level_span(r, gens);
}

LevelIdeal level_product(const LevelRing& r, const LevelIdeal& a, const LevelIdeal& b) {
  std::vector<Value> gens;
  for (const Value& x : level_generators(r, a))
    for (const Value& y : level_generators(r, b)) gens.push_back(r.mul(x, y));
  return level_span(r, gens);
}

std::vector<Value> level_generators(const LevelRing& r, const LevelIdeal& i) {
  if (!r.is_finite()) return std::vector<Value>(i.basis.begin(), i.basis.end());
  std::vector<Value> gens;
  std::vector<bool> span(r.size(), false);
  span[r.zero_index()] = true;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (i.members[x] && !span[x]) {
      gens.push_back(r.element(x));
      span = finite_closure(r, span, gens);
    }
  return gens;
}

std::vector<Value> level_members(const LevelRing& r, const LevelIdeal& i) {
  if (!r.is_finite()) throw UnsupportedError("lattice ideals have infinitely many members");
  std::vector<Value> out;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (i.members[x]) out.push_back(r.element(x));
  return out;
}

std::size_t level_count(const LevelIdeal& i) {
  return static_cast<std::size_t>(std::count(i.members.begin(), i.members.end(), true));
}

std::vector<LevelIdeal> finite_ring_ideals(const LevelRing& r, std::size_t cap) {
  if (!r.is_finite()) throw UnsupportedError("ideal enumeration needs a finite ring");
  std::vector<LevelIdeal> found{level_zero(r)};
  std::map<std::vector<bool>, bool> seen{{found[0].members, true}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto base = level_generators(r, found[k]);
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (found[k].members[x]) continue;
      auto gens = base;
      gens.push_back(r.element(x));
      LevelIdeal next = level_ideal(r, gens);
      if (seen.emplace(next.members, true).second) {
        if (found.size() >= cap) throw ResourceCapError("too many ideals in a finite ring");
        found.push_back(std::move(next));
      }
    }
  }
  auto key = [](const LevelIdeal& i) {
    std::vector<std::size_t> m;
    for (std::size_t x = 0; x < i.members.size(); ++x)
      if (i.members[x]) m.push_back(x);
    return m;
  };
  std::sort(found.begin(), found.end(), [&](const LevelIdeal& a, const LevelIdeal& b) {
    const auto ka = key(a), kb = key(b);
    if (ka.size() != kb.size()) return ka.size() < kb.size();
    return ka < kb;
  });
  return found;
}

// ---- Certificates -----------------------------------------------------------

const char* to_string(CertMode m) {
  switch (m) {
    case CertMode::ProvedExhaustive: return "proved-exhaustive";
    case CertMode::ProvedByTheorem: return "proved-by-theorem";
    case CertMode::Sampled: return "sampled";
    case CertMode::Unknown: break;
  }
  return "unknown";
}

namespace {

bool is_proved(CertMode m) { return m == CertMode::ProvedExhaustive || m == CertMode::ProvedByTheorem; }

// Mode of a construction that is an ideal whenever its inputs are.
CertMode inherit(CertMode a, CertMode b) {
  if (a == CertMode::Unknown || b == CertMode::Unknown) return CertMode::Unknown;
  if (a == CertMode::Sampled || b == CertMode::Sampled) return CertMode::Sampled;
  return CertMode::ProvedByTheorem;
}

Certificate by_theorem() {
  Certificate c;
  c.restriction = c.transfer = c.shriek = CertMode::ProvedByTheorem;
  return c;
}

}  // namespace

bool Certificate::proved() const { return is_proved(restriction) && is_proved(transfer) && is_proved(shriek); }
bool Certificate::known() const {
  return restriction != CertMode::Unknown && transfer != CertMode::Unknown && shriek != CertMode::Unknown;
}

// ---- IdealFamily ------------------------------------------------------------

IdealFamily::IdealFamily(FunctorPtr owner, std::vector<LevelIdeal> levels, Certificate cert)
    : owner_(std::move(owner)), levels_(std::move(levels)), cert_(cert) {
  if (!owner_) throw InputError("ideal needs an owning functor");
  if (levels_.size() != owner_->num_levels()) throw InputError("ideal needs one entry per level");
  for (std::size_t c = 0; c < levels_.size(); ++c) {
    const LevelRing& r = owner_->level(c);
    check_shape(r, levels_[c]);
    if (!r.is_finite()) levels_[c].basis = hermite_rows(levels_[c].basis, r.rank());
  }
}

IdealFamily IdealFamily::zero(const FunctorPtr& owner) {
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < owner->num_levels(); ++c) levels.push_back(level_zero(owner->level(c)));
  return IdealFamily(owner, std::move(levels), by_theorem());
}

IdealFamily IdealFamily::whole(const FunctorPtr& owner) {
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < owner->num_levels(); ++c) levels.push_back(level_whole(owner->level(c)));
  return IdealFamily(owner, std::move(levels), by_theorem());
}

bool IdealFamily::contains(std::size_t cls, const Value& x) const {
  return level_contains(owner_->level(cls), levels_[cls], x);
}

bool IdealFamily::subset_of(const IdealFamily& other) const {
  for (std::size_t c = 0; c < levels_.size(); ++c)
    if (!level_subset(owner_->level(c), levels_[c], other.levels_[c])) return false;
  return true;
}

bool IdealFamily::is_whole() const {
  for (std::size_t c = 0; c < levels_.size(); ++c)
    if (!level_is_whole(owner_->level(c), levels_[c])) return false;
  return true;
}

bool IdealFamily::is_zero() const {
  for (std::size_t c = 0; c < levels_.size(); ++c)
    if (!level_is_zero(owner_->level(c), levels_[c])) return false;
  return true;
}

std::vector<Value> IdealFamily::generators(std::size_t cls) const {
  return level_generators(owner_->level(cls), levels_[cls]);
}

std::string IdealFamily::format() const {
  std::ostringstream os;
  os << "ideal over " << owner_->name() << "\n";
  for (std::size_t c = 0; c < levels_.size(); ++c) {
    const LevelRing& r = owner_->level(c);
    os << "level " << owner_->catalog().class_name(c) << ": ";
    if (r.is_finite()) {
      os << "{";
      bool first = true;
      for (const Value& v : level_members(r, levels_[c])) {
        os << (first ? "" : ", ") << owner_->format(c, v);
        first = false;
      }
      os << "}";
    } else {
      os << "lattice [";
      for (std::size_t i = 0; i < levels_[c].basis.size(); ++i)
        os << (i ? "; " : "") << owner_->format(c, levels_[c].basis[i]);
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

// ---- Box enumeration --------------------------------------------------------

namespace {

// Coordinates in [-box, box]^k by L1 norm, each coordinate ordered 0, 1, -1, 2, -2, ...
std::vector<IntVec> box_points(std::size_t k, std::int64_t box) {
  std::vector<IntVec> pts{IntVec(k, 0)};
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<IntVec> next;
    for (const IntVec& p : pts)
      for (std::int64_t v = -box; v <= box; ++v) {
        IntVec q = p;
        q[d] = v;
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  auto rank = [](std::int64_t v) { return v > 0 ? 2 * v - 1 : -2 * v; };
  std::sort(pts.begin(), pts.end(), [&](const IntVec& a, const IntVec& b) {
    std::int64_t na = 0, nb = 0;
    for (auto v : a) na += v < 0 ? -v : v;
    for (auto v : b) nb += v < 0 ? -v : v;
    if (na != nb) return na < nb;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
    return false;
  });
  return pts;
}

// The elements of a level ideal tried by (iii'): every member, or the coordinate box.
std::vector<Value> shriek_domain(const LevelRing& r, const LevelIdeal& i, std::int64_t box) {
  if (r.is_finite()) return level_members(r, i);
  std::vector<Value> out;
  for (const IntVec& c : box_points(i.basis.size(), box))
    out.push_back(i.basis.empty() ? r.zero() : vec_mat(c, i.basis, r.rank()));
  return out;
}

}  // namespace

// ---- check_ideal ------------------------------------------------------------

IdealCheckReport check_ideal(const IdealFamily& ideal, std::int64_t box) {
  const TambaraFunctor& t = ideal.functor();
  const GroupContext& ctx = t.context();
  IdealCheckReport rep;
  rep.certificate.box = box;
  auto note = [&](bool& flag, const std::string& why) {
    if (rep.counterexample.empty()) rep.counterexample = why;
    flag = false;
  };
  auto lvl = [&](std::size_t c) { return "I(" + t.catalog().class_name(c) + ")"; };

  for (std::size_t c = 0; c < t.num_levels(); ++c) {
    const LevelRing& r = t.level(c);
    const LevelIdeal& li = ideal.level(c);
    const auto gens = ideal.generators(c);
    if (r.is_finite() && !li.members[r.zero_index()]) note(rep.levels_ok, lvl(c) + " does not contain 0");
    for (const Value& g : gens) {
      for (const Value& s : level_generators(r, level_whole(r))) {
        ++rep.checks;
        const Value p = r.mul(s, g);
        if (!level_contains(r, li, p))
          note(rep.levels_ok, lvl(c) + " is not closed under multiplication: " + t.format(c, s) + " * " +
                                  t.format(c, g) + " = " + t.format(c, p));
      }
      if (r.is_finite())
        for (const Value& h : gens)
          if (!level_contains(r, li, r.add(g, h))) note(rep.levels_ok, lvl(c) + " is not closed under addition");
    }
    if (level_is_whole(r, li)) rep.trivial = true;
  }

  bool lattice_shriek = false;
  for (const TransitiveMap& f : ctx.maps()) {
    for (const Value& y : ideal.generators(f.dst)) {
      ++rep.checks;
      const Value x = t.restrict(f, y);
      if (!ideal.contains(f.src, x))
        note(rep.condition_i, "condition (i) fails: res along " + ctx.describe(f) + " of " + t.format(f.dst, y) +
                                  " = " + t.format(f.src, x) + " is not in " + lvl(f.src));
    }
    for (const Value& x : ideal.generators(f.src)) {
      ++rep.checks;
      const Value y = t.transfer(f, x);
      if (!ideal.contains(f.dst, y))
        note(rep.condition_ii, "condition (ii) fails: tr along " + ctx.describe(f) + " of " + t.format(f.src, x) +
                                   " = " + t.format(f.dst, y) + " is not in " + lvl(f.dst));
    }
    const LevelRing& rs = t.level(f.src);
    if (!rs.is_finite() && !ideal.level(f.src).basis.empty()) lattice_shriek = true;
    for (const Value& x : shriek_domain(rs, ideal.level(f.src), box)) {
      ++rep.checks;
      const Value y = shriek(t, f, x);
      if (!ideal.contains(f.dst, y)) {
        note(rep.condition_iii, "condition (iii) fails: nm along " + ctx.describe(f) + " of " + t.format(f.src, x) +
                                    " = " + t.format(f.dst, y) + " is not in " + lvl(f.dst));
        break;
      }
    }
  }
  rep.certificate.restriction = CertMode::ProvedExhaustive;
  rep.certificate.transfer = CertMode::ProvedExhaustive;
  if (!lattice_shriek)
    rep.certificate.shriek = CertMode::ProvedExhaustive;
  else if (ideal.certificate().shriek == CertMode::ProvedByTheorem)
    rep.certificate.shriek = CertMode::ProvedByTheorem;
  else
    rep.certificate.shriek = CertMode::Sampled;
  rep.is_ideal = rep.levels_ok && rep.condition_i && rep.condition_ii && rep.condition_iii;
  return rep;
}

// ---- Saturation -------------------------------------------------------------

namespace {

using Combination = std::vector<std::pair<std::int64_t, std::size_t>>;

class Saturator {
 public:
  explicit Saturator(const FunctorPtr& t) : t_(t), state_(t->num_levels()) {
    for (std::size_t c = 0; c < state_.size(); ++c) state_[c].ideal = level_zero(t_->level(c));
  }

  bool add(DerivationStep step) {
    const LevelRing& r = t_->level(step.level);
    State& s = state_[step.level];
    if (level_contains(r, s.ideal, step.value)) return false;
    s.steps.push_back(log_.steps.size());
    if (r.is_finite()) {
      s.ideal.members = finite_closure(r, s.ideal.members, {step.value});
    } else {
      IntMat rows = s.ideal.basis;
      rows.push_back(step.value);
      s.ideal.basis = hermite_rows(std::move(rows), r.rank());
    }
    log_.steps.push_back(std::move(step));
    return true;
  }

  static Combination express_in(const DerivationLog& log, std::size_t cls, const Value& x, const LevelRing& r) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < log.steps.size(); ++i)
      if (log.steps[i].level == cls) ids.push_back(i);
    Combination out;
    if (r.is_finite()) {
      // Breadth-first search over the additive span, remembering the last step used.
      std::vector<int> via(r.size(), -2), prev(r.size(), -1);
      std::deque<int> queue{r.zero_index()};
      via[r.zero_index()] = -1;
      while (!queue.empty() && via[idx(x)] == -2) {
        const int a = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < ids.size(); ++k) {
          const int b = r.add_index(a, idx(log.steps[ids[k]].value));
          if (via[b] != -2) continue;
          via[b] = static_cast<int>(k);
          prev[b] = a;
          queue.push_back(b);
        }
      }
      if (via[idx(x)] == -2) throw InputError("element is not in the derived span");
      std::vector<std::int64_t> count(ids.size(), 0);
      for (int a = idx(x); via[a] >= 0; a = prev[a]) ++count[via[a]];
      for (std::size_t k = 0; k < ids.size(); ++k)
        if (count[k]) out.emplace_back(count[k], ids[k]);
      return out;
    }
    if (vec_is_zero(x)) return out;
    IntMat rows;
    for (std::size_t id : ids) rows.push_back(log.steps[id].value);
    const HermiteWithTransform hw = hermite_with_transform(rows, r.rank());
    const auto coords = lattice_coordinates(hw.h, x);
    if (!coords) throw InputError("element is not in the derived span");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::int64_t c = 0;
      for (std::size_t k = 0; k < hw.rank; ++k) c += (*coords)[k] * hw.transform[k][i];
      if (c) out.emplace_back(c, ids[i]);
    }
    return out;
  }

  GenerateResult run(const std::vector<Generator>& gens, const SaturationOptions& opt) {
    for (const Generator& g : gens) {
      if (g.level >= state_.size()) throw InputError("generator level out of range");
      if (!t_->level(g.level).is_valid(g.value)) throw InputError("generator is not an element of its level");
      DerivationStep s;
      s.kind = DerivationStep::Kind::Generator;
      s.level = g.level;
      s.value = g.value;
      add(std::move(s));
    }
    const GroupContext& ctx = t_->context();
    std::vector<std::vector<Value>> scalars;
    for (std::size_t c = 0; c < state_.size(); ++c)
      scalars.push_back(level_generators(t_->level(c), level_whole(t_->level(c))));

    std::size_t rounds = 0;
    bool changed = true;
    while (changed && rounds < opt.rounds) {
      ++rounds;
      changed = false;
      for (std::size_t c = 0; c < state_.size(); ++c) {
        const LevelRing& r = t_->level(c);
        for (std::size_t k = 0; k < state_[c].steps.size(); ++k) {
          const std::size_t id = state_[c].steps[k];
          for (const Value& s : scalars[c]) {
            DerivationStep st;
            st.kind = DerivationStep::Kind::Multiply;
            st.level = c;
            st.factor = s;
            st.input = {{1, id}};
            st.value = r.mul(s, log_.steps[id].value);
            changed |= add(std::move(st));
          }
        }
      }
      for (const TransitiveMap& f : ctx.maps()) {
        const auto down = state_[f.dst].steps;
        for (std::size_t id : down) changed |= add(linear(DerivationStep::Kind::Restrict, f, f.src, id));
        const auto up = state_[f.src].steps;
        for (std::size_t id : up) changed |= add(linear(DerivationStep::Kind::Transfer, f, f.dst, id));
      }
      for (const TransitiveMap& f : ctx.maps()) {
        if (ctx.degree(f) == 1) {
          // Degree one: nm is a ring isomorphism, so generators suffice.
          const auto src = state_[f.src].steps;
          for (std::size_t id : src) changed |= add(linear(DerivationStep::Kind::Norm, f, f.dst, id));
          continue;
        }
        const auto domain = shriek_domain(t_->level(f.src), state_[f.src].ideal, opt.box);
        for (const Value& x : domain) {
          const Value y = t_->norm(f, x);
          if (level_contains(t_->level(f.dst), state_[f.dst].ideal, y)) continue;
          DerivationStep st;
          st.kind = DerivationStep::Kind::Norm;
          st.level = f.dst;
          st.map = f;
          st.input = express_in(log_, f.src, x, t_->level(f.src));
          st.value = y;
          changed |= add(std::move(st));
        }
      }
    }

    std::vector<LevelIdeal> levels;
    bool finite = true;
    for (std::size_t c = 0; c < state_.size(); ++c) {
      levels.push_back(state_[c].ideal);
      if (!t_->level(c).is_finite() && !state_[c].ideal.basis.empty()) finite = false;
    }
    Certificate cert;
    cert.box = opt.box;
    cert.rounds = rounds;
    const bool converged = !changed;
    if (converged) {
      cert.restriction = cert.transfer = CertMode::ProvedExhaustive;
      cert.shriek = finite ? CertMode::ProvedExhaustive : CertMode::Sampled;
    }
    IdealFamily fam(t_, std::move(levels), cert);
    fam.set_exact(converged);
    fam.set_log(std::move(log_));
    return GenerateResult{std::move(fam), converged, rounds};
  }

 private:
  struct State {
    LevelIdeal ideal;
    std::vector<std::size_t> steps;
  };

  DerivationStep linear(DerivationStep::Kind kind, const TransitiveMap& f, std::size_t level, std::size_t id) const {
    DerivationStep st;
    st.kind = kind;
    st.level = level;
    st.map = f;
    st.input = {{1, id}};
    const Value& x = log_.steps[id].value;
    st.value = kind == DerivationStep::Kind::Restrict   ? t_->restrict(f, x)
               : kind == DerivationStep::Kind::Transfer ? t_->transfer(f, x)
                                                        : t_->norm(f, x);
    return st;
  }

  FunctorPtr t_;
  std::vector<State> state_;
  DerivationLog log_;
};

Value combination_value(const TambaraFunctor& t, std::size_t cls, const DerivationLog& log, const Combination& c,
                        const std::vector<Value>& values) {
  const LevelRing& r = t.level(cls);
  Value acc = r.zero();
  for (const auto& [coef, id] : c) {
    if (id >= values.size() || log.steps[id].level != cls) throw InputError("derivation input refers to a bad step");
    acc = r.add(acc, r.scale(coef, values[id]));
  }
  return acc;
}

std::string format_combination(const Combination& c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto [coef, id] = c[i];
    if (i) out += coef < 0 ? " - " : " + ";
    else if (coef < 0) out += "-";
    const std::int64_t a = coef < 0 ? -coef : coef;
    if (a != 1) out += std::to_string(a) + "*";
    out += "s" + std::to_string(id);
  }
  return out;
}

}  // namespace

std::string DerivationLog::describe(const TambaraFunctor& t, std::size_t step) const {
  const DerivationStep& s = steps.at(step);
  const GroupContext& ctx = t.context();
  std::string out = "s" + std::to_string(step) + " = ";
  const std::string in = format_combination(s.input);
  switch (s.kind) {
    case DerivationStep::Kind::Generator: out += "generator"; break;
    case DerivationStep::Kind::Restrict: out += "res[" + ctx.describe(s.map) + "](" + in + ")"; break;
    case DerivationStep::Kind::Transfer: out += "tr[" + ctx.describe(s.map) + "](" + in + ")"; break;
    case DerivationStep::Kind::Norm: out += "nm[" + ctx.describe(s.map) + "](" + in + ")"; break;
    case DerivationStep::Kind::Multiply: out += "(" + t.format(s.level, s.factor) + ") * (" + in + ")"; break;
  }
  return out + " = " + t.format(s.level, s.value) + " at " + t.catalog().class_name(s.level);
}

GenerateResult generate(const FunctorPtr& t, const std::vector<Generator>& gens, const SaturationOptions& opt) {
  if (opt.box < 0) throw InputError("box bound must be non-negative");
  Saturator sat(t);
  return sat.run(gens, opt);
}

bool replay(const IdealFamily& ideal) {
  if (!ideal.log()) return false;
  const TambaraFunctor& t = ideal.functor();
  const DerivationLog& log = *ideal.log();
  std::vector<Value> values;
  std::vector<std::vector<Value>> spans(t.num_levels());
  for (const DerivationStep& s : log.steps) {
    if (s.level >= t.num_levels()) return false;
    Value v;
    try {
      switch (s.kind) {
        case DerivationStep::Kind::Generator: v = s.value; break;
        case DerivationStep::Kind::Multiply:
          v = t.level(s.level).mul(s.factor, combination_value(t, s.level, log, s.input, values));
          break;
        case DerivationStep::Kind::Restrict:
          v = t.restrict(s.map, combination_value(t, s.map.dst, log, s.input, values));
          break;
        case DerivationStep::Kind::Transfer:
          v = t.transfer(s.map, combination_value(t, s.map.src, log, s.input, values));
          break;
        case DerivationStep::Kind::Norm:
          v = t.norm(s.map, combination_value(t, s.map.src, log, s.input, values));
          break;
      }
    } catch (const InputError&) {
      return false;
    }
    if (v != s.value) return false;
    spans[s.level].push_back(v);
    values.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < t.num_levels(); ++c)
    if (!(level_span(t.level(c), spans[c]) == ideal.level(c))) return false;
  return true;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::In: return "in";
    case Membership::NotIn: return "not-in";
    case Membership::Unknown: break;
  }
  return "unknown";
}

MembershipVerdict membership(const IdealFamily& ideal, std::size_t cls, const Value& x) {
  const TambaraFunctor& t = ideal.functor();
  if (cls >= t.num_levels()) throw InputError("level out of range");
  if (!t.level(cls).is_valid(x)) throw InputError("not an element of the level");
  MembershipVerdict v;
  const std::string where = t.format(cls, x) + " at " + t.catalog().class_name(cls);
  if (ideal.contains(cls, x)) {
    v.value = Membership::In;
    if (ideal.log()) {
      v.trace = Saturator::express_in(*ideal.log(), cls, x, t.level(cls));
      v.explain = where + " = " + format_combination(v.trace);
    } else {
      v.explain = where + " lies in the stored level";
    }
  } else if (ideal.exact()) {
    v.value = Membership::NotIn;
    v.explain = where + " is outside I(" + t.catalog().class_name(cls) + ")";
  } else {
    v.explain = where + " is outside the partial saturation, which did not converge";
  }
  return v;
}

// ---- Operations -------------------------------------------------------------

namespace {

void same_owner(const IdealFamily& a, const IdealFamily& b) {
  if (a.owner() != b.owner()) throw InputError("ideals live in different functors");
}

std::vector<Generator> all_generators(const IdealFamily& a) {
  std::vector<Generator> out;
  for (std::size_t c = 0; c < a.num_levels(); ++c)
    for (Value& v : a.generators(c)) out.push_back(Generator{c, std::move(v)});
  return out;
}

IdealFamily saturate(const FunctorPtr& t, const std::vector<Generator>& gens, const SaturationOptions& opt,
                     bool inputs_exact) {
  GenerateResult g = generate(t, gens, opt);
  g.ideal.set_exact(g.converged && inputs_exact);
  return std::move(g.ideal);
}

}  // namespace

IdealFamily combine(CombineOp op, const IdealFamily& a, const IdealFamily& b, const SaturationOptions& opt) {
  same_owner(a, b);
  const TambaraFunctor& t = a.functor();
  const bool exact = a.exact() && b.exact();
  switch (op) {
    case CombineOp::Intersect: {
      std::vector<LevelIdeal> levels;
      for (std::size_t c = 0; c < t.num_levels(); ++c) levels.push_back(level_intersect(t.level(c), a.level(c), b.level(c)));
      Certificate cert;
      cert.restriction = inherit(a.certificate().restriction, b.certificate().restriction);
      cert.transfer = inherit(a.certificate().transfer, b.certificate().transfer);
      cert.shriek = inherit(a.certificate().shriek, b.certificate().shriek);
      IdealFamily out(a.owner(), std::move(levels), cert);
      out.set_exact(exact);
      return out;
    }
    case CombineOp::Sum: {
      auto gens = all_generators(a);
      const auto more = all_generators(b);
      gens.insert(gens.end(), more.begin(), more.end());
      return saturate(a.owner(), gens, opt, exact);
    }
    case CombineOp::Product: {
      std::vector<Generator> gens;
      for (std::size_t c = 0; c < t.num_levels(); ++c)
        for (const Value& v : level_generators(t.level(c), level_product(t.level(c), a.level(c), b.level(c))))
          gens.push_back(Generator{c, v});
      return saturate(a.owner(), gens, opt, exact);
    }
  }
  throw InputError("unknown ideal operation");
}

IdealFamily radical(const IdealFamily& ideal, std::size_t n_max) {
  const TambaraFunctor& t = ideal.functor();
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < t.num_levels(); ++c) {
    const LevelRing& r = t.level(c);
    if (!r.is_finite()) throw UnsupportedError("radicals are computed for finite-table functors only");
    LevelIdeal li;
    li.members.assign(r.size(), false);
    const std::size_t cap = n_max ? n_max : r.size();
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (ideal.level(c).members[x]) {
        li.members[x] = true;
        continue;
      }
      const IdealFamily a = generate(ideal.owner(), {Generator{c, r.element(x)}}).ideal;
      IdealFamily p = a;
      for (std::size_t n = 1; n <= cap; ++n) {
        if (p.subset_of(ideal)) {
          li.members[x] = true;
          break;
        }
        IdealFamily next = combine(CombineOp::Product, p, a);
        if (next == p) break;
        p = std::move(next);
      }
    }
    levels.push_back(std::move(li));
  }
  IdealFamily out(ideal.owner(), std::move(levels));
  out.set_certificate(check_ideal(out).certificate);
  out.set_exact(ideal.exact());
  return out;
}

namespace {

// {x : phi(x) in j} for an additive phi from src to dst.
LevelIdeal pull_back(const LevelRing& src, const LevelRing& dst, const std::function<Value(const Value&)>& phi,
                     const LevelIdeal& j) {
  LevelIdeal out;
  if (src.is_finite()) {
    out.members.assign(src.size(), false);
    for (std::size_t x = 0; x < src.size(); ++x) out.members[x] = level_contains(dst, j, phi(src.element(x)));
    return out;
  }
  const std::size_t rank = src.rank();
  std::vector<Value> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(phi(src.basis(i)));
  if (!dst.is_finite()) {
    out.basis = lattice_preimage(IntMat(images.begin(), images.end()), dst.rank(), j.basis);
    return out;
  }
  // Schreier generators for the kernel of Z^rank -> dst / j.
  std::vector<int> coset(dst.size(), -1);
  std::vector<int> rep;
  for (std::size_t z = 0; z < dst.size(); ++z) {
    if (coset[z] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(static_cast<int>(z));
    for (std::size_t m = 0; m < dst.size(); ++m)
      if (j.members[m]) coset[dst.add_index(static_cast<int>(z), static_cast<int>(m))] = id;
  }
  std::vector<IntVec> word(rep.size());
  std::vector<bool> seen(rep.size(), false);
  const int start = coset[dst.zero_index()];
  seen[start] = true;
  word[start] = IntVec(rank, 0);
  std::deque<int> queue{start};
  IntMat relations;
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rank; ++i) {
      const int u = coset[dst.add_index(rep[s], idx(images[i]))];
      IntVec w = word[s];
      w[i] += 1;
      if (!seen[u]) {
        seen[u] = true;
        word[u] = std::move(w);
        queue.push_back(u);
      } else {
        IntVec rel = vec_sub(w, word[u]);
        if (!vec_is_zero(rel)) relations.push_back(std::move(rel));
      }
    }
  }
  out.basis = hermite_rows(std::move(relations), rank);
  return out;
}

IdealFamily pull_back_family(const TambaraMorphism& phi, const std::vector<LevelIdeal>& target) {
  const TambaraFunctor& s = *phi.source();
  const TambaraFunctor& t = *phi.target();
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < s.num_levels(); ++c)
    levels.push_back(pull_back(s.level(c), t.level(c), [&](const Value& x) { return phi.apply(c, x); }, target[c]));
  return IdealFamily(phi.source(), std::move(levels), by_theorem());
}

}  // namespace

bool is_g_invariant(const TambaraFunctor& t, const LevelIdeal& i0) {
  const LevelRing& r = t.level(0);
  check_shape(r, i0);
  const LevelIdeal norm = r.is_finite() ? i0 : LevelIdeal{{}, hermite_rows(i0.basis, r.rank())};
  for (int g = 0; g < t.group().order(); ++g)
    for (const Value& x : level_generators(r, norm))
      if (!level_contains(r, norm, t.act_on_free_level(g, x))) return false;
  return true;
}

IdealFamily invariant_ideal_lift(const FunctorPtr& t, const LevelIdeal& i0) {
  const LevelRing& re = t->level(0);
  check_shape(re, i0);
  LevelIdeal base = i0;
  if (!re.is_finite()) base.basis = hermite_rows(base.basis, re.rank());
  // Must be an ideal of T(G/e) as well as G-stable.
  if (!(level_ideal(re, level_generators(re, base)) == base)) throw InputError("level-e data is not a ring ideal");
  if (!is_g_invariant(*t, base)) throw InputError("level-e ideal is not G-invariant");
  const GroupContext& ctx = t->context();
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < t->num_levels(); ++c) {
    const LevelRing& r = t->level(c);
    LevelIdeal acc = level_whole(r);
    for (std::size_t id : ctx.maps_between(0, c)) {
      const TransitiveMap& f = ctx.maps()[id];
      acc = level_intersect(r, acc, pull_back(r, re, [&](const Value& y) { return t->restrict(f, y); }, base));
    }
    levels.push_back(std::move(acc));
  }
  return IdealFamily(t, std::move(levels), by_theorem());
}

IdealFamily kernel(const TambaraMorphism& phi) {
  std::vector<LevelIdeal> zero;
  for (std::size_t c = 0; c < phi.target()->num_levels(); ++c) zero.push_back(level_zero(phi.target()->level(c)));
  return pull_back_family(phi, zero);
}

IdealFamily preimage(const TambaraMorphism& phi, const IdealFamily& j) {
  if (j.owner() != phi.target()) throw InputError("ideal does not live in the morphism's target");
  IdealFamily out = pull_back_family(phi, j.levels());
  Certificate c = by_theorem();
  c.restriction = inherit(c.restriction, j.certificate().restriction);
  c.transfer = inherit(c.transfer, j.certificate().transfer);
  c.shriek = inherit(c.shriek, j.certificate().shriek);
  out.set_certificate(c);
  out.set_exact(j.exact());
  return out;
}

IdealFamily pushforward(const TambaraMorphism& phi, const IdealFamily& i) {
  if (i.owner() != phi.source()) throw InputError("ideal does not live in the morphism's source");
  if (!is_surjective(phi)) throw InputError("pushforward needs a surjective morphism");
  if (!kernel(phi).subset_of(i)) throw InputError("pushforward needs an ideal containing the kernel");
  const TambaraFunctor& t = *phi.target();
  std::vector<LevelIdeal> levels;
  for (std::size_t c = 0; c < t.num_levels(); ++c) {
    std::vector<Value> gens;
    for (const Value& x : i.generators(c)) gens.push_back(phi.apply(c, x));
    levels.push_back(level_span(t.level(c), gens));
  }
  IdealFamily out(phi.target(), std::move(levels), i.certificate());
  Certificate c = i.certificate();
  c.restriction = inherit(c.restriction, CertMode::ProvedByTheorem);
  c.transfer = inherit(c.transfer, CertMode::ProvedByTheorem);
  c.shriek = inherit(c.shriek, CertMode::ProvedByTheorem);
  out.set_certificate(c);
  out.set_exact(i.exact());
  return out;
}

namespace {

// Coordinates of a target value inside the image functor built by image_functor.
Value image_coordinates(const ImageResult& im, std::size_t cls, const Value& v) {
  const LevelRing& r = im.image->level(cls);
  const auto& images = im.inclusion.level_map(cls).images;
  if (r.is_finite()) {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] == v) return r.element(i);
    throw InputError("value outside the image");
  }
  const auto c = lattice_coordinates(IntMat(images.begin(), images.end()), v);
  if (!c) throw InputError("value outside the image lattice");
  return *c;
}

std::vector<Value> table_domain(const LevelRing& r) {
  if (r.is_finite()) return r.elements();
  std::vector<Value> out;
  for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.basis(i));
  return out;
}

}  // namespace

IsoReport first_iso_check(const TambaraMorphism& phi) {
  IsoReport rep;
  const IdealFamily k = kernel(phi);
  QuotientResult q = quotient_functor(k);
  const ImageResult im = image_functor(phi);
  const auto quot = q.quotient;
  TambaraMorphism psi = TambaraMorphism::from_function(quot, im.image, [&](std::size_t c, const Value& y) {
    return image_coordinates(im, c, phi.apply(c, quot->lift(c, y)));
  });
  const MorphismReport v = validate_morphism(psi);
  rep.valid = v.ok;
  rep.witness = v.witness;
  rep.injective = is_injective(psi);
  rep.surjective = is_surjective(psi);
  rep.ok = rep.valid && rep.injective && rep.surjective;
  std::ostringstream os;
  for (std::size_t c = 0; c < quot->num_levels(); ++c) {
    os << "level " << quot->catalog().class_name(c) << ":";
    bool first = true;
    for (const Value& y : table_domain(quot->level(c))) {
      os << (first ? " " : ", ") << quot->format(c, y) << " -> " << im.image->format(c, psi.apply(c, y));
      first = false;
    }
    os << "\n";
  }
  rep.table = os.str();
  rep.iso = std::move(psi);
  return rep;
}

CrtReport coprime_and_crt(const std::vector<IdealFamily>& ideals, const SaturationOptions& opt) {
  if (ideals.size() < 2) throw InputError("the Chinese remainder check needs at least two ideals");
  for (const auto& i : ideals) same_owner(ideals[0], i);
  const TambaraFunctor& t = ideals[0].functor();
  const std::size_t top = t.catalog().top_class();
  CrtReport rep;
  for (std::size_t a = 0; a < ideals.size() && rep.pairwise_coprime; ++a)
    for (std::size_t b = a + 1; b < ideals.size() && rep.pairwise_coprime; ++b) {
      const IdealFamily s = combine(CombineOp::Sum, ideals[a], ideals[b], opt);
      ++rep.checks;
      if (!s.contains(top, t.level(top).one())) {
        rep.pairwise_coprime = false;
        rep.coprime_failure = "I" + std::to_string(a + 1) + " + I" + std::to_string(b + 1) + " does not contain 1 at " +
                              t.catalog().class_name(top);
      }
    }
  if (!rep.pairwise_coprime) return rep;

  IdealFamily prod = ideals[0];
  IdealFamily meet = ideals[0];
  for (std::size_t a = 1; a < ideals.size(); ++a) {
    prod = combine(CombineOp::Product, prod, ideals[a], opt);
    meet = combine(CombineOp::Intersect, meet, ideals[a], opt);
  }
  rep.levelwise_products = true;
  for (std::size_t c = 0; c < t.num_levels(); ++c) {
    LevelIdeal lp = ideals[0].level(c);
    for (std::size_t a = 1; a < ideals.size(); ++a) lp = level_product(t.level(c), lp, ideals[a].level(c));
    ++rep.checks;
    if (!(lp == prod.level(c))) {
      rep.levelwise_products = false;
      if (rep.witness.empty()) rep.witness = "product differs from the levelwise product at " + t.catalog().class_name(c);
    }
  }
  rep.product_is_intersection = prod == meet;
  ++rep.checks;
  if (!rep.product_is_intersection && rep.witness.empty()) rep.witness = "product differs from the intersection";

  try {
    const QuotientResult qp = quotient_functor(prod);
    std::vector<std::shared_ptr<const QuotientFunctor>> parts;
    for (const auto& i : ideals) parts.push_back(quotient_functor(i).quotient);
    // Right-nested product Q1 x (Q2 x (... x Qn)).
    std::vector<FunctorPtr> tails(parts.size());
    tails.back() = parts.back();
    for (std::size_t a = parts.size() - 1; a-- > 0;) tails[a] = product_functor(parts[a], tails[a + 1]);
    const auto quot = qp.quotient;
    TambaraMorphism psi = TambaraMorphism::from_function(quot, tails[0], [&](std::size_t c, const Value& y) {
      const Value x = quot->lift(c, y);
      Value acc = parts.back()->project(c, x);
      for (std::size_t a = parts.size() - 1; a-- > 0;)
        acc = join_product_value(parts[a]->level(c), tails[a + 1]->level(c), parts[a]->project(c, x), acc);
      return acc;
    });
    const MorphismReport v = validate_morphism(psi);
    rep.checks += v.checks;
    rep.iso_valid = v.ok;
    if (!v.ok && rep.witness.empty()) rep.witness = v.witness;
    rep.iso_bijective = is_injective(psi) && is_surjective(psi);
    if (!rep.iso_bijective && rep.witness.empty()) rep.witness = "comparison map is not bijective";
    rep.iso = std::move(psi);
  } catch (const std::exception& e) {
    if (rep.witness.empty()) rep.witness = e.what();
  }
  return rep;
}

}  // namespace tambara
