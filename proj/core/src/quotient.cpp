#include "tambara/quotient.hpp"

#include "tambara/error.hpp"

namespace tambara {

QuotientFunctor::QuotientFunctor(const IdealFamily& ideal, std::size_t finite_cap)
    : TambaraFunctor(ideal.owner()->context_ptr()), base_(ideal.owner()) {
  for (std::size_t c = 0; c < base_->num_levels(); ++c) {
    const LevelRing& r = base_->level(c);
    const LevelIdeal& li = ideal.level(c);
    Level lv;
    if (r.is_finite()) {
      lv.kind = LevelKind::Cosets;
      const int n = static_cast<int>(r.size());
      lv.class_of.assign(n, -1);
      for (int x = 0; x < n; ++x) {
        if (lv.class_of[x] >= 0) continue;
        const int id = static_cast<int>(lv.reps.size());
        lv.reps.push_back(x);
        for (int m = 0; m < n; ++m)
          if (li.members[m]) lv.class_of[r.add_index(x, m)] = id;
      }
      const std::size_t k = lv.reps.size();
      std::vector<std::vector<int>> add(k, std::vector<int>(k)), mul(k, std::vector<int>(k));
      std::vector<std::string> labels;
      for (std::size_t a = 0; a < k; ++a) {
        labels.push_back("[" + r.labels()[lv.reps[a]] + "]");
        for (std::size_t b = 0; b < k; ++b) {
          add[a][b] = lv.class_of[r.add_index(lv.reps[a], lv.reps[b])];
          mul[a][b] = lv.class_of[r.mul_index(lv.reps[a], lv.reps[b])];
        }
      }
      lv.ring = LevelRing::finite(add, mul, labels);
    } else if (li.basis.size() == r.rank()) {
      lv.kind = LevelKind::Residues;
      lv.hnf = li.basis;
      std::size_t total = 1;
      for (std::size_t i = 0; i < r.rank(); ++i) {
        lv.moduli.push_back(lv.hnf[i][i]);
        if (static_cast<std::size_t>(lv.hnf[i][i]) > finite_cap / total)
          throw ResourceCapError("quotient level " + catalog().class_name(c) + " has more than " +
                                 std::to_string(finite_cap) + " elements");
        total *= static_cast<std::size_t>(lv.hnf[i][i]);
      }
      std::vector<Value> residues(total);
      for (std::size_t i = 0; i < total; ++i) {
        Value v(r.rank());
        std::size_t rest = i;
        for (std::size_t d = 0; d < r.rank(); ++d) {
          v[d] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(lv.moduli[d]));
          rest /= static_cast<std::size_t>(lv.moduli[d]);
        }
        residues[i] = std::move(v);
      }
      levels_.push_back(lv);  // project() below needs the moduli in place
      std::vector<std::vector<int>> add(total, std::vector<int>(total)), mul(total, std::vector<int>(total));
      std::vector<std::string> labels;
      for (std::size_t a = 0; a < total; ++a) {
        labels.push_back("[" + base_->format(c, residues[a]) + "]");
        for (std::size_t b = 0; b < total; ++b) {
          add[a][b] = static_cast<int>(project(c, r.add(residues[a], residues[b]))[0]);
          mul[a][b] = static_cast<int>(project(c, r.mul(residues[a], residues[b]))[0]);
        }
      }
      levels_.back().ring = LevelRing::finite(add, mul, labels);
      continue;
    } else {
      lv.kind = LevelKind::Free;
      lv.k = li.basis.size();
      if (li.basis.empty()) {
        lv.v = lv.v_inverse = identity_matrix(r.rank());
      } else {
        const SmithForm s = smith_form(li.basis, r.rank());
        for (std::int64_t d : s.diagonal)
          if (d != 1)
            throw UnsupportedError("quotient level " + catalog().class_name(c) +
                                   " would have both torsion and a free part");
        lv.v = s.v;
        lv.v_inverse = s.v_inverse;
      }
      levels_.push_back(lv);
      const std::size_t q = r.rank() - lv.k;
      std::vector<std::vector<IntVec>> consts(q, std::vector<IntVec>(q));
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < q; ++i) {
        Value ei(q, 0);
        ei[i] = 1;
        labels.push_back("[" + base_->format(c, lift(c, ei)) + "]");
        for (std::size_t j = 0; j < q; ++j) {
          Value ej(q, 0);
          ej[j] = 1;
          consts[i][j] = project(c, r.mul(lift(c, ei), lift(c, ej)));
        }
      }
      levels_.back().ring = LevelRing::lattice(q, std::move(consts), project(c, r.one()), std::move(labels));
      continue;
    }
    levels_.push_back(std::move(lv));
  }
}

Value QuotientFunctor::project(std::size_t cls, const Value& x) const {
  const Level& lv = levels_[cls];
  switch (lv.kind) {
    case LevelKind::Cosets: return Value{lv.class_of[x[0]]};
    case LevelKind::Residues: {
      const IntVec red = lattice_reduce(lv.hnf, x);
      std::int64_t id = 0;
      for (std::size_t d = red.size(); d-- > 0;) id = id * lv.moduli[d] + red[d];
      return Value{id};
    }
    case LevelKind::Free: {
      const IntVec y = vec_mat(x, lv.v, x.size());
      return Value(y.begin() + static_cast<std::ptrdiff_t>(lv.k), y.end());
    }
  }
  throw InputError("bad quotient level");
}

Value QuotientFunctor::lift(std::size_t cls, const Value& y) const {
  const Level& lv = levels_[cls];
  switch (lv.kind) {
    case LevelKind::Cosets: return Value{lv.reps[y[0]]};
    case LevelKind::Residues: {
      Value v(lv.moduli.size());
      std::int64_t rest = y[0];
      for (std::size_t d = 0; d < lv.moduli.size(); ++d) {
        v[d] = rest % lv.moduli[d];
        rest /= lv.moduli[d];
      }
      return v;
    }
    case LevelKind::Free: {
      IntVec z(lv.k, 0);
      z.insert(z.end(), y.begin(), y.end());
      return vec_mat(z, lv.v_inverse, z.size());
    }
  }
  throw InputError("bad quotient level");
}

Value QuotientFunctor::restrict(const TransitiveMap& f, const Value& y) const {
  return project(f.src, base_->restrict(f, lift(f.dst, y)));
}

Value QuotientFunctor::transfer(const TransitiveMap& f, const Value& x) const {
  return project(f.dst, base_->transfer(f, lift(f.src, x)));
}

Value QuotientFunctor::norm(const TransitiveMap& f, const Value& x) const {
  return project(f.dst, base_->norm(f, lift(f.src, x)));
}

std::string QuotientFunctor::format(std::size_t cls, const Value& v) const {
  return "[" + base_->format(cls, lift(cls, v)) + "]";
}

Value QuotientFunctor::parse(std::size_t cls, const std::string& text) const {
  try {
    return project(cls, base_->parse(cls, text));
  } catch (const InputError&) {
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
      return project(cls, base_->parse(cls, text.substr(1, text.size() - 2)));
    throw;
  }
}

QuotientResult quotient_functor(const IdealFamily& ideal, const QuotientOptions& opt) {
  if (!ideal.exact()) throw InputError("ideal is only a partial saturation; refusing to form the quotient");
  const Certificate& c = ideal.certificate();
  if (!c.known()) throw InputError("ideal has no certificate; check it before forming the quotient");
  if (!c.proved() && !opt.allow_sampled)
    throw InputError("ideal is certified by sampling only; an explicit override is needed to form the quotient");
  auto q = std::make_shared<const QuotientFunctor>(ideal, opt.finite_cap);
  TambaraMorphism pi = TambaraMorphism::from_function(
      ideal.owner(), q, [&](std::size_t cls, const Value& x) { return q->project(cls, x); });
  return QuotientResult{q, std::move(pi)};
}

}  // namespace tambara
