#include "tambara/builtin.hpp"

#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names{"c2", "c3", "c4", "s3", "c2xc2"};
  return names;
}

GroupPtr builtin_group(const std::string& name) {
  std::vector<std::vector<int>> gens;
  int degree = 0;
  if (name == "c2") {
    degree = 2;
    gens = {{1, 0}};
  } else if (name == "c3") {
    degree = 3;
    gens = {{1, 2, 0}};
  } else if (name == "c4") {
    degree = 4;
    gens = {{1, 2, 3, 0}};
  } else if (name == "s3") {
    degree = 3;
    gens = {{1, 0, 2}, {1, 2, 0}};
  } else if (name == "c2xc2") {
    degree = 4;
    gens = {{1, 0, 2, 3}, {0, 1, 3, 2}};
  } else {
    throw InputError("unknown group '" + name + "' (built-ins: c2, c3, c4, s3, c2xc2)");
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(name, degree, gens));
}

namespace {

int positive(const std::string& w, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(w, &used);
    if (used == w.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw InputError(what + " must be a positive integer, got '" + w + "'");
}

}  // namespace

FunctorPtr make_functor(const ContextPtr& ctx, const std::string& designator, const GRingLookup& grings,
                        std::size_t point_cap) {
  std::istringstream is(designator);
  std::vector<std::string> w;
  for (std::string x; is >> x;) w.push_back(x);
  if (w.empty()) throw InputError("empty functor designator");
  const auto& group = ctx->group_ptr();
  if (w[0] == "omega" && w.size() == 1) return omega_functor(ctx, point_cap);
  if (w[0] == "pz" && w.size() == 1) return integer_fixed_point_functor(ctx);
  if (w[0] == "zmod" && w.size() == 3 && w[2] == "trivial")
    return fixed_point_functor(ctx, zmod_trivial(group, positive(w[1], "modulus")));
  if (w[0] == "prodfield" && w.size() == 4 && (w[3] == "perm" || w[3] == "trivial")) {
    const int q = positive(w[1], "field size");
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) throw InputError("prodfield needs a prime field size, got " + w[1]);
    if (q < 2) throw InputError("prodfield needs a prime field size, got " + w[1]);
    return fixed_point_functor(ctx, product_field(group, q, positive(w[2], "factor count"), w[3] == "perm"));
  }
  if (w[0] == "gring" && w.size() == 2) {
    if (!grings) throw InputError("no G-ring files loaded for '" + designator + "'");
    GRingPtr r = grings(w[1]);
    if (r->group().order() != ctx->group().order() || r->group().table() != ctx->group().table())
      throw InputError("gring " + w[1] + " is over a different group");
    return fixed_point_functor(ctx, r);
  }
  throw InputError("unknown functor '" + designator +
                   "' (omega, pz, zmod <n> trivial, prodfield <q> <n> perm|trivial, gring <name>)");
}

}  // namespace tambara
