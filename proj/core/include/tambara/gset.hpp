#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tambara/group.hpp"

namespace tambara {

inline constexpr std::size_t kDefaultPointCap = 2'000'000;

class GSet {
 public:
  // action is row-major |G| x size: action[g * size + x] = g.x
  GSet(std::shared_ptr<const FiniteGroup> group, int size, std::vector<int> action, std::string label = {},
       bool validate = true);

  static GSet from_rows(std::shared_ptr<const FiniteGroup> group, const std::vector<std::vector<int>>& rows,
                        std::string label = {});

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  int size() const { return size_; }
  int act(int g, int x) const { return action_[static_cast<std::size_t>(g) * size_ + x]; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  std::vector<std::vector<int>> action_rows() const;

  // Identity acts trivially and g.(h.x) = (gh).x.
  bool is_valid() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  int size_;
  std::vector<int> action_;
  std::string label_;
};

using GSetPtr = std::shared_ptr<const GSet>;

class GMap {
 public:
  GMap(GSetPtr src, GSetPtr dst, std::vector<int> images, bool validate = true);

  const GSet& src() const { return *src_; }
  const GSet& dst() const { return *dst_; }
  const GSetPtr& src_ptr() const { return src_; }
  const GSetPtr& dst_ptr() const { return dst_; }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_equivariant() const;
  bool is_surjective() const;
  bool is_injective() const;

 private:
  GSetPtr src_;
  GSetPtr dst_;
  std::vector<int> images_;
};

GMap identity_map(const GSetPtr& x);
GMap compose(const GMap& second, const GMap& first);  // second o first

struct CosetSpace {
  GSetPtr set;                // point 0 = eH
  std::vector<int> coset_of;  // group element -> point
  std::vector<int> rep;       // point -> smallest element of the coset
};

CosetSpace coset_space(const std::shared_ptr<const FiniteGroup>& group, SubgroupMask h);

struct Orbit {
  std::vector<int> points;        // sorted
  int base = 0;                   // stabilizer of base is exactly the class representative
  std::size_t cls = 0;            // subgroup class of the stabilizers
  std::vector<int> coset_to_point;  // iso G/rep -> orbit: coset gH |-> g.base
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;           // ordered by smallest point
  std::vector<int> orbit_of;           // point -> orbit
  std::vector<int> transversal;        // point -> g with g.base = point
  std::vector<std::size_t> signature;  // per class: number of orbits
};

OrbitDecomposition orbit_decompose(const SubgroupCatalog& catalog, const GSet& x);

SubgroupMask stabilizer(const GSet& x, int point);

// All equivariant maps X -> Y in lexicographic order of base-point images.
std::vector<GMap> enumerate_gmaps(const SubgroupCatalog& catalog, const GSetPtr& x, const GSetPtr& y,
                                  std::size_t cap = kDefaultPointCap);

struct Coproduct {
  GSetPtr set;
  GMap inl;
  GMap inr;
};
struct Product {
  GSetPtr set;
  GMap pr1;
  GMap pr2;
};
// Points (x, y) with f(x) = g(y), lexicographic.
struct Pullback {
  GSetPtr set;
  GMap pr1;  // to src(f)
  GMap pr2;  // to src(g)
};

Coproduct coproduct(const GSetPtr& x, const GSetPtr& y);
Product product(const GSetPtr& x, const GSetPtr& y);
Pullback pullback(const GMap& f, const GMap& g, std::size_t cap = kDefaultPointCap);
GSetPtr empty_gset(const std::shared_ptr<const FiniteGroup>& group);

// [f, g]: X u X' -> Y
GMap copair(const GMap& f, const GMap& g);
// f u g: X u X' -> Y u Y'
GMap coproduct_map(const GMap& f, const GMap& g);

struct DependentProduct {
  GSetPtr set;
  GMap pi;                                   // (y, sigma) |-> y
  std::vector<std::vector<int>> fiber_f;     // y -> sorted preimages under f
  std::vector<std::vector<int>> fiber_p;     // x -> sorted preimages under p
  std::vector<std::size_t> offset;           // y -> first point index

  // Section of point q, aligned with fiber_f[pi(q)].
  std::vector<int> section(int q) const;
};

DependentProduct dependent_product(const GMap& f, const GMap& p, std::size_t cap = kDefaultPointCap);

// X <-p- A, f: X -> Y, Z -lambda-> A, Z -rho-> Pi, Pi -pi-> Y with Z = X x_Y Pi.
struct ExponentialDiagram {
  GMap p;
  GMap f;
  GMap lambda;
  GMap rho;
  GMap pi;
};

ExponentialDiagram exponential_diagram(const GMap& f, const GMap& p, std::size_t cap = kDefaultPointCap);

// V = {(y, C) : C subset of f^{-1}(y)}, U = {(x, C) : x in C}, U' = {(x, C) : x not in C}.
struct FoldingExponential {
  GSetPtr u;
  GSetPtr u_prime;
  GSetPtr v;
  GMap r;        // U -> X
  GMap r_prime;  // U' -> X
  GMap t;        // U -> V
  GMap t_prime;  // U' -> V
  GMap s;        // V -> Y
};

FoldingExponential folding_exponential(const GMap& f, std::size_t cap = kDefaultPointCap);

}  // namespace tambara
