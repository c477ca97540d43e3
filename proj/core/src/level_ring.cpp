#include "tambara/level_ring.hpp"

#include <cctype>
#include <sstream>

#include "tambara/checked.hpp"
#include "tambara/error.hpp"

namespace tambara {

LevelRing LevelRing::finite(const std::vector<std::vector<int>>& add, const std::vector<std::vector<int>>& mul,
                            std::vector<std::string> labels) {
  LevelRing r;
  r.kind_ = Kind::FiniteTable;
  const std::size_t n = add.size();
  if (n == 0) throw InputError("finite ring needs at least one element");
  if (mul.size() != n) throw InputError("addition and multiplication tables differ in size");
  r.size_ = n;
  for (const auto* table : {&add, &mul})
    for (const auto& row : *table) {
      if (row.size() != n) throw InputError("ring table is not square");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("ring table entry out of range");
    }
  r.add_.reserve(n * n);
  r.mul_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    r.add_.insert(r.add_.end(), add[i].begin(), add[i].end());
    r.mul_.insert(r.mul_.end(), mul[i].begin(), mul[i].end());
  }
  auto find_identity = [&](const std::vector<int>& t) {
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = t[e * n + a] == static_cast<int>(a);
      if (ok) return static_cast<int>(e);
    }
    return -1;
  };
  r.zero_ = find_identity(r.add_);
  r.one_ = find_identity(r.mul_);
  if (r.zero_ < 0) throw InputError("addition table has no identity");
  if (r.one_ < 0) throw InputError("multiplication table has no identity");
  r.neg_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.add_[a * n + b] == r.zero_) {
        r.neg_[a] = static_cast<int>(b);
        break;
      }
  for (int v : r.neg_)
    if (v < 0) throw InputError("addition table lacks additive inverses");
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw InputError("ring label count mismatch");
  r.labels_ = std::move(labels);
  if (n <= 128) {
    RingAxiomReport rep = check_ring_axioms(r);
    if (!rep.ok) throw InputError("not a commutative ring: " + rep.failure);
  }
  return r;
}

LevelRing LevelRing::lattice(std::size_t rank, std::vector<std::vector<IntVec>> mul_constants, IntVec one,
                             std::vector<std::string> basis_labels) {
  LevelRing r;
  r.kind_ = Kind::IntegerLattice;
  r.rank_ = rank;
  if (mul_constants.size() != rank || one.size() != rank) throw InputError("lattice ring shape mismatch");
  for (const auto& row : mul_constants) {
    if (row.size() != rank) throw InputError("lattice ring shape mismatch");
    for (const auto& v : row)
      if (v.size() != rank) throw InputError("lattice ring shape mismatch");
  }
  r.constants_ = std::move(mul_constants);
  r.one_vec_ = std::move(one);
  if (basis_labels.empty())
    for (std::size_t i = 0; i < rank; ++i) basis_labels.push_back("b" + std::to_string(i));
  r.labels_ = std::move(basis_labels);
  return r;
}

LevelRing LevelRing::zero_ring() { return finite({{0}}, {{0}}, {"0"}); }

LevelRing LevelRing::integers() { return lattice(1, {{IntVec{1}}}, IntVec{1}, {"1"}); }

bool LevelRing::is_zero_ring() const { return is_finite() ? size_ == 1 : rank_ == 0; }

Value LevelRing::zero() const { return is_finite() ? Value{zero_} : Value(rank_, 0); }

Value LevelRing::one() const { return is_finite() ? Value{one_} : one_vec_; }

Value LevelRing::add(const Value& a, const Value& b) const {
  if (is_finite()) return Value{add_index(static_cast<int>(a[0]), static_cast<int>(b[0]))};
  return vec_add(a, b);
}

Value LevelRing::sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

Value LevelRing::neg(const Value& a) const {
  if (is_finite()) return Value{neg_[a[0]]};
  return vec_scale(-1, a);
}

Value LevelRing::mul(const Value& a, const Value& b) const {
  if (is_finite()) return Value{mul_index(static_cast<int>(a[0]), static_cast<int>(b[0]))};
  std::vector<__int128> acc(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      const __int128 ab = static_cast<__int128>(a[i]) * b[j];
      const IntVec& c = constants_[i][j];
      for (std::size_t k = 0; k < rank_; ++k)
        if (c[k] != 0) acc[k] += ab * c[k];
    }
  }
  Value out(rank_);
  for (std::size_t k = 0; k < rank_; ++k) out[k] = narrow_checked(acc[k]);
  return out;
}

Value LevelRing::scale(std::int64_t k, const Value& a) const {
  if (!is_finite()) return vec_scale(k, a);
  Value base = k < 0 ? neg(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  e %= size_ == 0 ? 1 : size_;  // additive order divides the ring size
  Value acc = zero();
  while (e != 0) {
    if (e & 1u) acc = add(acc, base);
    base = add(base, base);
    e >>= 1;
  }
  return acc;
}

Value LevelRing::power(const Value& a, std::uint64_t e) const {
  Value acc = one();
  Value base = a;
  while (e != 0) {
    if (e & 1u) acc = mul(acc, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return acc;
}

bool LevelRing::is_zero(const Value& a) const { return is_finite() ? a[0] == zero_ : vec_is_zero(a); }

bool LevelRing::is_valid(const Value& a) const {
  if (is_finite()) return a.size() == 1 && a[0] >= 0 && static_cast<std::size_t>(a[0]) < size_;
  return a.size() == rank_;
}

std::vector<Value> LevelRing::elements() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

std::vector<std::vector<int>> LevelRing::add_table() const {
  std::vector<std::vector<int>> t(size_, std::vector<int>(size_));
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) t[a][b] = add_[a * size_ + b];
  return t;
}

std::vector<std::vector<int>> LevelRing::mul_table() const {
  std::vector<std::vector<int>> t(size_, std::vector<int>(size_));
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) t[a][b] = mul_[a * size_ + b];
  return t;
}

Value LevelRing::basis(std::size_t i) const {
  Value v(rank_, 0);
  v[i] = 1;
  return v;
}

std::string LevelRing::format(const Value& a) const {
  if (is_finite()) return labels_[a[0]];
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a[i];
  os << ']';
  return os.str();
}

Value LevelRing::parse(const std::string& text) const {
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (is_finite()) {
    for (std::size_t i = 0; i < size_; ++i)
      if (labels_[i] == t) return element(i);
    throw InputError("unknown ring element '" + t + "'");
  }
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::istringstream is(t);
  Value v;
  std::int64_t x;
  while (is >> x) v.push_back(x);
  if (!is.eof() || v.size() != rank_) throw InputError("malformed lattice element '" + text + "'");
  return v;
}

RingAxiomReport check_ring_axioms(const LevelRing& r) {
  RingAxiomReport rep;
  auto fail = [&](std::string why) {
    if (rep.ok) rep.failure = std::move(why);
    rep.ok = false;
  };
  if (r.is_finite()) {
    const int n = static_cast<int>(r.size());
    for (int a = 0; a < n && rep.ok; ++a)
      for (int b = 0; b < n && rep.ok; ++b) {
        ++rep.checks;
        if (r.add_index(a, b) != r.add_index(b, a)) fail("addition not commutative");
        if (r.mul_index(a, b) != r.mul_index(b, a)) fail("multiplication not commutative");
        for (int c = 0; c < n && rep.ok; ++c) {
          if (r.add_index(r.add_index(a, b), c) != r.add_index(a, r.add_index(b, c))) fail("addition not associative");
          if (r.mul_index(r.mul_index(a, b), c) != r.mul_index(a, r.mul_index(b, c)))
            fail("multiplication not associative");
          if (r.mul_index(a, r.add_index(b, c)) != r.add_index(r.mul_index(a, b), r.mul_index(a, c)))
            fail("multiplication does not distribute");
        }
      }
    if (n > 1 && r.zero_index() == r.one_index()) fail("0 = 1 in a nonzero ring");
    return rep;
  }
  const std::size_t k = r.rank();
  for (std::size_t i = 0; i < k && rep.ok; ++i) {
    if (r.mul(r.one(), r.basis(i)) != r.basis(i)) fail("1 is not a multiplicative identity");
    for (std::size_t j = 0; j < k && rep.ok; ++j) {
      ++rep.checks;
      if (r.mul(r.basis(i), r.basis(j)) != r.mul(r.basis(j), r.basis(i))) fail("multiplication not commutative");
      for (std::size_t l = 0; l < k && rep.ok; ++l)
        if (r.mul(r.mul(r.basis(i), r.basis(j)), r.basis(l)) != r.mul(r.basis(i), r.mul(r.basis(j), r.basis(l))))
          fail("multiplication not associative");
    }
  }
  if (k > 0 && vec_is_zero(r.one())) fail("0 = 1 in a nonzero ring");
  return rep;
}

LevelRing product_ring(const LevelRing& a, const LevelRing& b) {
  if (a.is_finite() && b.is_finite()) {
    const std::size_t na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int ia = static_cast<int>(i / nb), ib = static_cast<int>(i % nb);
      labels[i] = "(" + a.labels()[ia] + "," + b.labels()[ib] + ")";
      for (std::size_t j = 0; j < n; ++j) {
        const int ja = static_cast<int>(j / nb), jb = static_cast<int>(j % nb);
        add[i][j] = static_cast<int>(a.add_index(ia, ja) * nb + b.add_index(ib, jb));
        mul[i][j] = static_cast<int>(a.mul_index(ia, ja) * nb + b.mul_index(ib, jb));
      }
    }
    return LevelRing::finite(add, mul, labels);
  }
  if (!a.is_finite() && !b.is_finite()) {
    const std::size_t ra = a.rank(), rb = b.rank(), n = ra + rb;
    std::vector<std::vector<IntVec>> c(n, std::vector<IntVec>(n, IntVec(n, 0)));
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < ra; ++j)
        for (std::size_t k = 0; k < ra; ++k) c[i][j][k] = a.structure_constants()[i][j][k];
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rb; ++j)
        for (std::size_t k = 0; k < rb; ++k) c[ra + i][ra + j][ra + k] = b.structure_constants()[i][j][k];
    IntVec one = a.one();
    const Value ob = b.one();
    one.insert(one.end(), ob.begin(), ob.end());
    std::vector<std::string> labels = a.basis_labels();
    for (const auto& l : b.basis_labels()) labels.push_back(l + "'");
    return LevelRing::lattice(n, std::move(c), std::move(one), std::move(labels));
  }
  throw UnsupportedError("product of a finite-table level with a lattice level");
}

std::pair<Value, Value> split_product_value(const LevelRing& a, const LevelRing& b, const Value& v) {
  if (a.is_finite()) {
    const auto nb = static_cast<std::int64_t>(b.size());
    return {Value{v[0] / nb}, Value{v[0] % nb}};
  }
  const auto ra = static_cast<std::ptrdiff_t>(a.rank());
  return {Value(v.begin(), v.begin() + ra), Value(v.begin() + ra, v.end())};
}

Value join_product_value(const LevelRing& a, const LevelRing& b, const Value& x, const Value& y) {
  if (a.is_finite()) return Value{x[0] * static_cast<std::int64_t>(b.size()) + y[0]};
  Value out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

LevelRing finite_subring(const LevelRing& r, const std::vector<int>& members) {
  std::vector<int> pos(r.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  const std::size_t n = members.size();
  std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = r.labels()[members[i]];
    for (std::size_t j = 0; j < n; ++j) {
      add[i][j] = pos[r.add_index(members[i], members[j])];
      mul[i][j] = pos[r.mul_index(members[i], members[j])];
      if (add[i][j] < 0 || mul[i][j] < 0) throw InputError("subset is not closed under the ring operations");
    }
  }
  return LevelRing::finite(add, mul, labels);
}

}  // namespace tambara
