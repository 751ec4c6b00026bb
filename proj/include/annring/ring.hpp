#pragma once

// Finite rings, homomorphisms and bimodules given by tables on indices
// 0..n-1. Index 0 is always the additive identity.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "annring/ablin.hpp"

namespace annring {

inline constexpr int kMaxRingOrder = 256;

struct RingTables {
  std::string name;
  int order = 0;
  std::vector<int> add;  // order*order, row-major
  std::vector<int> mul;  // order*order, row-major
  std::optional<int> unit;
};

// Table-backed ring. The constructor only checks shapes; validate_ring checks
// the axioms. Unvalidated instances exist for negative tests.
class FiniteRing {
 public:
  explicit FiniteRing(RingTables t);

  const std::string& name() const noexcept { return t_.name; }
  int order() const noexcept { return t_.order; }
  std::optional<int> unit() const noexcept { return t_.unit; }
  const std::vector<int>& add_table() const noexcept { return t_.add; }
  const std::vector<int>& mul_table() const noexcept { return t_.mul; }
  const RingTables& tables() const noexcept { return t_; }

  int add(int a, int b) const { return t_.add[a * t_.order + b]; }
  int mul(int a, int b) const { return t_.mul[a * t_.order + b]; }
  // -1 when a has no additive inverse (only possible before validation).
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int times(long k, int a) const;  // k*a for an integer k
  int additive_order(int a) const;

  // Equality of tables and unit; the name is a label only.
  bool operator==(const FiniteRing& o) const {
    return t_.order == o.t_.order && t_.add == o.t_.add && t_.mul == o.t_.mul && t_.unit == o.t_.unit;
  }

 private:
  RingTables t_;
  std::vector<int> neg_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

FiniteRing validate_ring(RingTables t);
RingPtr make_ring(RingTables t);  // validated, shared

// Abelian group on indices given by an addition table, with coordinates in
// its invariant-factor decomposition. Element 0 is the identity.
class TableGroup {
 public:
  TableGroup() = default;
  explicit TableGroup(std::vector<int> add, int order);

  int order() const noexcept { return order_; }
  int add(int a, int b) const { return add_[a * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  const std::vector<int>& add_table() const noexcept { return add_; }

  const ablin::FinAbGroup& group() const noexcept { return group_; }
  const Vec& coords(int a) const { return coords_[a]; }
  int element(std::span<const Int> c) const;

 private:
  int order_ = 0;
  std::vector<int> add_;
  std::vector<int> neg_;
  ablin::FinAbGroup group_;
  std::vector<Vec> coords_;
  std::vector<int> from_index_;  // FinAbGroup::index_of -> element
};

TableGroup additive_group(const FiniteRing& r);

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  bool operator==(const RingHom& o) const { return *source == *o.source && *target == *o.target && map == o.map; }
};

// Checks additivity, multiplicativity and, if require_unital, map(1) = 1.
RingHom validate_hom(RingPtr source, RingPtr target, std::vector<int> map, bool require_unital);
RingHom identity_hom(RingPtr r);
RingHom compose(const RingHom& g, const RingHom& f);  // g after f

// R acting on both sides of an abelian group M given by tables.
struct Bimodule {
  RingPtr ring;
  TableGroup module;
  std::vector<int> left;   // left[r * |M| + m] = r m
  std::vector<int> right;  // right[m * |R| + r] = m r

  int act_left(int r, int m) const { return left[r * module.order() + m]; }
  int act_right(int m, int r) const { return right[m * ring->order() + r]; }
};

Bimodule validate_bimodule(RingPtr ring, TableGroup module, std::vector<int> left, std::vector<int> right);
// R acting on itself by multiplication.
Bimodule regular_bimodule(RingPtr r);

// Presets.
RingPtr zmod(int n);
RingPtr product(const RingPtr& r, const RingPtr& s);  // index r * |S| + s
RingPtr zero_mult(int n);
RingPtr zero_mult_klein();
RingPtr scaled_mult(int n, int c);  // Z/n with a * b = c a b
RingPtr dual_numbers_z2();          // Z/2[x]/(x^2), index a + 2b for a + b x
RingPtr trivial_ring();

std::vector<int> hom_kernel(const RingHom& d);
std::vector<int> hom_image(const RingHom& d);

struct Quotient {
  RingPtr ring;
  std::vector<int> project;         // element of the big ring -> class
  std::vector<int> representative;  // class -> least element of the coset
};

// D / I for a two-sided ideal I (given as a sorted list of elements).
Quotient quotient_ring(const RingPtr& d, const std::vector<int>& ideal, const std::string& name);
Quotient ideal_cokernel(const RingHom& d);

// Sub-ring on a subset closed under + and *, indexed by position in elements.
RingPtr subring(const FiniteRing& r, const std::vector<int>& elements, const std::string& name);

// Brute-force isomorphism search for orders <= 16.
std::optional<std::vector<int>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

int max_additive_order(const FiniteRing& r);

// The two-sided multiplicative identity of a table, if any.
std::optional<int> find_unit(const RingTables& t);

}  // namespace annring
