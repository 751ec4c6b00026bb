#pragma once

// Exact linear algebra over Z and over finite abelian groups.
//
// A finite abelian group is a product Z/m_1 x ... x Z/m_r; its elements are
// coordinate tuples with 0 <= x_i < m_i. Homomorphisms act on coordinate
// lifts through an integer matrix. Nothing here uses floating point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace annring {

using Int = std::int64_t;
using Vec = std::vector<Int>;

namespace arith {

Int add(Int a, Int b);
Int mul(Int a, Int b);
Int mod(Int a, Int m);
Int gcd(Int a, Int b);
// Returns g = gcd(a, b) >= 0 and sets u, v with u*a + v*b = g.
Int ext_gcd(Int a, Int b, Int& u, Int& v);

}  // namespace arith

namespace ablin {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  Vec apply(std::span<const Int> x) const;
  Vec column(std::size_t c) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix S;     // diagonal, s_1 | s_2 | ... , all >= 0
  IntMatrix U;     // unimodular, S = U * A * V
  IntMatrix V;     // unimodular
  IntMatrix Uinv;  // U^{-1}
  IntMatrix Vinv;  // V^{-1}
  std::size_t rank = 0;

  Vec diagonal() const;
};

// Throws OverflowError when the transforms leave the 64-bit range.
SmithForm smith_normal_form(const IntMatrix& a);

// Smith form of the lattice im(A) + modulus * Z^rows, computed with every
// entry reduced mod modulus. diagonal[i] divides modulus (a value equal to
// modulus is a free Z/modulus factor); U and Uinv are inverse mod modulus and
// Z^rows / lattice is the sum of Z/diagonal[i] through y -> U y.
struct ModularSmith {
  Vec diagonal;
  IntMatrix U;
  IntMatrix Uinv;
};

ModularSmith smith_mod(const IntMatrix& a, Int modulus);

class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(Vec moduli);

  const Vec& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  Int order() const;

  Vec zero() const { return Vec(moduli_.size(), 0); }
  Vec normalize(Vec x) const;
  Vec add(std::span<const Int> a, std::span<const Int> b) const;
  Vec negate(std::span<const Int> a) const;
  Vec scale(Int k, std::span<const Int> a) const;
  bool contains(std::span<const Int> x) const;
  bool is_zero(std::span<const Int> x) const;
  Int element_order(std::span<const Int> x) const;

  // Mixed-radix enumeration of the elements, first coordinate fastest.
  Vec element(Int index) const;
  Int index_of(std::span<const Int> x) const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  Vec moduli_;
};

// Homomorphism source -> target acting on coordinate lifts. The matrix has
// target.rank() rows and source.rank() columns.
class LinearMap {
 public:
  LinearMap(FinAbGroup source, FinAbGroup target, IntMatrix matrix);

  const FinAbGroup& source() const noexcept { return source_; }
  const FinAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  Vec apply(std::span<const Int> x) const;

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  IntMatrix matrix_;
};

std::optional<Vec> solve(const LinearMap& a, std::span<const Int> b);

// Same contract as solve, computed from the Smith form of [A | diag(t)] over Z.
// Independent of the echelon path; used to cross-check it.
std::optional<Vec> solve_via_smith(const LinearMap& a, std::span<const Int> b);

Int image_order(const LinearMap& a);

// A subgroup given by generators, presented as a product of cyclic groups.
// generators[i] lives in the ambient group and has order group.moduli()[i].
struct Presentation {
  FinAbGroup group;
  std::vector<Vec> generators;
};

Presentation kernel(const LinearMap& a);

struct Cokernel {
  FinAbGroup group;
  IntMatrix projection;  // target coordinates -> cokernel coordinates

  Vec project(std::span<const Int> y) const;
};

Cokernel cokernel(const LinearMap& a);

// <big> / <small> inside an ambient group, with small contained in <big>.
class Subquotient {
 public:
  Subquotient(const FinAbGroup& ambient, std::vector<Vec> big, const std::vector<Vec>& small);

  const FinAbGroup& group() const noexcept { return group_; }
  // Ambient-group representatives of the cyclic generators of the quotient.
  const std::vector<Vec>& generators() const noexcept { return generators_; }
  Int order() const { return group_.order(); }

  // Quotient coordinates of an element of <big>; nullopt if x is not in <big>.
  std::optional<Vec> coordinates(std::span<const Int> x) const;
  // Ambient representative of the class with the given quotient coordinates.
  Vec representative(std::span<const Int> coords) const;

 private:
  FinAbGroup ambient_;
  std::optional<LinearMap> inclusion_;
  IntMatrix to_quotient_;  // rows of U kept for nontrivial factors
  FinAbGroup group_;
  std::vector<Vec> generators_;
};

}  // namespace ablin
}  // namespace annring
