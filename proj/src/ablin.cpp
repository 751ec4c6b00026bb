#include "annring/ablin.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "annring/error.hpp"

namespace annring {

namespace arith {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

Int mod(Int a, Int m) {
  if (m == 0) return a;
  Int r = a % m;
  return r < 0 ? r + (m < 0 ? -m : m) : r;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int ext_gcd(Int a, Int b, Int& u, Int& v) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - mul(q, s);
    old_s = s;
    s = tmp;
    tmp = old_t - mul(q, t);
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

}  // namespace arith

namespace ablin {

using arith::mod;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = arith::add(out(i, j), arith::mul(a, rhs(k, j)));
    }
  return out;
}

Vec IntMatrix::apply(std::span<const Int> x) const {
  if (x.size() != cols_) throw Error("IntMatrix: dimension mismatch in apply");
  Vec y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] = arith::add(y[i], arith::mul((*this)(i, j), x[j]));
  return y;
}

Vec IntMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
        num /= prev;
        if (num > INT64_MAX || num < INT64_MIN) throw OverflowError();
        m(i, j) = static_cast<Int>(num);
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Vec SmithForm::diagonal() const {
  Vec d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

// Row/column operations on S that keep S = U A V and the inverses in step.
struct SmithWork {
  IntMatrix S, U, V, Uinv, Vinv;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < S.cols(); ++j) std::swap(S(a, j), S(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < S.rows(); ++i) std::swap(S(i, a), S(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
    for (std::size_t j = 0; j < Vinv.cols(); ++j) std::swap(Vinv(a, j), Vinv(b, j));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, Int k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < S.cols(); ++j) S(dst, j) = arith::add(S(dst, j), arith::mul(k, S(src, j)));
    for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) = arith::add(U(dst, j), arith::mul(k, U(src, j)));
    for (std::size_t i = 0; i < Uinv.rows(); ++i)
      Uinv(i, src) = arith::add(Uinv(i, src), arith::mul(-k, Uinv(i, dst)));
  }
  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, Int k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < S.rows(); ++i) S(i, dst) = arith::add(S(i, dst), arith::mul(k, S(i, src)));
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) = arith::add(V(i, dst), arith::mul(k, V(i, src)));
    for (std::size_t j = 0; j < Vinv.cols(); ++j)
      Vinv(src, j) = arith::add(Vinv(src, j), arith::mul(-k, Vinv(dst, j)));
  }
  // Zero S(i, t) against the pivot S(t, t) with a unimodular 2x2 row operation.
  void clear_in_column(std::size_t t, std::size_t i) {
    const Int x = S(t, t), y = S(i, t);
    if (y == 0) return;
    if (y % x == 0) {
      add_row(i, t, -(y / x));
      return;
    }
    Int u, v;
    const Int g = arith::ext_gcd(x, y, u, v);
    const Int p = x / g, q = y / g;
    // [row_t; row_i] <- [[u, v], [-q, p]] [row_t; row_i]
    combine_rows(S, t, i, u, v, -q, p);
    combine_rows(U, t, i, u, v, -q, p);
    // Uinv <- Uinv * [[p, -v], [q, u]]
    for (std::size_t r = 0; r < Uinv.rows(); ++r) {
      const Int a = Uinv(r, t), b = Uinv(r, i);
      Uinv(r, t) = arith::add(arith::mul(a, p), arith::mul(b, q));
      Uinv(r, i) = arith::add(arith::mul(a, -v), arith::mul(b, u));
    }
  }
  // Zero S(t, j) against the pivot with a unimodular 2x2 column operation.
  void clear_in_row(std::size_t t, std::size_t j) {
    const Int x = S(t, t), y = S(t, j);
    if (y == 0) return;
    if (y % x == 0) {
      add_col(j, t, -(y / x));
      return;
    }
    Int u, v;
    const Int g = arith::ext_gcd(x, y, u, v);
    const Int p = x / g, q = y / g;
    // [col_t, col_j] <- [col_t, col_j] [[u, -q], [v, p]]
    combine_cols(S, t, j, u, v, -q, p);
    combine_cols(V, t, j, u, v, -q, p);
    // Vinv <- [[p, q], [-v, u]] Vinv
    for (std::size_t c = 0; c < Vinv.cols(); ++c) {
      const Int a = Vinv(t, c), b = Vinv(j, c);
      Vinv(t, c) = arith::add(arith::mul(p, a), arith::mul(q, b));
      Vinv(j, c) = arith::add(arith::mul(-v, a), arith::mul(u, b));
    }
  }
  static void combine_rows(IntMatrix& M, std::size_t r1, std::size_t r2, Int a, Int b, Int c, Int d) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      const Int x = M(r1, j), y = M(r2, j);
      M(r1, j) = arith::add(arith::mul(a, x), arith::mul(b, y));
      M(r2, j) = arith::add(arith::mul(c, x), arith::mul(d, y));
    }
  }
  // new col c1 = a*c1 + b*c2, new col c2 = c*c1 + d*c2
  static void combine_cols(IntMatrix& M, std::size_t c1, std::size_t c2, Int a, Int b, Int c, Int d) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
      const Int x = M(i, c1), y = M(i, c2);
      M(i, c1) = arith::add(arith::mul(a, x), arith::mul(b, y));
      M(i, c2) = arith::add(arith::mul(c, x), arith::mul(d, y));
    }
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < S.cols(); ++j) S(r, j) = -S(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
    for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, r) = -Uinv(i, r);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithWork w{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& S = w.S;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (!found || std::abs(S(i, j)) < best)) {
          found = true;
          best = std::abs(S(i, j));
          pr = i;
          pc = j;
        }
    if (!found) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) w.clear_in_column(t, i);
      bool row_clean = true;
      for (std::size_t j = t + 1; j < n; ++j)
        if (S(t, j) != 0) {
          w.clear_in_row(t, j);
          row_clean = false;
        }
      if (!row_clean) continue;  // column t may have refilled
      // Divisibility: fold an offending row into the pivot row and redo.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S(t, t) < 0) w.negate_row(t);
  }
  SmithForm out{std::move(w.S), std::move(w.U), std::move(w.V), std::move(w.Uinv), std::move(w.Vinv), t};
  return out;
}

namespace {

Int mulmod(Int a, Int b, Int m) { return static_cast<Int>(static_cast<__int128>(a) * b % m); }

// new r1 = a*r1 + b*r2, new r2 = c*r1 + d*r2, all mod m
void combine_rows_mod(IntMatrix& M, std::size_t r1, std::size_t r2, Int a, Int b, Int c, Int d, Int m) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    const Int x = M(r1, j), y = M(r2, j);
    M(r1, j) = mod(mulmod(mod(a, m), x, m) + mulmod(mod(b, m), y, m), m);
    M(r2, j) = mod(mulmod(mod(c, m), x, m) + mulmod(mod(d, m), y, m), m);
  }
}

void combine_cols_mod(IntMatrix& M, std::size_t c1, std::size_t c2, Int a, Int b, Int c, Int d, Int m) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const Int x = M(i, c1), y = M(i, c2);
    M(i, c1) = mod(mulmod(mod(a, m), x, m) + mulmod(mod(b, m), y, m), m);
    M(i, c2) = mod(mulmod(mod(c, m), x, m) + mulmod(mod(d, m), y, m), m);
  }
}

}  // namespace

ModularSmith smith_mod(const IntMatrix& a, Int modulus) {
  if (modulus < 1) throw Error("smith_mod: modulus must be >= 1");
  const std::size_t r = a.rows(), n = a.cols();
  IntMatrix S(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) S(i, j) = mod(a(i, j), modulus);
  IntMatrix U = IntMatrix::identity(r), Uinv = IntMatrix::identity(r);
  for (std::size_t i = 0; i < r; ++i) {
    U(i, i) = mod(1, modulus);
    Uinv(i, i) = mod(1, modulus);
  }
  // Row operation [[a, b], [c, d]] of determinant 1 on rows (r1, r2).
  auto row_op = [&](std::size_t r1, std::size_t r2, Int a_, Int b_, Int c_, Int d_) {
    combine_rows_mod(S, r1, r2, a_, b_, c_, d_, modulus);
    combine_rows_mod(U, r1, r2, a_, b_, c_, d_, modulus);
    // Uinv <- Uinv * [[d, -b], [-c, a]]
    combine_cols_mod(Uinv, r1, r2, d_, -c_, -b_, a_, modulus);
  };
  auto col_op = [&](std::size_t c1, std::size_t c2, Int a_, Int b_, Int c_, Int d_) {
    combine_cols_mod(S, c1, c2, a_, b_, c_, d_, modulus);
  };

  // Scale row t by a unit so that the pivot becomes gcd(pivot, modulus).
  auto normalize_pivot = [&](std::size_t t) {
    Int u, v;
    const Int g = arith::ext_gcd(S(t, t), modulus, u, v);
    const Int step = modulus / g;
    Int unit = mod(u, modulus);
    while (arith::gcd(unit, modulus) != 1) unit = mod(unit + step, modulus);
    Int inv, unused;
    arith::ext_gcd(unit, modulus, inv, unused);
    inv = mod(inv, modulus);
    for (std::size_t j = 0; j < n; ++j) S(t, j) = mulmod(S(t, j), unit, modulus);
    for (std::size_t j = 0; j < r; ++j) U(t, j) = mulmod(U(t, j), unit, modulus);
    for (std::size_t i = 0; i < r; ++i) Uinv(i, t) = mulmod(Uinv(i, t), inv, modulus);
  };

  Vec diag;
  for (std::size_t t = 0; t < std::min(r, n); ++t) {
    bool found = false;
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        const Int g = arith::gcd(S(i, j), modulus);
        if (!found || g < best) {
          found = true;
          best = g;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    if (pr != t) row_op(t, pr, 0, 1, -1, 0);
    if (pc != t) col_op(t, pc, 0, -1, 1, 0);

    for (;;) {
      normalize_pivot(t);
      const Int s = S(t, t);
      bool restart = false;
      for (std::size_t i = t + 1; i < r && !restart; ++i) {
        if (S(i, t) == 0) continue;
        if (S(i, t) % s == 0) {
          row_op(i, t, 1, -(S(i, t) / s), 0, 1);
        } else {
          Int u, v;
          const Int g = arith::ext_gcd(s, S(i, t), u, v);
          row_op(t, i, u, v, -(S(i, t) / g), s / g);
          restart = true;
        }
      }
      for (std::size_t j = t + 1; j < n && !restart; ++j) {
        if (S(t, j) == 0) continue;
        if (S(t, j) % s == 0) {
          col_op(j, t, 1, -(S(t, j) / s), 0, 1);
        } else {
          Int u, v;
          const Int g = arith::ext_gcd(s, S(t, j), u, v);
          col_op(t, j, u, v, -(S(t, j) / g), s / g);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t i = t + 1; i < r && !restart; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % s != 0) {
            row_op(t, i, 1, 1, 0, 1);
            restart = true;
            break;
          }
      if (!restart) break;
    }
    diag.push_back(S(t, t));
  }
  diag.resize(r, 0);
  for (Int& s : diag)
    if (s == 0) s = modulus;
  return {std::move(diag), std::move(U), std::move(Uinv)};
}

// ---------------------------------------------------------------------------

FinAbGroup::FinAbGroup(Vec moduli) : moduli_(std::move(moduli)) {
  for (Int m : moduli_)
    if (m < 1) throw Error("FinAbGroup: moduli must be >= 1");
}

Int FinAbGroup::order() const {
  Int o = 1;
  for (Int m : moduli_) o = arith::mul(o, m);
  return o;
}

Vec FinAbGroup::normalize(Vec x) const {
  if (x.size() != moduli_.size()) throw Error("FinAbGroup: element has wrong rank");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], moduli_[i]);
  return x;
}

Vec FinAbGroup::add(std::span<const Int> a, std::span<const Int> b) const {
  Vec r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(arith::add(a[i], b[i]), moduli_[i]);
  return r;
}

Vec FinAbGroup::negate(std::span<const Int> a) const {
  Vec r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(-a[i], moduli_[i]);
  return r;
}

Vec FinAbGroup::scale(Int k, std::span<const Int> a) const {
  Vec r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(arith::mul(mod(k, moduli_[i]), a[i]), moduli_[i]);
  return r;
}

bool FinAbGroup::contains(std::span<const Int> x) const {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  return true;
}

bool FinAbGroup::is_zero(std::span<const Int> x) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mod(x[i], moduli_[i]) != 0) return false;
  return true;
}

Int FinAbGroup::element_order(std::span<const Int> x) const {
  Int o = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    Int c = moduli_[i] / arith::gcd(mod(x[i], moduli_[i]), moduli_[i]);
    o = arith::mul(o / arith::gcd(o, c), c);
  }
  return o;
}

Vec FinAbGroup::element(Int index) const {
  Vec x(moduli_.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return x;
}

Int FinAbGroup::index_of(std::span<const Int> x) const {
  Int idx = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) idx = idx * moduli_[i] + mod(x[i], moduli_[i]);
  return idx;
}

// ---------------------------------------------------------------------------

LinearMap::LinearMap(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw Error("LinearMap: matrix shape does not match groups");
  for (std::size_t j = 0; j < source_.rank(); ++j) {
    Vec col = matrix_.column(j);
    for (Int& c : col) c = arith::mul(c, source_.moduli()[j]);
    if (!target_.is_zero(col)) throw Error("LinearMap: matrix does not respect the source moduli");
  }
}

Vec LinearMap::apply(std::span<const Int> x) const { return target_.normalize(matrix_.apply(x)); }

namespace {

struct EchelonColumn {
  Vec y;  // image, reduced in the target
  Vec x;  // source combination, reduced in the source
};

// Column echelon form of a homomorphism of finite abelian groups. Column
// operations are unimodular; row i is reduced modulo t_i throughout, so
// entries never leave [0, t_i).
class Echelon {
 public:
  explicit Echelon(const LinearMap& a) : src_(a.source()), tgt_(a.target()) {
    const std::size_t r = tgt_.rank(), n = src_.rank();
    std::vector<EchelonColumn> pool;
    for (std::size_t j = 0; j < n; ++j) {
      Vec x(n, 0);
      x[j] = src_.moduli()[j] == 1 ? 0 : 1;
      pool.push_back({a.apply(x), x});
    }
    pivot_.assign(r, std::nullopt);
    pivot_value_.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      const Int t = tgt_.moduli()[i];
      if (t == 1) continue;
      // Euclid over the pool in row i until at most one column is nonzero there.
      for (;;) {
        std::size_t best = pool.size();
        for (std::size_t c = 0; c < pool.size(); ++c)
          if (pool[c].y[i] != 0 && (best == pool.size() || pool[c].y[i] < pool[best].y[i])) best = c;
        if (best == pool.size()) break;
        bool others = false;
        for (std::size_t c = 0; c < pool.size(); ++c) {
          if (c == best || pool[c].y[i] == 0) continue;
          subtract(pool[c], pool[best], pool[c].y[i] / pool[best].y[i]);
          others = true;
        }
        if (!others) {
          EchelonColumn col = std::move(pool[best]);
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
          const Int e = col.y[i];
          Int u, v;
          const Int g = arith::ext_gcd(e, t, u, v);
          EchelonColumn lead{tgt_.scale(u, col.y), src_.scale(u, col.x)};
          EchelonColumn rel{tgt_.scale(t / g, col.y), src_.scale(t / g, col.x)};
          pivot_[i] = std::move(lead);
          pivot_value_[i] = g;
          pool.push_back(std::move(rel));
          break;
        }
      }
    }
    for (auto& c : pool) {
      if (!tgt_.is_zero(c.y)) throw Error("Echelon: residual column is not zero (bug)");
      if (!src_.is_zero(c.x)) kernel_.push_back(std::move(c.x));
    }
  }

  std::optional<Vec> solve(std::span<const Int> b) const {
    Vec res = tgt_.normalize(Vec(b.begin(), b.end()));
    Vec x = src_.zero();
    for (std::size_t i = 0; i < tgt_.rank(); ++i) {
      if (res[i] == 0) continue;
      if (!pivot_[i] || res[i] % pivot_value_[i] != 0) return std::nullopt;
      const Int q = res[i] / pivot_value_[i];
      res = tgt_.add(res, tgt_.scale(-q, pivot_[i]->y));
      x = src_.add(x, src_.scale(q, pivot_[i]->x));
    }
    return x;
  }

  Int image_order() const {
    Int o = 1;
    for (std::size_t i = 0; i < tgt_.rank(); ++i)
      if (pivot_[i]) o = arith::mul(o, tgt_.moduli()[i] / pivot_value_[i]);
    return o;
  }

  const std::vector<Vec>& kernel_generators() const { return kernel_; }

 private:
  void subtract(EchelonColumn& dst, const EchelonColumn& src, Int q) const {
    dst.y = tgt_.add(dst.y, tgt_.scale(-q, src.y));
    dst.x = src_.add(dst.x, src_.scale(-q, src.x));
  }

  FinAbGroup src_, tgt_;
  std::vector<std::optional<EchelonColumn>> pivot_;
  Vec pivot_value_;
  std::vector<Vec> kernel_;
};

}  // namespace

std::optional<Vec> solve(const LinearMap& a, std::span<const Int> b) {
  if (b.size() != a.target().rank()) throw Error("solve: right-hand side has wrong rank");
  return Echelon(a).solve(b);
}

std::optional<Vec> solve_via_smith(const LinearMap& a, std::span<const Int> b) {
  const std::size_t r = a.target().rank(), n = a.source().rank();
  IntMatrix aug(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a.matrix()(i, j);
    aug(i, n + i) = a.target().moduli()[i];
  }
  SmithForm sf = smith_normal_form(aug);
  Vec rhs = sf.U.apply(Vec(b.begin(), b.end()));
  Vec z(n + r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    Int s = i < sf.rank ? sf.S(i, i) : 0;
    if (s == 0) {
      if (rhs[i] != 0) return std::nullopt;
    } else {
      if (rhs[i] % s != 0) return std::nullopt;
      z[i] = rhs[i] / s;
    }
  }
  Vec y = sf.V.apply(z);
  Vec x(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
  return a.source().normalize(std::move(x));
}

Int image_order(const LinearMap& a) { return Echelon(a).image_order(); }

Presentation kernel(const LinearMap& a) {
  Echelon e(a);
  Subquotient sq(a.source(), e.kernel_generators(), {});
  return {sq.group(), sq.generators()};
}

Vec Cokernel::project(std::span<const Int> y) const { return group.normalize(projection.apply(y)); }

Cokernel cokernel(const LinearMap& a) {
  const std::size_t r = a.target().rank(), n = a.source().rank();
  IntMatrix rel(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel(i, j) = a.matrix()(i, j);
    rel(i, n + i) = a.target().moduli()[i];
  }
  Int lcm = 1;
  for (Int t : a.target().moduli()) lcm = arith::mul(lcm / arith::gcd(lcm, t), t);
  ModularSmith sf = smith_mod(rel, lcm);
  Vec moduli;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r; ++i)
    if (sf.diagonal[i] != 1) {
      moduli.push_back(sf.diagonal[i]);
      keep.push_back(i);
    }
  IntMatrix proj(keep.size(), r);
  for (std::size_t k = 0; k < keep.size(); ++k)
    for (std::size_t j = 0; j < r; ++j) proj(k, j) = mod(sf.U(keep[k], j), moduli[k]);
  return {FinAbGroup(std::move(moduli)), std::move(proj)};
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const FinAbGroup& ambient, std::vector<Vec> big, const std::vector<Vec>& small)
    : ambient_(ambient) {
  for (auto& v : big) v = ambient_.normalize(v);
  std::erase_if(big, [&](const Vec& v) { return ambient_.is_zero(v); });
  const std::size_t k = big.size();
  Vec orders;
  IntMatrix incl(ambient_.rank(), k);
  for (std::size_t j = 0; j < k; ++j) {
    orders.push_back(ambient_.element_order(big[j]));
    for (std::size_t i = 0; i < ambient_.rank(); ++i) incl(i, j) = big[j][i];
  }
  inclusion_.emplace(FinAbGroup(orders), ambient_, incl);
  Echelon ech(*inclusion_);

  std::vector<Vec> relations;
  for (std::size_t j = 0; j < k; ++j) {
    Vec e(k, 0);
    e[j] = orders[j];
    relations.push_back(e);
  }
  for (const auto& r : ech.kernel_generators()) relations.push_back(r);
  for (const auto& s : small) {
    auto c = ech.solve(s);
    if (!c) throw Error("Subquotient: a small generator is not in the big subgroup");
    relations.push_back(*c);
  }
  IntMatrix rel(k, relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (std::size_t i = 0; i < k; ++i) rel(i, c) = relations[c][i];

  Int lcm = 1;
  for (Int o : orders) lcm = arith::mul(lcm / arith::gcd(lcm, o), o);
  ModularSmith sf = smith_mod(rel, lcm);
  Vec moduli;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (sf.diagonal[i] != 1) {
      moduli.push_back(sf.diagonal[i]);
      keep.push_back(i);
    }
  to_quotient_ = IntMatrix(keep.size(), k);
  for (std::size_t q = 0; q < keep.size(); ++q)
    for (std::size_t j = 0; j < k; ++j) to_quotient_(q, j) = mod(sf.U(keep[q], j), moduli[q]);
  group_ = FinAbGroup(moduli);
  for (std::size_t q = 0; q < keep.size(); ++q) {
    Vec c = sf.Uinv.column(keep[q]);
    generators_.push_back(inclusion_->apply(c));
  }
}

std::optional<Vec> Subquotient::coordinates(std::span<const Int> x) const {
  auto c = Echelon(*inclusion_).solve(x);
  if (!c) return std::nullopt;
  return group_.normalize(to_quotient_.apply(*c));
}

Vec Subquotient::representative(std::span<const Int> coords) const {
  Vec out = ambient_.zero();
  for (std::size_t q = 0; q < generators_.size(); ++q) out = ambient_.add(out, ambient_.scale(coords[q], generators_[q]));
  return out;
}

}  // namespace ablin
}  // namespace annring
