#pragma once

// Dense cochain tables over a ring R of order n with values in an abelian
// group (element indices). Two- and three-argument tables are indexed
// lexicographically: c[u * n + v], c[(u * n + v) * n + w].

#include <vector>

namespace annring {

struct Cochain1 {
  int n = 0;
  std::vector<int> t;

  static Cochain1 zero(int n) { return {n, std::vector<int>(n, 0)}; }
  bool operator==(const Cochain1&) const = default;
};

struct Cochain2 {
  int n = 0;
  std::vector<int> f;  // additive part
  std::vector<int> g;  // multiplicative part

  static Cochain2 zero(int n) { return {n, std::vector<int>(n * n, 0), std::vector<int>(n * n, 0)}; }
  int at_f(int u, int v) const { return f[u * n + v]; }
  int at_g(int u, int v) const { return g[u * n + v]; }
  bool operator==(const Cochain2&) const = default;
};

struct Cochain3 {
  int n = 0;
  std::vector<int> xi;      // (x + y) + z against x + (y + z)
  std::vector<int> eta;     // x + y against y + x
  std::vector<int> alpha;   // (xy)z against x(yz)
  std::vector<int> lambda;  // x(y + z) against xy + xz
  std::vector<int> rho;     // (x + y)z against xz + yz

  static Cochain3 zero(int n) {
    const auto n3 = static_cast<std::size_t>(n) * n * n;
    return {n, std::vector<int>(n3, 0), std::vector<int>(n * n, 0), std::vector<int>(n3, 0),
            std::vector<int>(n3, 0), std::vector<int>(n3, 0)};
  }
  int idx3(int u, int v, int w) const { return (u * n + v) * n + w; }
  int xi_at(int u, int v, int w) const { return xi[idx3(u, v, w)]; }
  int eta_at(int u, int v) const { return eta[u * n + v]; }
  int alpha_at(int u, int v, int w) const { return alpha[idx3(u, v, w)]; }
  int lambda_at(int u, int v, int w) const { return lambda[idx3(u, v, w)]; }
  int rho_at(int u, int v, int w) const { return rho[idx3(u, v, w)]; }
  bool operator==(const Cochain3&) const = default;
};

}  // namespace annring
