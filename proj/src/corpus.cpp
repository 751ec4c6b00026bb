#include "annring/corpus.hpp"

#include "annring/error.hpp"

namespace annring {

Bimodule bimodule_via(const RingPtr& r, const RingPtr& s, const std::vector<int>& h) {
  RingHom hom = validate_hom(r, s, h, true);
  const int n = r->order(), m = s->order();
  std::vector<int> left(static_cast<std::size_t>(n) * m), right(left.size());
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a) {
      left[x * m + a] = s->mul(hom(x), a);
      right[a * n + x] = s->mul(a, hom(x));
    }
  return validate_bimodule(r, additive_group(*s), std::move(left), std::move(right));
}

std::vector<ESystem> corpus() {
  const RingPtr z2 = zmod(2), z3 = zmod(3), z4 = zmod(4);
  const RingPtr z2z2 = product(z2, z2);
  std::vector<ESystem> out;
  // Index r * 2 + s for (r, s) in Z/2 x Z/2.
  out.push_back(example3(z4, {0, 2}, "ex3-2z4"));
  out.push_back(example3(z2, {0, 1}, "ex3-z2"));
  out.push_back(example3(z3, {0, 1, 2}, "ex3-z3"));
  out.push_back(example3(z4, {0, 1, 2, 3}, "ex3-z4"));
  out.push_back(example3(z4, {0}, "ex3-0z4"));
  out.push_back(example3(z2z2, {0, 2}, "ex3-z2x0"));
  out.push_back(example3(z2, {0}, "ex3-0z2"));
  out.push_back(example3(z3, {0}, "ex3-0z3"));
  out.push_back(example4(regular_bimodule(z2), "ex4-z2"));
  out.push_back(example4(bimodule_via(z4, z2, {0, 1, 0, 1}), "ex4-z2-over-z4"));
  out.push_back(example4(regular_bimodule(z3), "ex4-z3"));
  out.push_back(example4(regular_bimodule(z4), "ex4-z4"));
  out.push_back(example4(regular_bimodule(z2z2), "ex4-klein"));
  out.push_back(example4(bimodule_via(z2z2, z2, {0, 0, 1, 1}), "ex4-z2-over-z2xz2"));
  out.push_back(twob_esystem());
  out.push_back(example5(zero_mult_klein(), "ex5-klein"));
  out.push_back(example5(zero_mult(2), "ex5-zm2"));
  return out;
}

ESystem corpus_entry(const std::string& name) {
  for (ESystem& es : corpus())
    if (es.name == name) return es;
  throw Error("unknown corpus entry: " + name);
}

}  // namespace annring
