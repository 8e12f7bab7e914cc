#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "paraclass/projectors.hpp"

namespace paraclass {

// Parameter set of one of the three built-in families.
template <class K>
struct ExampleParams {
  std::string name;  // "5.1", "5.2", "5.3"
  std::map<std::string, K> values;
};

namespace detail {

inline const std::map<std::string, std::vector<std::string>>&
example_letters() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"5.1", {"a", "b", "c", "d"}},
      {"5.2", {"a", "b", "c", "d", "e", "f"}},
      {"5.3", {"a", "b"}},
  };
  return m;
}

template <class K>
void set_row(Matrix<K>& m, std::size_t r, std::initializer_list<K> vals) {
  std::size_t c = 0;
  for (const auto& v : vals) m(r, c++) = v;
}

}  // namespace detail

// Builds one of the three built-in five-dimensional families from its
// operator matrices, assembles the tensor, and sanity-checks the assembled
// coefficients against the closed form of the family.
template <class K>
std::tuple<StructurePtr<K>, OperatorFamily<K>, FTensor<K>> example(
    const ExampleParams<K>& params) {
  auto it = detail::example_letters().find(params.name);
  if (it == detail::example_letters().end())
    throw ValidationError("unknown example name: " + params.name);
  const auto& letters = it->second;
  if (params.values.size() != letters.size())
    throw ValidationError("example " + params.name + " takes exactly " +
                          std::to_string(letters.size()) + " parameters");
  for (const auto& l : letters)
    if (!params.values.count(l))
      throw ValidationError("example " + params.name + " is missing parameter " + l);

  auto sp = make_standard<K>(2);
  const std::size_t d = 5;
  OperatorFamily<K> ops;
  ops.s = sp;
  ops.a.assign(4, Matrix<K>(d, d));
  ops.a_xi = Matrix<K>(d, d);
  auto v = [&](const char* l) { return params.values.at(l); };
  const K z(0);

  if (params.name == "5.1") {
    K a = v("a"), b = v("b"), c = v("c"), e = v("d");
    detail::set_row<K>(ops.a[0], 1, {a, b, c, e, z});
    detail::set_row<K>(ops.a[0], 3, {-c, -e, -a, -b, z});
    detail::set_row<K>(ops.a[1], 0, {-a, -b, -c, -e, z});
    detail::set_row<K>(ops.a[1], 2, {c, e, a, b, z});
    detail::set_row<K>(ops.a[2], 1, {c, e, a, b, z});
    detail::set_row<K>(ops.a[2], 3, {-a, -b, -c, -e, z});
    detail::set_row<K>(ops.a[3], 0, {-c, -e, -a, -b, z});
    detail::set_row<K>(ops.a[3], 2, {a, b, c, e, z});
  } else if (params.name == "5.2") {
    K a = v("a"), b = v("b"), c = v("c"), dd = v("d"), e = v("e"), f = v("f");
    detail::set_row<K>(ops.a[0], 4, {-dd, -e, -a, -b, z});
    detail::set_row<K>(ops.a[1], 4, {-e, -f, -b, -c, z});
    detail::set_row<K>(ops.a[2], 4, {-a, -b, -dd, -e, z});
    detail::set_row<K>(ops.a[3], 4, {-b, -c, -e, -f, z});
    detail::set_row<K>(ops.a_xi, 0, {a, b, dd, e, z});
    detail::set_row<K>(ops.a_xi, 1, {b, c, e, f, z});
    detail::set_row<K>(ops.a_xi, 2, {-dd, -e, -a, -b, z});
    detail::set_row<K>(ops.a_xi, 3, {-e, -f, -b, -c, z});
  } else {  // "5.3"
    K a = v("a"), b = v("b");
    ops.a[0](1, 4) = a;
    ops.a[0](3, 4) = b;
    ops.a[1](0, 4) = -a;
    ops.a[1](2, 4) = -b;
    ops.a[2](1, 4) = -b;
    ops.a[2](3, 4) = -a;
    ops.a[3](0, 4) = b;
    ops.a[3](2, 4) = a;
  }

  FTensor<K> f = assemble_from_operators(ops);

  if (params.name == "5.1") {
    // F(X,Y,Z) = alpha(X) (Y^1 Z^2 - Y^2 Z^1 + Y^3 Z^4 - Y^4 Z^3)
    //          + beta(X)  (Y^1 Z^4 - Y^2 Z^3 + Y^3 Z^2 - Y^4 Z^1)
    Vector<K> alpha = {v("a"), v("b"), v("c"), v("d"), z};
    Vector<K> beta = {v("c"), v("d"), v("a"), v("b"), z};
    Matrix<K> pm(d, d), qm(d, d);
    pm(0, 1) = K(1);
    pm(1, 0) = K(-1);
    pm(2, 3) = K(1);
    pm(3, 2) = K(-1);
    qm(0, 3) = K(1);
    qm(1, 2) = K(-1);
    qm(2, 1) = K(1);
    qm(3, 0) = K(-1);
    FTensor<K> want(sp);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t w = 0; w < d; ++w)
          want.at(x, y, w) = alpha[x] * pm(y, w) + beta[x] * qm(y, w);
    if (!(f == want))
      throw ValidationError("example 5.1: assembled tensor differs from the closed form");
  } else if (params.name == "5.2") {
    // F(X,Y,Z) = eta(Y) S(X,Z) - eta(Z) S(X,Y) with symmetric S.
    Matrix<K> sm(d, d);
    const auto& s = *sp;
    Matrix<K> m = s.phi * ops.a_xi;  // S(X,Z) = -g(phi A X, Z)
    sm = (m.transpose() * s.g).scaled(K(-1));
    if (!(sm - sm.transpose()).is_zero_matrix())
      throw ValidationError("example 5.2: S is not symmetric");
    FTensor<K> want(sp);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t w = 0; w < d; ++w)
          want.at(x, y, w) = s.eta[y] * sm(x, w) - s.eta[w] * sm(x, y);
    if (!(f == want))
      throw ValidationError("example 5.2: assembled tensor differs from the closed form");
  } else {
    // F(X,Y,Z) = eta(X) W(Y,Z)
    K a = v("a"), b = v("b");
    Matrix<K> wm(d, d);
    wm(0, 1) = a;
    wm(1, 0) = -a;
    wm(0, 3) = -b;
    wm(3, 0) = b;
    wm(1, 2) = b;
    wm(2, 1) = -b;
    wm(2, 3) = a;
    wm(3, 2) = -a;
    FTensor<K> want(sp);
    const auto& s = *sp;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t w = 0; w < d; ++w)
          want.at(x, y, w) = s.eta[x] * wm(y, w);
    if (!(f == want))
      throw ValidationError("example 5.3: assembled tensor differs from the closed form");
  }

  return {sp, std::move(ops), std::move(f)};
}

// Seed-deterministic admissible tensor: integer raw coefficients in [-5, 5]
// pushed through the admissible projection.
template <class K>
FTensor<K> random_admissible(const StructurePtr<K>& sp, std::uint64_t seed) {
  const std::size_t d = sp->dim();
  std::uint64_t state = seed ^ 0xc2b2ae3d27d4eb4fULL;
  std::vector<K> raw(d * d * d);
  for (auto& x : raw)
    x = K(static_cast<long>(detail::bounded_int(state, 5)));
  return admissible_projection(sp, raw);
}

// Seed-deterministic tensor lying purely in class i (1-based).
template <class K>
FTensor<K> random_pure(const StructurePtr<K>& sp, int i, std::uint64_t seed) {
  if (i < 1 || i > 11)
    throw DimensionError("random_pure: class index must be 1..11");
  if (sp->n == 1 && (i == 1 || i == 2 || i == 3 || i == 6))
    throw DegeneracyError("class vanishes in dimension 3");
  for (std::uint64_t k = 0; k < 64; ++k) {
    FTensor<K> f = random_admissible(sp, seed + k);
    ComponentDecomposition<K> dec = decompose(f);
    if (!dec.components[i - 1].is_zero_tensor()) return dec.components[i - 1];
  }
  throw DegeneracyError(
      "random_pure: no nonzero component found; the class may vanish at "
      "this dimension");
}

}  // namespace paraclass
