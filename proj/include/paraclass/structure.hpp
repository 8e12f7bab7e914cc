#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "paraclass/linalg.hpp"
#include "paraclass/scalar.hpp"

namespace paraclass {

enum class BasisKind { standard_phi_basis, general };

// Pointwise almost paracontact metric structure on a (2n+1)-dimensional
// space, expressed in a chosen basis.  The derived operator h = phi^2
// projects onto the horizontal distribution ker(eta).
template <class K>
struct StructureSpace {
  std::size_t n = 0;
  Matrix<K> g, g_inv, phi;
  Vector<K> xi;
  Vector<K> eta;  // covector
  BasisKind basis_kind = BasisKind::general;

  std::size_t dim() const { return 2 * n + 1; }

  // I - xi (x) eta
  Matrix<K> h_matrix() const {
    Matrix<K> h = Matrix<K>::identity(dim());
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < dim(); ++c) h(r, c) -= xi[r] * eta[c];
    return h;
  }

  K pair(const Vector<K>& x, const Vector<K>& y) const {
    return dot(x, mul(g, y));
  }

  bool operator==(const StructureSpace& o) const {
    return n == o.n && g == o.g && phi == o.phi && xi == o.xi && eta == o.eta;
  }
};

template <class K>
using StructurePtr = std::shared_ptr<const StructureSpace<K>>;

// Canonical structure in a phi-basis ordered (e_1..e_n, phi e_1..phi e_n, xi):
// g = diag(+1 x n, -1 x n, +1), phi swaps the first two blocks and kills xi.
template <class K>
StructureSpace<K> standard_structure(std::size_t n) {
  if (n == 0) throw DimensionError("standard_structure requires n >= 1");
  const std::size_t d = 2 * n + 1;
  StructureSpace<K> s;
  s.n = n;
  s.g = Matrix<K>(d, d);
  s.g_inv = Matrix<K>(d, d);
  s.phi = Matrix<K>(d, d);
  s.xi = Vector<K>(d, K(0));
  s.eta = Vector<K>(d, K(0));
  for (std::size_t i = 0; i < n; ++i) {
    s.g(i, i) = K(1);
    s.g(n + i, n + i) = K(-1);
    s.g_inv(i, i) = K(1);
    s.g_inv(n + i, n + i) = K(-1);
    s.phi(n + i, i) = K(1);
    s.phi(i, n + i) = K(1);
  }
  s.g(d - 1, d - 1) = K(1);
  s.g_inv(d - 1, d - 1) = K(1);
  s.xi[d - 1] = K(1);
  s.eta[d - 1] = K(1);
  s.basis_kind = BasisKind::standard_phi_basis;
  return s;
}

template <class K>
StructurePtr<K> make_standard(std::size_t n) {
  return std::make_shared<StructureSpace<K>>(standard_structure<K>(n));
}

// List of violated structure invariants; empty iff the structure is valid.
// Dimension mismatches are structural and throw instead.
template <class K>
std::vector<std::string> validate_structure(const StructureSpace<K>& s,
                                            const K& tol = K(0)) {
  const std::size_t d = 2 * s.n + 1;
  if (s.n == 0 || s.g.rows() != d || s.g.cols() != d || s.g_inv.rows() != d ||
      s.g_inv.cols() != d || s.phi.rows() != d || s.phi.cols() != d ||
      s.xi.size() != d || s.eta.size() != d)
    throw DimensionError("structure matrices do not have dimension 2n+1");

  std::vector<std::string> bad;
  auto vec_zero = [&](const Vector<K>& v) {
    for (const auto& x : v)
      if (!is_zero(x, tol)) return false;
    return true;
  };

  Vector<K> phixi = mul(s.phi, s.xi);
  if (!vec_zero(phixi)) bad.push_back("phi(xi)=0 violated");
  Vector<K> etaphi = mul(s.eta, s.phi);
  if (!vec_zero(etaphi)) bad.push_back("eta∘phi=0 violated");

  // eta(xi)=1 is checked against both the stored pairing and g(xi,xi),
  // since eta must coincide with g(., xi).
  K exi = dot(s.eta, s.xi);
  K gxixi = s.pair(s.xi, s.xi);
  if (!is_zero(exi - K(1), tol) || !is_zero(gxixi - K(1), tol))
    bad.push_back("eta(xi)=1 violated");

  Matrix<K> phi2 = s.phi * s.phi;
  Matrix<K> want = Matrix<K>::identity(d) - outer(s.xi, s.eta);
  if (!(phi2 - want).is_zero_matrix(tol))
    bad.push_back("phi^2=id-eta⊗xi violated");

  // compatibility: phi^T g phi = -g + eta (x) eta
  Matrix<K> lhs = s.phi.transpose() * s.g * s.phi;
  Matrix<K> rhs = -s.g + outer(s.eta, s.eta);
  if (!(lhs - rhs).is_zero_matrix(tol))
    bad.push_back("g(phiX,phiY)=-g(X,Y)+eta(X)eta(Y) violated");

  Vector<K> gxi = mul(s.g, s.xi);
  bool eta_matches = true;
  for (std::size_t i = 0; i < d; ++i)
    if (!is_zero(gxi[i] - s.eta[i], tol)) eta_matches = false;
  if (!eta_matches) bad.push_back("eta(X)=g(X,xi) violated");

  if (!(s.g - s.g.transpose()).is_zero_matrix(tol))
    bad.push_back("g not symmetric");
  if (!(s.g * s.g_inv - Matrix<K>::identity(d)).is_zero_matrix(tol))
    bad.push_back("g_inv is not the inverse of g");

  Signature sig = signature(s.g, tol);
  if (sig.positive != s.n + 1 || sig.negative != s.n)
    bad.push_back("signature (n+1,n) violated");

  return bad;
}

template <class K>
Vector<K> horizontal(const StructureSpace<K>& s, const Vector<K>& x) {
  if (x.size() != s.dim()) throw DimensionError("vector has wrong dimension");
  K e = dot(s.eta, x);
  Vector<K> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= e * s.xi[i];
  return r;
}

// g- and phi-preserving, xi-fixing linear map.
template <class K>
struct GroupElement {
  Matrix<K> a, a_inv;
};

template <class K>
bool is_group_element(const StructureSpace<K>& s, const Matrix<K>& a,
                      const K& tol = K(0)) {
  if (a.rows() != s.dim() || a.cols() != s.dim()) return false;
  if (!(a.transpose() * s.g * a - s.g).is_zero_matrix(tol)) return false;
  if (!(a * s.phi - s.phi * a).is_zero_matrix(tol)) return false;
  Vector<K> axi = mul(a, s.xi);
  for (std::size_t i = 0; i < axi.size(); ++i)
    if (!is_zero(axi[i] - s.xi[i], tol)) return false;
  return true;
}

// Rebase the structure: the columns of c are the new basis vectors written
// in the old coordinates.
template <class K>
StructureSpace<K> transport(const StructureSpace<K>& s, const Matrix<K>& c,
                            const K& tol = K(0)) {
  Matrix<K> c_inv = c.inverse(tol);
  StructureSpace<K> t;
  t.n = s.n;
  t.g = c.transpose() * s.g * c;
  t.g_inv = t.g.inverse(tol);
  t.phi = c_inv * s.phi * c;
  t.xi = mul(c_inv, s.xi);
  t.eta = mul(s.eta, c);
  StructureSpace<K> std_s = standard_structure<K>(s.n);
  t.basis_kind = (t == std_s) ? BasisKind::standard_phi_basis : BasisKind::general;
  return t;
}

namespace detail {

// Deterministic integer draw in [-bound, bound], independent of the
// standard library's distribution implementations.
inline std::int64_t bounded_int(std::uint64_t& state, int bound) {
  // splitmix64 step
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return static_cast<std::int64_t>(z % (2 * bound + 1)) - bound;
}

}  // namespace detail

// Samples a structure-group element: an invertible integer matrix T acts on
// the +1 eigenvectors e_i + phi e_i, its inverse-transpose on the -1
// eigenvectors e_i - phi e_i, and xi is fixed.
template <class K>
GroupElement<K> random_group_element(const StructureSpace<K>& s,
                                     std::uint64_t seed) {
  if (s.basis_kind != BasisKind::standard_phi_basis)
    throw ValidationError("random_group_element requires the standard phi-basis");
  const std::size_t n = s.n, d = s.dim();
  std::uint64_t state = seed ^ 0xa5a5a5a55a5a5a5aULL;

  Matrix<K> t;
  Matrix<K> t_inv;
  bool ok = false;
  for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
    t = Matrix<K>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t(i, j) = K(static_cast<long>(detail::bounded_int(state, 3)));
    try {
      t_inv = t.inverse();
      ok = true;
    } catch (const DegeneracyError&) {
    }
  }
  if (!ok) throw DegeneracyError("failed to sample an invertible block");

  // eigenbasis columns: u_i = e_i + phi e_i, v_i = e_i - phi e_i, xi
  Matrix<K> c(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = K(1);
    c(n + i, i) = K(1);
    c(i, n + i) = K(1);
    c(n + i, n + i) = K(-1);
  }
  c(d - 1, d - 1) = K(1);

  Matrix<K> block(d, d), block_inv(d, d);
  Matrix<K> tt = t.transpose();
  Matrix<K> tt_inv = t_inv.transpose();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block(i, j) = t(i, j);
      block(n + i, n + j) = tt_inv(i, j);
      block_inv(i, j) = t_inv(i, j);
      block_inv(n + i, n + j) = tt(i, j);
    }
  block(d - 1, d - 1) = K(1);
  block_inv(d - 1, d - 1) = K(1);

  Matrix<K> c_inv = c.inverse();
  GroupElement<K> g;
  g.a = c * block * c_inv;
  g.a_inv = c * block_inv * c_inv;
  return g;
}

// Change-of-basis matrix C whose columns (X_1..X_n, phi X_1..phi X_n, xi)
// transport the structure onto standard_structure(n).  Candidates are
// scanned in basis order; a candidate with negative squared length is
// replaced by its phi-image, which flips the sign of the norm.
template <class K>
Matrix<K> build_phi_basis(const StructureSpace<K>& s, const K& tol = K(0)) {
  auto bad = validate_structure(s, tol);
  if (!bad.empty())
    throw ValidationError("build_phi_basis: invalid structure: " + bad.front());
  const std::size_t n = s.n, d = s.dim();

  StructureSpace<K> std_s = standard_structure<K>(s.n);
  if (s == std_s) return Matrix<K>::identity(d);

  std::vector<Vector<K>> chosen;  // X_1, phi X_1, X_2, phi X_2, ...
  std::vector<K> chosen_norm;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t cand = 0; cand < d && !found; ++cand) {
      Vector<K> v(d, K(0));
      v[cand] = K(1);
      Vector<K> w = horizontal(s, v);
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        K coef = s.pair(w, chosen[k]) / chosen_norm[k];
        for (std::size_t r = 0; r < d; ++r) w[r] -= coef * chosen[k][r];
      }
      K nrm = s.pair(w, w);
      if (is_zero(nrm, tol)) continue;
      if (nrm < K(0)) {
        w = mul(s.phi, w);
        nrm = -nrm;
      }
      if constexpr (FieldInfo<K>::exact) {
        auto root = exact_sqrt(nrm);
        if (!root) continue;  // try the next candidate
        for (auto& x : w) x /= *root;
      } else {
        K root = std::sqrt(nrm);
        for (auto& x : w) x /= root;
      }
      Vector<K> pw = mul(s.phi, w);
      chosen.push_back(w);
      chosen_norm.push_back(K(1));
      chosen.push_back(pw);
      chosen_norm.push_back(K(-1));
      found = true;
    }
    if (!found)
      throw DegeneracyError(
          "build_phi_basis: no normalizable vector orthogonal to the "
          "processed set");
  }

  Matrix<K> c(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d; ++r) {
      c(r, i) = chosen[2 * i][r];
      c(r, n + i) = chosen[2 * i + 1][r];
    }
  for (std::size_t r = 0; r < d; ++r) c(r, d - 1) = s.xi[r];
  return c;
}

}  // namespace paraclass
