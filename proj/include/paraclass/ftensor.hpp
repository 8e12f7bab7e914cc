#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "paraclass/structure.hpp"

namespace paraclass {

// Admissible (0,3)-tensor over a structure space, stored as the dense
// coefficient array coeffs[a][b][c] = F(f_a, f_b, f_c).
template <class K>
class FTensor {
 public:
  FTensor() = default;
  explicit FTensor(StructurePtr<K> s)
      : s_(std::move(s)), c_(s_->dim() * s_->dim() * s_->dim(), K(0)) {}
  FTensor(StructurePtr<K> s, std::vector<K> coeffs)
      : s_(std::move(s)), c_(std::move(coeffs)) {
    if (c_.size() != s_->dim() * s_->dim() * s_->dim())
      throw DimensionError("coefficient array is not (2n+1)^3");
  }

  const StructureSpace<K>& space() const { return *s_; }
  const StructurePtr<K>& space_ptr() const { return s_; }
  std::size_t dim() const { return s_->dim(); }

  K& at(std::size_t a, std::size_t b, std::size_t c) {
    return c_[(a * dim() + b) * dim() + c];
  }
  const K& at(std::size_t a, std::size_t b, std::size_t c) const {
    return c_[(a * dim() + b) * dim() + c];
  }
  const std::vector<K>& coeffs() const { return c_; }

  K eval(const Vector<K>& x, const Vector<K>& y, const Vector<K>& z) const {
    K s(0);
    for (std::size_t a = 0; a < dim(); ++a) {
      if (is_zero(x[a], K(0))) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (is_zero(y[b], K(0))) continue;
        for (std::size_t c = 0; c < dim(); ++c)
          s += x[a] * y[b] * z[c] * at(a, b, c);
      }
    }
    return s;
  }

  FTensor operator+(const FTensor& o) const {
    FTensor r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  FTensor operator-(const FTensor& o) const {
    FTensor r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  FTensor operator-() const {
    FTensor r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  FTensor scaled(const K& f) const {
    FTensor r = *this;
    for (auto& v : r.c_) v *= f;
    return r;
  }
  bool operator==(const FTensor& o) const { return c_ == o.c_; }
  bool operator!=(const FTensor& o) const { return !(*this == o); }

  K max_abs() const {
    K m(0);
    for (const auto& v : c_)
      if (abs_val(v) > m) m = abs_val(v);
    return m;
  }
  bool is_zero_tensor(const K& tol = K(0)) const {
    for (const auto& v : c_)
      if (!is_zero(v, tol)) return false;
    return true;
  }

 private:
  StructurePtr<K> s_;
  std::vector<K> c_;
};

// G(.., f_slot, ..) = F(.., M f_slot, ..): substitutes the linear map M
// into one argument slot.
template <class K>
FTensor<K> contract_slot(const FTensor<K>& f, const Matrix<K>& m, int slot) {
  const std::size_t d = f.dim();
  FTensor<K> g(f.space_ptr());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const K& v = f.at(a, b, c);
        if (is_zero(v, K(0))) continue;
        std::size_t idx = (slot == 0) ? a : (slot == 1) ? b : c;
        for (std::size_t j = 0; j < d; ++j) {
          const K& mv = m(idx, j);
          if (is_zero(mv, K(0))) continue;
          if (slot == 0)
            g.at(j, b, c) += mv * v;
          else if (slot == 1)
            g.at(a, j, c) += mv * v;
          else
            g.at(a, b, j) += mv * v;
        }
      }
  return g;
}

// Plugs a fixed vector into one slot, producing a rank-2 array
// r(i, j) = F(.., v, ..) over the two remaining slots in order.
template <class K>
Matrix<K> plug_slot(const FTensor<K>& f, const Vector<K>& v, int slot) {
  const std::size_t d = f.dim();
  Matrix<K> r(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) {
        if (is_zero(v[k], K(0))) continue;
        if (slot == 0)
          r(a, b) += v[k] * f.at(k, a, b);
        else if (slot == 1)
          r(a, b) += v[k] * f.at(a, k, b);
        else
          r(a, b) += v[k] * f.at(a, b, k);
      }
  return r;
}

// G(X,Y,Z) = F(Y,Z,X) and friends; perm maps destination slots to source
// slots, e.g. {1,2,0} gives G[a][b][c] = F[b][c][a].
template <class K>
FTensor<K> permute_slots(const FTensor<K>& f, const std::array<int, 3>& perm) {
  const std::size_t d = f.dim();
  FTensor<K> g(f.space_ptr());
  std::array<std::size_t, 3> idx;
  for (idx[0] = 0; idx[0] < d; ++idx[0])
    for (idx[1] = 0; idx[1] < d; ++idx[1])
      for (idx[2] = 0; idx[2] < d; ++idx[2])
        g.at(idx[0], idx[1], idx[2]) =
            f.at(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
  return g;
}

// The involution R(F)(X,Y,Z) = F(X,phiY,phiZ) - eta(Y)F(X,Z,xi)
//                            + eta(Z)F(X,Y,xi).
template <class K>
FTensor<K> phi_compat_reflection(const FTensor<K>& f) {
  const auto& s = f.space();
  const std::size_t d = f.dim();
  FTensor<K> r = contract_slot(contract_slot(f, s.phi, 1), s.phi, 2);
  Matrix<K> fxi = plug_slot(f, s.xi, 2);  // fxi(a,b) = F(f_a, f_b, xi)
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        r.at(a, b, c) -= s.eta[b] * fxi(a, c);
        r.at(a, b, c) += s.eta[c] * fxi(a, b);
      }
  return r;
}

// Projection onto the admissible space: antisymmetrize the last two slots,
// then average with the phi-compatibility reflection.
template <class K>
FTensor<K> admissible_projection(StructurePtr<K> s, const std::vector<K>& raw) {
  FTensor<K> t(s, raw);
  const std::size_t d = t.dim();
  FTensor<K> anti(s);
  K half = K(1) / K(2);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        anti.at(a, b, c) = half * (t.at(a, b, c) - t.at(a, c, b));
  FTensor<K> r = phi_compat_reflection(anti);
  return (anti + r).scaled(half);
}

template <class K>
std::vector<std::string> check_admissible(const FTensor<K>& f,
                                          const K& tol = K(0)) {
  const std::size_t d = f.dim();
  std::vector<std::string> bad;
  bool anti_ok = true;
  for (std::size_t a = 0; a < d && anti_ok; ++a)
    for (std::size_t b = 0; b < d && anti_ok; ++b)
      for (std::size_t c = 0; c < d; ++c)
        if (!is_zero(f.at(a, b, c) + f.at(a, c, b), tol)) {
          anti_ok = false;
          break;
        }
  if (!anti_ok) bad.push_back("F(X,Y,Z)=-F(X,Z,Y) violated");

  FTensor<K> r = phi_compat_reflection(f);
  if (!(r - f).is_zero_tensor(tol))
    bad.push_back("F(X,phiY,phiZ)=F(X,Y,Z)+eta(Y)F(X,Z,xi)-eta(Z)F(X,Y,xi) violated");
  return bad;
}

template <class K>
bool is_admissible(const FTensor<K>& f, const K& tol = K(0)) {
  return check_admissible(f, tol).empty();
}

// Operator data A_{e_1}..A_{e_2n}, A_xi behind an admissible tensor; only
// meaningful over the standard phi-basis, where phi permutes basis vectors.
template <class K>
struct OperatorFamily {
  StructurePtr<K> s;
  std::vector<Matrix<K>> a;  // a[i] is A_{f_{i+1}}, i = 0..2n-1
  Matrix<K> a_xi;
};

template <class K>
std::vector<std::string> validate_operator_family(const OperatorFamily<K>& ops,
                                                  const K& tol = K(0)) {
  const auto& s = *ops.s;
  const std::size_t n = s.n, d = s.dim();
  if (s.basis_kind != BasisKind::standard_phi_basis)
    throw ValidationError("operator families require the standard phi-basis");
  if (ops.a.size() != 2 * n) throw DimensionError("expected 2n operator matrices");
  for (const auto& m : ops.a)
    if (m.rows() != d || m.cols() != d)
      throw DimensionError("operator matrix is not (2n+1)x(2n+1)");
  if (ops.a_xi.rows() != d || ops.a_xi.cols() != d)
    throw DimensionError("A_xi matrix is not (2n+1)x(2n+1)");

  std::vector<std::string> bad;
  auto gdot = [&](const Vector<K>& x, const Vector<K>& y) { return s.pair(x, y); };
  auto col = [&](const Matrix<K>& m, std::size_t j) {
    Vector<K> v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = m(r, j);
    return v;
  };
  auto basis = [&](std::size_t i) {
    Vector<K> v(d, K(0));
    v[i] = K(1);
    return v;
  };

  bool ok22 = true;
  for (std::size_t i = 0; i < 2 * n && ok22; ++i)
    for (std::size_t j = 0; j < 2 * n && ok22; ++j)
      for (std::size_t x = 0; x < d; ++x)
        if (!is_zero(gdot(col(ops.a[i], x), basis(j)) +
                         gdot(col(ops.a[j], x), basis(i)),
                     tol)) {
          ok22 = false;
          break;
        }
  if (!ok22) bad.push_back("skew pairing: g(A_{e_i}X,e_j)=-g(A_{e_j}X,e_i) violated");

  bool ok23 = true;
  for (std::size_t i = 0; i < 2 * n && ok23; ++i) {
    std::size_t pi = (i < n) ? n + i : i - n;  // phi e_i as a basis index
    for (std::size_t x = 0; x < d && ok23; ++x) {
      Vector<K> lhs = col(ops.a[pi], x);
      Vector<K> rhs = mul(s.phi, col(ops.a[i], x));
      K coef = gdot(col(ops.a_xi, x), basis(i));
      for (std::size_t r = 0; r < d; ++r)
        if (!is_zero(lhs[r] + rhs[r] + coef * s.xi[r], tol)) {
          ok23 = false;
          break;
        }
    }
  }
  if (!ok23)
    bad.push_back("coupling: A_{phi e_i}X=-phi(A_{e_i}X)-g(A_xi X,e_i)xi violated");

  bool ok24 = true;
  for (std::size_t i = 0; i < 2 * n && ok24; ++i)
    for (std::size_t x = 0; x < d; ++x) {
      K lhs = dot(s.eta, col(ops.a[i], x));
      K rhs = -gdot(col(ops.a_xi, x), mul(s.phi, basis(i)));
      if (!is_zero(lhs - rhs, tol)) {
        ok24 = false;
        break;
      }
    }
  if (!ok24) bad.push_back("vertical part: eta(A_{e_i}X)=-g(A_xi X,phi e_i) violated");

  bool ok25 = true;
  for (std::size_t x = 0; x < d; ++x)
    if (!is_zero(dot(s.eta, col(ops.a_xi, x)), tol)) {
      ok25 = false;
      break;
    }
  if (!ok25) bad.push_back("horizontal image: eta(A_xi X)=0 violated");

  return bad;
}

// F(X,Y,Z) = Y^i g(A_{e_i}X, Z) + eta(Y) g(A_xi X, phi Z)
template <class K>
FTensor<K> assemble_from_operators(const OperatorFamily<K>& ops,
                                   const K& tol = K(0)) {
  auto bad = validate_operator_family(ops, tol);
  if (!bad.empty())
    throw ValidationError("operator family rejected: " + bad.front());
  const auto& s = *ops.s;
  const std::size_t n = s.n, d = s.dim();
  FTensor<K> f(ops.s);
  // over the standard basis, g(A_b f_a, f_c) = (G A_b)(c, a)
  for (std::size_t b = 0; b < 2 * n; ++b) {
    Matrix<K> ga = s.g * ops.a[b];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) f.at(a, b, c) = ga(c, a);
  }
  Matrix<K> gphia = s.phi.transpose() * s.g * ops.a_xi;  // g(A_xi f_a, phi f_c)
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = 0; c < d; ++c) f.at(a, d - 1, c) = gphia(c, a);
  return f;
}

// Inverts the assembly: A_{e_j} f_a is the g-dual of Z -> F(f_a, e_j, Z) and
// A_xi f_a = -phi (g-dual of Z -> F(f_a, xi, Z)).
template <class K>
OperatorFamily<K> extract_operators(const FTensor<K>& f, const K& tol = K(0)) {
  const auto& s = f.space();
  auto bad = check_admissible(f, tol);
  if (!bad.empty())
    throw ValidationError("inadmissible input: " + bad.front());
  if (s.basis_kind != BasisKind::standard_phi_basis)
    throw ValidationError("operator families require the standard phi-basis");
  const std::size_t n = s.n, d = s.dim();
  OperatorFamily<K> ops;
  ops.s = f.space_ptr();
  ops.a.assign(2 * n, Matrix<K>(d, d));
  for (std::size_t j = 0; j < 2 * n; ++j)
    for (std::size_t a = 0; a < d; ++a) {
      Vector<K> cov(d);
      for (std::size_t c = 0; c < d; ++c) cov[c] = f.at(a, j, c);
      Vector<K> v = mul(s.g_inv, cov);
      for (std::size_t r = 0; r < d; ++r) ops.a[j](r, a) = v[r];
    }
  ops.a_xi = Matrix<K>(d, d);
  Matrix<K> fxi = plug_slot(f, s.xi, 1);  // fxi(a,c) = F(f_a, xi, f_c)
  for (std::size_t a = 0; a < d; ++a) {
    Vector<K> cov(d);
    for (std::size_t c = 0; c < d; ++c) cov[c] = fxi(a, c);
    Vector<K> v = mul(s.phi, mul(s.g_inv, cov));
    for (std::size_t r = 0; r < d; ++r) ops.a_xi(r, a) = -v[r];
  }
  return ops;
}

// Associated 1-forms; traces of F against g over the full basis.
template <class K>
struct OneForms {
  Vector<K> theta, theta_star, omega;
};

template <class K>
Vector<K> theta_form(const FTensor<K>& f) {
  const auto& s = f.space();
  const std::size_t d = f.dim();
  Vector<K> th(d, K(0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const K& gab = s.g_inv(a, b);
      if (is_zero(gab, K(0))) continue;
      for (std::size_t x = 0; x < d; ++x) th[x] += gab * f.at(a, b, x);
    }
  return th;
}

template <class K>
OneForms<K> one_forms(const FTensor<K>& f) {
  const auto& s = f.space();
  OneForms<K> r;
  r.theta = theta_form(f);
  FTensor<K> fphi = contract_slot(f, s.phi, 1);
  r.theta_star = theta_form(fphi);
  Matrix<K> fxi = plug_slot(f, s.xi, 0);  // fxi(b,c) = F(xi, f_b, f_c)
  r.omega = mul(s.xi, fxi);
  return r;
}

template <class K>
K inner_product(const FTensor<K>& f1, const FTensor<K>& f2) {
  if (!(f1.space() == f2.space()))
    throw ValidationError("inner_product: tensors live over different structures");
  const auto& s = f1.space();
  FTensor<K> raised = contract_slot(
      contract_slot(contract_slot(f1, s.g_inv, 0), s.g_inv, 1), s.g_inv, 2);
  K acc(0);
  const auto& c1 = raised.coeffs();
  const auto& c2 = f2.coeffs();
  for (std::size_t i = 0; i < c1.size(); ++i) acc += c1[i] * c2[i];
  return acc;
}

// (lambda(a)F)(X,Y,Z) = F(a^{-1}X, a^{-1}Y, a^{-1}Z)
template <class K>
FTensor<K> group_action(const GroupElement<K>& a, const FTensor<K>& f,
                        const K& tol = K(0)) {
  if (!is_group_element(f.space(), a.a, tol))
    throw ValidationError("matrix is not a structure-group element");
  return contract_slot(
      contract_slot(contract_slot(f, a.a_inv, 0), a.a_inv, 1), a.a_inv, 2);
}

}  // namespace paraclass
