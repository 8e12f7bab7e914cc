#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "paraclass/projectors.hpp"

namespace paraclass {

// Per-class membership decisions for one tensor.
template <class K>
struct ClassificationReport {
  std::array<bool, 11> flags{};           // component nonzero
  std::string label;                      // "F_0", "F_3 (+) F_10", ...
  std::array<K, 11> magnitudes{};         // max-abs coefficient
  std::array<K, 11> self_ips{};           // possibly negative (indefinite)
  std::array<bool, 11> characterization_ok{};
  K theta_xi{};
  K theta_star_xi{};
  Vector<K> omega;
};

namespace detail {

template <class K>
bool tensors_match(const FTensor<K>& a, const FTensor<K>& b, const K& tol) {
  return (a - b).is_zero_tensor(tol);
}

template <class K>
FTensor<K> phiphi(const FTensor<K>& f) {  // F(phiX, phiY, Z)
  const auto& s = f.space();
  return contract_slot(contract_slot(f, s.phi, 0), s.phi, 1);
}

template <class K>
FTensor<K> phi_mid(const FTensor<K>& f) {  // F(phiX, Y, phiZ)
  const auto& s = f.space();
  return contract_slot(contract_slot(f, s.phi, 0), s.phi, 2);
}

}  // namespace detail

// Evaluates the characterization identity of class i (1..11) over all basis
// triples, plus the scalar trace conditions where the class requires them.
template <class K>
bool characterization_check(const FTensor<K>& f, int i, const K& tol = K(0)) {
  const auto& s = f.space();
  const auto& sp = f.space_ptr();
  const std::size_t d = f.dim();
  using detail::phi_mid;
  using detail::phiphi;
  using detail::tensors_match;

  OneForms<K> forms = one_forms(f);
  const K theta_xi = dot(forms.theta, s.xi);
  const K theta_star_xi = dot(forms.theta_star, s.xi);

  switch (i) {
    case 1: {
      if (s.n == 1) return f.is_zero_tensor(tol);
      FTensor<K> want =
          theta_template(sp, forms.theta).scaled(kappa<K>(s.n));
      return tensors_match(f, want, tol);
    }
    case 2: {
      for (const auto& t : forms.theta)
        if (!is_zero(t, tol)) return false;
      return tensors_match(phiphi(f), -f, tol);
    }
    case 3:
      return tensors_match(phiphi(f), f, tol);
    case 4: {
      const K coef = theta_xi / K(static_cast<long>(2 * s.n));
      Matrix<K> gpp = s.phi.transpose() * s.g * s.phi;
      FTensor<K> want(sp);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            want.at(a, b, c) =
                coef * (s.eta[b] * gpp(a, c) - s.eta[c] * gpp(a, b));
      return tensors_match(f, want, tol);
    }
    case 5: {
      const K coef = -theta_star_xi / K(static_cast<long>(2 * s.n));
      Matrix<K> gphi = s.g * s.phi;
      FTensor<K> want(sp);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            want.at(a, b, c) =
                coef * (s.eta[b] * gphi(a, c) - s.eta[c] * gphi(a, b));
      return tensors_match(f, want, tol);
    }
    case 6:
      return tensors_match(f, -phiphi(f) - phi_mid(f), tol) &&
             tensors_match(f,
                           -permute_slots(f, {1, 2, 0}) +
                               permute_slots(f, {2, 0, 1}) -
                               phiphi(f).scaled(K(2)),
                           tol) &&
             is_zero(theta_star_xi, tol);
    case 7:
      return tensors_match(f, -phiphi(f) - phi_mid(f), tol) &&
             tensors_match(f,
                           -permute_slots(f, {1, 2, 0}) -
                               permute_slots(f, {2, 0, 1}),
                           tol) &&
             is_zero(theta_xi, tol);
    case 8:
      return tensors_match(f, phiphi(f) + phi_mid(f), tol) &&
             tensors_match(f,
                           -permute_slots(f, {1, 2, 0}) +
                               permute_slots(f, {2, 0, 1}) +
                               phiphi(f).scaled(K(2)),
                           tol);
    case 9:
      return tensors_match(f, phiphi(f) + phi_mid(f), tol) &&
             tensors_match(f,
                           -permute_slots(f, {1, 2, 0}) -
                               permute_slots(f, {2, 0, 1}),
                           tol);
    case 10: {
      // F(X,Y,Z) = eta(X) F(xi, phiY, phiZ)
      Matrix<K> t = plug_slot(
          contract_slot(contract_slot(f, s.phi, 1), s.phi, 2), s.xi, 0);
      FTensor<K> want(sp);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            want.at(a, b, c) = s.eta[a] * t(b, c);
      return tensors_match(f, want, tol);
    }
    case 11: {
      FTensor<K> want(sp);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            want.at(a, b, c) =
                s.eta[a] *
                (s.eta[b] * forms.omega[c] - s.eta[c] * forms.omega[b]);
      return tensors_match(f, want, tol);
    }
    default:
      throw DimensionError("characterization_check: class index must be 1..11");
  }
}

template <class K>
ClassificationReport<K> classify(const FTensor<K>& f, const K& tol = K(0)) {
  ComponentDecomposition<K> dec = decompose(f, tol);
  const auto& s = f.space();
  ClassificationReport<K> rep;
  const K input_mag = f.max_abs();
  bool any = false;
  for (int i = 0; i < 11; ++i) {
    rep.magnitudes[i] = dec.magnitude[i];
    rep.self_ips[i] = dec.self_ip[i];
    rep.flags[i] = !component_is_zero(dec.magnitude[i], input_mag, tol);
    rep.characterization_ok[i] =
        rep.flags[i] ? characterization_check(dec.components[i], i + 1, tol)
                     : true;
    any = any || rep.flags[i];
  }
  if (!any) {
    rep.label = "F_0";
  } else {
    std::string label;
    for (int i = 0; i < 11; ++i) {
      if (!rep.flags[i]) continue;
      if (!label.empty()) label += " (+) ";
      label += "F_" + std::to_string(i + 1);
    }
    rep.label = label;
  }
  OneForms<K> forms = one_forms(f);
  rep.theta_xi = dot(forms.theta, s.xi);
  rep.theta_star_xi = dot(forms.theta_star, s.xi);
  rep.omega = forms.omega;
  return rep;
}

// Rank audit of the eleven component projectors over the admissible space,
// with the two independent dimension oracles cross-checked.
struct DimensionAudit {
  std::array<std::size_t, 11> d{};
  std::size_t total = 0;
  std::size_t admissible_dim_nullspace = 0;
  std::size_t admissible_dim_pi_rank = 0;
};

namespace detail {

// Constraint matrix over the entries of A_1..A_{2n}, A_xi; its kernel is
// the space of valid operator families.
template <class K>
Matrix<K> operator_constraint_matrix(const StructureSpace<K>& s) {
  const std::size_t n = s.n, d = s.dim();
  const std::size_t nvars = (2 * n + 1) * d * d;
  auto var = [&](std::size_t op, std::size_t r, std::size_t c) {
    return op * d * d + r * d + c;
  };
  std::vector<Vector<K>> rows;
  auto new_row = [&]() -> Vector<K>& {
    rows.emplace_back(nvars, K(0));
    return rows.back();
  };
  Matrix<K> gphi = s.g * s.phi;  // g(f_k, phi f_i)

  // skew pairing: g(A_i f_x, f_j) + g(A_j f_x, f_i) = 0
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = i; j < 2 * n; ++j)
      for (std::size_t x = 0; x < d; ++x) {
        auto& row = new_row();
        for (std::size_t k = 0; k < d; ++k) {
          row[var(i, k, x)] += s.g(k, j);
          row[var(j, k, x)] += s.g(k, i);
        }
      }
  // coupling: A_{phi e_i} f_x + phi(A_i f_x) + g(A_xi f_x, f_i) xi = 0
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::size_t pi = (i < n) ? n + i : i - n;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t r = 0; r < d; ++r) {
        auto& row = new_row();
        row[var(pi, r, x)] += K(1);
        for (std::size_t k = 0; k < d; ++k) {
          row[var(i, k, x)] += s.phi(r, k);
          row[var(2 * n, k, x)] += s.xi[r] * s.g(k, i);
        }
      }
  }
  // vertical part: eta(A_i f_x) + g(A_xi f_x, phi f_i) = 0
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t x = 0; x < d; ++x) {
      auto& row = new_row();
      for (std::size_t k = 0; k < d; ++k) {
        row[var(i, k, x)] += s.eta[k];
        row[var(2 * n, k, x)] += gphi(k, i);
      }
    }
  // horizontal image: eta(A_xi f_x) = 0
  for (std::size_t x = 0; x < d; ++x) {
    auto& row = new_row();
    for (std::size_t k = 0; k < d; ++k) row[var(2 * n, k, x)] += s.eta[k];
  }

  Matrix<K> m(rows.size(), nvars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nvars; ++c) m(r, c) = rows[r][c];
  return m;
}

template <class K>
OperatorFamily<K> unpack_family(const StructurePtr<K>& sp, const Vector<K>& v) {
  const auto& s = *sp;
  const std::size_t n = s.n, d = s.dim();
  OperatorFamily<K> ops;
  ops.s = sp;
  ops.a.assign(2 * n, Matrix<K>(d, d));
  ops.a_xi = Matrix<K>(d, d);
  auto var = [&](std::size_t op, std::size_t r, std::size_t c) {
    return op * d * d + r * d + c;
  };
  for (std::size_t op = 0; op < 2 * n; ++op)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) ops.a[op](r, c) = v[var(op, r, c)];
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) ops.a_xi(r, c) = v[var(2 * n, r, c)];
  return ops;
}

}  // namespace detail

// Basis of the admissible tensor space from the operator-constraint kernel.
template <class K>
std::vector<FTensor<K>> admissible_basis(const StructurePtr<K>& sp) {
  Matrix<K> constraints = detail::operator_constraint_matrix(*sp);
  auto kernel = null_space(constraints);
  std::vector<FTensor<K>> basis;
  basis.reserve(kernel.size());
  for (const auto& v : kernel)
    basis.push_back(assemble_from_operators(detail::unpack_family(sp, v)));
  return basis;
}

// Rank of the admissible projection as a linear map on raw (2n+1)^3 arrays.
template <class K>
std::size_t admissible_projection_rank(const StructurePtr<K>& sp) {
  const std::size_t d = sp->dim();
  const std::size_t nd = d * d * d;
  Matrix<K> m(nd, nd);
  std::vector<K> unit(nd, K(0));
  for (std::size_t j = 0; j < nd; ++j) {
    unit[j] = K(1);
    FTensor<K> img = admissible_projection(sp, unit);
    for (std::size_t i = 0; i < nd; ++i) m(i, j) = img.coeffs()[i];
    unit[j] = K(0);
  }
  return rank(m);
}

template <class K>
DimensionAudit dimension_audit(std::size_t n) {
  if (n < 1 || n > 4)
    throw DimensionError("dimension_audit: n must be in 1..4");
  auto sp = make_standard<K>(n);
  std::vector<FTensor<K>> basis = admissible_basis(sp);

  DimensionAudit audit;
  audit.admissible_dim_nullspace = basis.size();
  audit.admissible_dim_pi_rank = admissible_projection_rank(sp);
  if (audit.admissible_dim_nullspace != audit.admissible_dim_pi_rank)
    throw ValidationError("dimension oracles disagree");

  const std::size_t nd = sp->dim() * sp->dim() * sp->dim();
  std::vector<ComponentDecomposition<K>> decs;
  decs.reserve(basis.size());
  for (const auto& f : basis) decs.push_back(decompose(f));
  for (int i = 0; i < 11; ++i) {
    Matrix<K> m(nd, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t r = 0; r < nd; ++r)
        m(r, j) = decs[j].components[i].coeffs()[r];
    audit.d[i] = rank(m);
    audit.total += audit.d[i];
  }
  if (audit.total != audit.admissible_dim_nullspace)
    throw ValidationError("component ranks do not sum to the admissible dimension");
  return audit;
}

}  // namespace paraclass
