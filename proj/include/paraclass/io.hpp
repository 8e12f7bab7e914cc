#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "paraclass/classifier.hpp"
#include "paraclass/ftensor.hpp"

namespace paraclass {

using nlohmann::json;

template <class K>
K scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_from_string<K>(j.get<std::string>());
  if (j.is_number_integer())
    return K(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) {
    if constexpr (FieldInfo<K>::exact)
      throw ValidationError(
          "floating-point literals are not allowed with rational scalars; "
          "write \"p/q\" strings");
    else
      return j.get<double>();
  }
  throw ValidationError("scalar entries must be numbers or \"p/q\" strings");
}

inline json scalar_to_json(const Rat& x) {
  // integers go out as plain numbers when they fit, everything else as "p/q"
  if (x.get_den() == 1 && x.get_num().fits_slong_p())
    return json(x.get_num().get_si());
  return json(format_scalar(x));
}

inline json scalar_to_json(double x) { return json(x); }

template <class K>
Vector<K> vector_from_json(const json& j, std::size_t d) {
  if (!j.is_array() || j.size() != d)
    throw DimensionError("expected an array of length " + std::to_string(d));
  Vector<K> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = scalar_from_json<K>(j[i]);
  return v;
}

template <class K>
Matrix<K> matrix_from_json(const json& j, std::size_t d) {
  if (!j.is_array() || j.size() != d)
    throw DimensionError("expected a " + std::to_string(d) + "x" +
                         std::to_string(d) + " matrix");
  Matrix<K> m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    Vector<K> row = vector_from_json<K>(j[r], d);
    for (std::size_t c = 0; c < d; ++c) m(r, c) = row[c];
  }
  return m;
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <class K>
json vector_to_json(const Vector<K>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

template <class K>
struct ParsedInput {
  StructurePtr<K> s;
  FTensor<K> f;
  bool projected = false;   // admit=true and the raw tensor was inadmissible
  K projection_distance{};  // max-abs of (raw - projected)
};

namespace detail {

// A_xi column x solves g(A_xi f_x, phi f_i) = -eta(A_{e_i} f_x) together
// with eta(A_xi f_x) = 0; phi permutes the horizontal basis, so the g-dual
// covector is known on the whole basis.
template <class K>
Matrix<K> derive_a_xi(const StructureSpace<K>& s,
                      const std::vector<Matrix<K>>& a) {
  const std::size_t n = s.n, d = s.dim();
  Matrix<K> axi(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    Vector<K> cov(d, K(0));  // cov[j] = g(A_xi f_x, f_j)
    for (std::size_t i = 0; i < 2 * n; ++i) {
      K eai(0);  // eta(A_{e_i} f_x)
      for (std::size_t k = 0; k < d; ++k) eai += s.eta[k] * a[i](k, x);
      std::size_t j = (i < n) ? n + i : i - n;  // phi f_i = f_j
      cov[j] = -eai;
    }
    Vector<K> u = mul(s.g_inv, cov);
    for (std::size_t r = 0; r < d; ++r) axi(r, x) = u[r];
  }
  return axi;
}

}  // namespace detail

// Reads an input document: structure (explicit or standard), then the tensor
// either directly or assembled from operator matrices.
template <class K>
ParsedInput<K> parse_input(const json& doc, bool admit_override = false,
                           const K& tol = K(0)) {
  if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ValidationError("input document needs an integer field \"n\"");
  const long n_raw = doc["n"].get<long>();
  if (n_raw < 1) throw ValidationError("n must be a positive integer");
  const std::size_t n = static_cast<std::size_t>(n_raw);
  const std::size_t d = 2 * n + 1;

  if (doc.contains("scalars")) {
    const std::string mode = doc["scalars"].get<std::string>();
    if (mode != "rational" && mode != "float")
      throw ValidationError("\"scalars\" must be \"rational\" or \"float\"");
    const bool want_exact = (mode == "rational");
    if (want_exact != FieldInfo<K>::exact)
      throw ValidationError("document scalar mode \"" + mode +
                            "\" does not match the session mode");
  }

  StructurePtr<K> sp;
  if (doc.contains("structure")) {
    const json& st = doc["structure"];
    StructureSpace<K> s;
    s.n = n;
    s.g = matrix_from_json<K>(st.at("g"), d);
    s.g_inv = s.g.inverse(tol);
    s.phi = matrix_from_json<K>(st.at("phi"), d);
    s.xi = vector_from_json<K>(st.at("xi"), d);
    s.eta = vector_from_json<K>(st.at("eta"), d);
    StructureSpace<K> std_s = standard_structure<K>(n);
    s.basis_kind = (s == std_s) ? BasisKind::standard_phi_basis
                                : BasisKind::general;
    auto bad = validate_structure(s, tol);
    if (!bad.empty())
      throw ValidationError("invalid structure: " + bad.front());
    sp = std::make_shared<StructureSpace<K>>(std::move(s));
  } else {
    sp = make_standard<K>(n);
  }

  if (!doc.contains("F") || !doc["F"].is_object())
    throw ValidationError("input document needs an object field \"F\"");
  const json& fj = doc["F"];
  const std::string kind = fj.at("kind").get<std::string>();

  ParsedInput<K> out;
  out.s = sp;
  if (kind == "tensor") {
    const json& vals = fj.at("values");
    if (!vals.is_array() || vals.size() != d)
      throw DimensionError("\"values\" must be a (2n+1)^3 nested array");
    std::vector<K> raw(d * d * d);
    for (std::size_t a = 0; a < d; ++a) {
      if (!vals[a].is_array() || vals[a].size() != d)
        throw DimensionError("\"values\" must be a (2n+1)^3 nested array");
      for (std::size_t b = 0; b < d; ++b) {
        Vector<K> row = vector_from_json<K>(vals[a][b], d);
        for (std::size_t c = 0; c < d; ++c) raw[(a * d + b) * d + c] = row[c];
      }
    }
    FTensor<K> f(sp, raw);
    bool admit = admit_override;
    if (doc.contains("admit")) admit = admit || doc["admit"].get<bool>();
    auto bad = check_admissible(f, tol);
    if (!bad.empty()) {
      if (!admit)
        throw ValidationError("inadmissible tensor (" + bad.front() +
                              "); pass admit to project");
      FTensor<K> proj = admissible_projection(sp, raw);
      out.projection_distance = (f - proj).max_abs();
      out.projected = true;
      f = proj;
    }
    out.f = std::move(f);
  } else if (kind == "operators") {
    OperatorFamily<K> ops;
    ops.s = sp;
    const json& aj = fj.at("A");
    if (!aj.is_array() || aj.size() != 2 * n)
      throw DimensionError("\"A\" must list 2n operator matrices");
    for (const auto& mj : aj) ops.a.push_back(matrix_from_json<K>(mj, d));
    if (fj.contains("A_xi"))
      ops.a_xi = matrix_from_json<K>(fj["A_xi"], d);
    else
      ops.a_xi = detail::derive_a_xi(*sp, ops.a);
    out.f = assemble_from_operators(ops, tol);
  } else {
    throw ValidationError("F.kind must be \"tensor\" or \"operators\"");
  }
  return out;
}

// Tensor written back out as a self-contained input document.
template <class K>
json tensor_document(const FTensor<K>& f) {
  const std::size_t d = f.dim();
  json vals = json::array();
  for (std::size_t a = 0; a < d; ++a) {
    json plane = json::array();
    for (std::size_t b = 0; b < d; ++b) {
      json row = json::array();
      for (std::size_t c = 0; c < d; ++c)
        row.push_back(scalar_to_json(f.at(a, b, c)));
      plane.push_back(row);
    }
    vals.push_back(plane);
  }
  json doc;
  doc["n"] = f.space().n;
  doc["scalars"] = FieldInfo<K>::exact ? "rational" : "float";
  doc["F"] = {{"kind", "tensor"}, {"values", vals}};
  return doc;
}

template <class K>
json report_to_json(const ClassificationReport<K>& rep,
                    const ParsedInput<K>* input = nullptr) {
  json flags = json::array(), mags = json::array(), ips = json::array(),
       chars = json::array();
  for (int i = 0; i < 11; ++i) {
    flags.push_back(rep.flags[i]);
    mags.push_back(scalar_to_json(rep.magnitudes[i]));
    ips.push_back(scalar_to_json(rep.self_ips[i]));
    chars.push_back(rep.characterization_ok[i]);
  }
  json doc;
  doc["label"] = rep.label;
  doc["flags"] = flags;
  doc["magnitudes"] = mags;
  doc["self_ips"] = ips;
  doc["characterization_ok"] = chars;
  doc["one_forms_summary"] = {{"theta_xi", scalar_to_json(rep.theta_xi)},
                              {"theta_star_xi", scalar_to_json(rep.theta_star_xi)},
                              {"omega", vector_to_json(rep.omega)}};
  if (rep.flags[0])
    doc["notes"] = json::array(
        {"F_1 identity checked with the trace coefficient 1/(2(n-1)); "
         "theta sums over the full basis"});
  if (input && input->projected) {
    doc["projected"] = true;
    doc["projection_distance"] = scalar_to_json(input->projection_distance);
  }
  return doc;
}

template <class K>
std::string report_to_text(const ClassificationReport<K>& rep) {
  std::ostringstream os;
  os << "label: " << rep.label << "\n";
  os << std::left << std::setw(6) << "class" << std::setw(9) << "nonzero"
     << std::setw(8) << "charok" << std::setw(24) << "magnitude"
     << "self_ip" << "\n";
  for (int i = 0; i < 11; ++i) {
    os << std::left << std::setw(6) << ("F" + std::to_string(i + 1))
       << std::setw(9) << (rep.flags[i] ? "yes" : "no") << std::setw(8)
       << (rep.characterization_ok[i] ? "ok" : "FAIL") << std::setw(24)
       << format_scalar(rep.magnitudes[i]) << format_scalar(rep.self_ips[i])
       << "\n";
  }
  os << "theta(xi) = " << format_scalar(rep.theta_xi)
     << ", theta*(xi) = " << format_scalar(rep.theta_star_xi) << "\n";
  return os.str();
}

}  // namespace paraclass
