#pragma once

#include <cstdint>
#include <ostream>

#include "paraclass/classifier.hpp"
#include "paraclass/samples.hpp"

namespace paraclass {

// Property suite behind the `selftest` subcommand: completeness,
// orthogonality, idempotence, equivariance, admissibility closure,
// characterization identities, the kappa normalization oracle, the n=1
// vanishing classes, and the three built-in example families.
template <class K>
bool run_selftest(std::size_t n, std::size_t trials, std::uint64_t seed,
                  std::ostream& log) {
  auto sp = make_standard<K>(n);
  std::size_t failures = 0;
  auto check = [&](bool ok, const char* what, std::size_t trial) {
    if (!ok) {
      ++failures;
      log << "FAIL " << what << " (trial " << trial << ")\n";
    }
  };

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + 1000003ULL * t;
    FTensor<K> f = random_admissible(sp, s);
    check(is_admissible(f), "random tensor admissible", t);

    ComponentDecomposition<K> dec = decompose(f);
    check(dec.residual.is_zero_tensor(), "completeness: sum of components", t);
    for (int i = 0; i < 11; ++i)
      check(is_admissible(dec.components[i]), "component admissible", t);
    for (int i = 0; i < 11; ++i)
      for (int j = i + 1; j < 11; ++j)
        check(is_zero(inner_product(dec.components[i], dec.components[j]),
                      K(0)),
              "orthogonality", t);
    for (int i = 0; i < 11; ++i) {
      if (dec.components[i].is_zero_tensor()) continue;
      check(characterization_check(dec.components[i], i + 1),
            "characterization identity", t);
      ComponentDecomposition<K> again = decompose(dec.components[i]);
      for (int j = 0; j < 11; ++j) {
        if (j == i)
          check(again.components[j] == dec.components[i], "idempotence", t);
        else
          check(again.components[j].is_zero_tensor(), "idempotence", t);
      }
    }
    if (n == 1)
      for (int i : {0, 1, 2, 5})
        check(dec.components[i].is_zero_tensor(), "n=1 vanishing class", t);

    GroupElement<K> a = random_group_element(*sp, s ^ 0x5bd1e995ULL);
    FTensor<K> af = group_action(a, f);
    check(is_zero(inner_product(af, af) - inner_product(f, f), K(0)),
          "inner product invariance", t);
    ComponentDecomposition<K> adec = decompose(af);
    for (int i = 0; i < 11; ++i)
      check(adec.components[i] == group_action(a, dec.components[i]),
            "equivariance", t);
  }

  // kappa oracle: theta of the trace template reproduces 2(n-1) theta, so
  // only 1/(2(n-1)) makes the refinement idempotent.
  if (n >= 2) {
    FTensor<K> f = random_admissible(sp, seed ^ 0x9e3779b9ULL);
    auto [fm1, fm2] = w1_split(p(f, 1));
    Vector<K> th = theta_form(fm1);
    bool th_nonzero = false;
    for (const auto& x : th)
      if (!is_zero(x, K(0))) th_nonzero = true;
    check(th_nonzero, "kappa oracle: generic theta nonzero", 0);
    FTensor<K> tmpl = theta_template(sp, th);
    Vector<K> th_t = theta_form(tmpl);
    bool reproduce = true, alternative = true;
    const K factor = K(static_cast<long>(2 * (n - 1)));
    const K alt = K(static_cast<long>(2 * n));
    for (std::size_t i = 0; i < th.size(); ++i) {
      if (!is_zero(th_t[i] - factor * th[i], K(0))) reproduce = false;
      if (!is_zero(th_t[i] - alt * th[i], K(0))) alternative = false;
    }
    check(reproduce, "kappa oracle: 1/(2(n-1)) idempotent", 0);
    check(!alternative || !th_nonzero, "kappa oracle: 1/(2n) rejected", 0);
    auto [c1, c2] = m3_refine(fm1);
    Vector<K> th2 = theta_form(c2);
    for (const auto& x : th2)
      check(is_zero(x, K(0)), "kappa oracle: refined part theta-free", 0);
  }

  // built-in families (always five-dimensional, independent of n)
  std::uint64_t state = seed ^ 0x2545f4914f6cdd1dULL;
  auto draw = [&]() { return K(static_cast<long>(detail::bounded_int(state, 7))); };
  struct Family {
    const char* name;
    std::vector<std::string> letters;
    const char* label;
  };
  const Family families[] = {
      {"5.1", {"a", "b", "c", "d"}, "F_3"},
      {"5.2", {"a", "b", "c", "d", "e", "f"}, "F_9"},
      {"5.3", {"a", "b"}, "F_10"},
  };
  for (const auto& fam : families) {
    for (int rep = 0; rep < 3; ++rep) {
      ExampleParams<K> params;
      params.name = fam.name;
      bool generic = false;
      for (const auto& l : fam.letters) {
        K val = draw();
        if (!is_zero(val, K(0))) generic = true;
        params.values[l] = val;
      }
      if (!generic) params.values[fam.letters.front()] = K(1);
      auto [esp, ops, f] = example(params);
      ClassificationReport<K> r = classify(f);
      check(r.label == fam.label, "example family label", rep);
    }
  }

  if (failures == 0)
    log << "selftest: all checks passed (n=" << n << ", trials=" << trials
        << ")\n";
  else
    log << "selftest: " << failures << " check(s) failed\n";
  return failures == 0;
}

}  // namespace paraclass
