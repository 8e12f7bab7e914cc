// Acceptance gate: one pass/fail line per criterion.  Usage:
//   acceptance <path-to-cli> <path-to-example-input-json>
#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "paraclass/classifier.hpp"
#include "paraclass/samples.hpp"

using namespace paraclass;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what << "\n";
  if (!ok) ++g_failures;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

struct Corpus {
  StructurePtr<Rat> sp;
  std::vector<FTensor<Rat>> tensors;
  std::vector<ComponentDecomposition<Rat>> decs;
};

Corpus build_corpus(std::size_t n, std::size_t count) {
  Corpus c;
  c.sp = make_standard<Rat>(n);
  for (std::size_t k = 0; k < count; ++k) {
    c.tensors.push_back(random_admissible(c.sp, 1000 * n + k));
    c.decs.push_back(decompose(c.tensors.back()));
  }
  return c;
}

Rat draw_param(std::uint64_t& state) {
  long num = detail::bounded_int(state, 9);
  long den = 1 + std::abs(detail::bounded_int(state, 4));
  Rat v(num, den);
  return v == 0 ? Rat(1) : v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-path> <example-input-json>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string input = argv[2];

  std::array<Corpus, 3> corpora = {build_corpus(1, 100), build_corpus(2, 100),
                                   build_corpus(3, 100)};

  // 1: completeness
  {
    bool ok = true;
    for (const auto& c : corpora)
      for (std::size_t k = 0; k < c.tensors.size(); ++k) {
        FTensor<Rat> sum(c.sp);
        for (const auto& comp : c.decs[k].components) sum = sum + comp;
        ok = ok && (sum == c.tensors[k]) && c.decs[k].residual.is_zero_tensor();
      }
    report(1, "decomposition completeness (100 tensors at n=1,2,3)", ok);
  }

  // 2: orthogonality
  {
    bool ok = true;
    for (const auto& c : corpora)
      for (const auto& dec : c.decs)
        for (int i = 0; i < 11 && ok; ++i)
          for (int j = i + 1; j < 11; ++j)
            if (inner_product(dec.components[i], dec.components[j]) != 0) {
              ok = false;
              break;
            }
    report(2, "pairwise component orthogonality", ok);
  }

  // 3: idempotence
  {
    bool ok = true;
    for (const auto& c : corpora)
      for (std::size_t k = 0; k < c.decs.size() && ok; k += 5)
        for (int i = 0; i < 11 && ok; ++i) {
          const auto& comp = c.decs[k].components[i];
          if (comp.is_zero_tensor()) continue;
          ComponentDecomposition<Rat> again = decompose(comp);
          for (int j = 0; j < 11; ++j) {
            bool want = (j == i);
            if ((again.components[j] == comp) != want ||
                again.components[j].is_zero_tensor() == want) {
              ok = false;
              break;
            }
          }
        }
    report(3, "re-decomposing a component reproduces it alone", ok);
  }

  // 4: equivariance
  {
    bool ok = true;
    for (std::size_t n : {1, 2}) {
      auto sp = make_standard<Rat>(n);
      for (std::uint64_t seed = 1; seed <= 20 && ok; ++seed) {
        GroupElement<Rat> a = random_group_element(*sp, seed);
        FTensor<Rat> f = random_admissible(sp, 555 + seed);
        FTensor<Rat> g = random_admissible(sp, 777 + seed);
        if (inner_product(group_action(a, f), group_action(a, g)) !=
            inner_product(f, g))
          ok = false;
        ComponentDecomposition<Rat> d1 = decompose(f);
        ComponentDecomposition<Rat> d2 = decompose(group_action(a, f));
        for (int i = 0; i < 11; ++i)
          if (d2.components[i] != group_action(a, d1.components[i])) ok = false;
      }
    }
    report(4, "equivariance under 20 group elements at n=1,2", ok);
  }

  // 5: the three example families
  {
    bool ok = true;
    std::uint64_t state = 99;
    struct Family {
      const char* name;
      std::vector<std::string> letters;
      std::string label;
    };
    const Family families[] = {
        {"5.1", {"a", "b", "c", "d"}, "F_3"},
        {"5.2", {"a", "b", "c", "d", "e", "f"}, "F_9"},
        {"5.3", {"a", "b"}, "F_10"},
    };
    for (const auto& fam : families)
      for (int rep = 0; rep < 10 && ok; ++rep) {
        ExampleParams<Rat> p{fam.name, {}};
        for (const auto& l : fam.letters) p.values[l] = draw_param(state);
        auto [sp, ops, f] = example(p);  // 5.1 closed form asserted inside
        if (classify(f).label != fam.label) ok = false;
      }
    report(5, "example families classify as F_3 / F_9 / F_10", ok);
  }

  // 6: n=1 vanishing
  {
    bool ok = true;
    for (const auto& dec : corpora[0].decs)
      for (int i : {0, 1, 2, 5})
        if (!dec.components[i].is_zero_tensor()) ok = false;
    DimensionAudit a1 = dimension_audit<Rat>(1);
    ok = ok && a1.d[0] == 0 && a1.d[1] == 0 && a1.d[2] == 0 && a1.d[5] == 0;
    report(6, "classes 1,2,3,6 vanish at n=1 (components and ranks)", ok);
  }

  // 7: kappa resolution
  {
    bool ok = true;
    for (std::size_t n : {2, 3}) {
      auto sp = make_standard<Rat>(n);
      FTensor<Rat> f = random_admissible(sp, 31337 + n);
      auto [fm1, fm2] = w1_split(p(f, 1));
      Vector<Rat> th = theta_form(fm1);
      bool nonzero = false;
      for (const auto& x : th)
        if (x != 0) nonzero = true;
      if (!nonzero) {
        ok = false;
        continue;
      }
      Vector<Rat> th_t = theta_form(theta_template(sp, th));
      const Rat good(static_cast<long>(2 * (n - 1)));
      const Rat alt(static_cast<long>(2 * n));
      bool reproduces = true, alt_works = true;
      for (std::size_t i = 0; i < th.size(); ++i) {
        if (th_t[i] != good * th[i]) reproduces = false;
        if (th_t[i] != alt * th[i]) alt_works = false;
      }
      ok = ok && reproduces && !alt_works &&
           kappa<Rat>(n) == Rat(1) / good;
    }
    report(7, "kappa uniquely resolved to 1/(2(n-1)) at n=2,3", ok);
  }

  // 8: characterization identities
  {
    bool ok = true;
    for (const auto& c : corpora)
      for (const auto& dec : c.decs)
        for (int i = 0; i < 11; ++i) {
          if (dec.components[i].is_zero_tensor()) continue;
          if (!characterization_check(dec.components[i], i + 1)) ok = false;
        }
    report(8, "every nonzero component passes its identity check", ok);
  }

  // 9: two-oracle dimension agreement
  {
    bool ok = true;
    for (std::size_t n : {1, 2}) {
      DimensionAudit a = dimension_audit<Rat>(n);
      if (a.admissible_dim_nullspace != a.admissible_dim_pi_rank ||
          a.total != a.admissible_dim_nullspace)
        ok = false;
    }
    report(9, "null-space oracle, projection rank, and component ranks agree", ok);
  }

  // 10: byte-deterministic classification of the committed input
  {
    const std::string cmd = cli + " classify --input " + input;
    std::string r1 = run_command(cmd);
    std::string r2 = run_command(cmd);
    std::string r3 = run_command(cmd);
    bool ok = !r1.empty() && r1 == r2 && r2 == r3 &&
              r1.find("\"label\": \"F_9\"") != std::string::npos;
    report(10, "classify is byte-identical across 3 runs", ok);
  }

  return g_failures == 0 ? 0 : 1;
}
