#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "paraclass/io.hpp"
#include "paraclass/samples.hpp"
#include "paraclass/selftest.hpp"

namespace {

using namespace paraclass;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return doc;
}

template <class K>
int do_classify(const json& doc, bool admit, const K& tol,
                const std::string& report_format) {
  ParsedInput<K> in = parse_input<K>(doc, admit, tol);
  ClassificationReport<K> rep = classify(in.f, tol);
  std::ostringstream out;
  if (report_format == "text")
    out << report_to_text(rep);
  else
    out << report_to_json(rep, &in).dump(2) << "\n";
  std::cout << out.str();
  return 0;
}

template <class K>
int do_decompose(const json& doc, const K& tol, const std::string& out_path) {
  ParsedInput<K> in = parse_input<K>(doc, false, tol);
  ComponentDecomposition<K> dec = decompose(in.f, tol);
  json components = json::array();
  for (const auto& c : dec.components) components.push_back(tensor_document(c));
  json out;
  out["components"] = components;
  out["residual"] = tensor_document(dec.residual);
  std::ofstream os(out_path);
  if (!os) throw ValidationError("cannot open output file: " + out_path);
  os << out.dump(2) << "\n";
  return 0;
}

std::map<std::string, Rat> parse_params(const std::string& text) {
  std::map<std::string, Rat> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ValidationError("--params entries must look like k=v");
    std::string key = item.substr(0, eq);
    values[key] = parse_rational(item.substr(eq + 1));
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eleven-class decomposition of almost paracontact structures"};
  app.require_subcommand(1);

  std::string input_path, output_path, params_text, example_name;
  std::string report_format = "json";
  bool admit = false;
  double tol = 1e-9;
  std::size_t n = 2, trials = 20;
  std::uint64_t seed = 1;

  auto* classify_cmd = app.add_subcommand("classify", "classify a tensor document");
  classify_cmd->add_option("--input", input_path)->required();
  classify_cmd->add_option("--tol", tol);
  classify_cmd->add_flag("--admit", admit);
  classify_cmd->add_option("--report", report_format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* decompose_cmd =
      app.add_subcommand("decompose", "write the eleven components of a tensor");
  decompose_cmd->add_option("--input", input_path)->required();
  decompose_cmd->add_option("--output", output_path)->required();
  decompose_cmd->add_option("--tol", tol);

  auto* example_cmd = app.add_subcommand("example", "classify a built-in family");
  example_cmd->add_option("--name", example_name)
      ->required()
      ->check(CLI::IsMember({"5.1", "5.2", "5.3"}));
  example_cmd->add_option("--params", params_text)->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
  selftest_cmd->add_option("--n", n)->required();
  selftest_cmd->add_option("--trials", trials)->required();
  selftest_cmd->add_option("--seed", seed);

  auto* dims_cmd = app.add_subcommand("dims", "print the component rank audit");
  dims_cmd->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed() || decompose_cmd->parsed()) {
      json doc = load_json(input_path);
      const bool exact =
          !doc.is_object() || doc.value("scalars", "rational") == "rational";
      if (classify_cmd->parsed())
        return exact ? do_classify<Rat>(doc, admit, Rat(0), report_format)
                     : do_classify<double>(doc, admit, tol, report_format);
      return exact ? do_decompose<Rat>(doc, Rat(0), output_path)
                   : do_decompose<double>(doc, tol, output_path);
    }
    if (example_cmd->parsed()) {
      ExampleParams<Rat> params;
      params.name = example_name;
      params.values = parse_params(params_text);
      auto [sp, ops, f] = example(params);
      ClassificationReport<Rat> rep = classify(f);
      std::cout << report_to_json<Rat>(rep).dump(2) << "\n";
      return 0;
    }
    if (selftest_cmd->parsed())
      return run_selftest<Rat>(n, trials, seed, std::cout) ? 0 : 1;
    if (dims_cmd->parsed()) {
      DimensionAudit audit = dimension_audit<Rat>(n);
      std::ostringstream out;
      for (int i = 0; i < 11; ++i)
        out << "d" << (i + 1) << " = " << audit.d[i] << "\n";
      out << "total = " << audit.total << "\n";
      out << "admissible dimension (null-space oracle) = "
          << audit.admissible_dim_nullspace << "\n";
      out << "admissible dimension (projection rank) = "
          << audit.admissible_dim_pi_rank << "\n";
      std::cout << out.str();
      return 0;
    }
  } catch (const paraclass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
