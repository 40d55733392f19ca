#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "braidverify/braid.hpp"
#include "braidverify/fpgroup.hpp"
#include "braidverify/hom_enum.hpp"
#include "braidverify/suites.hpp"

namespace {

int run_verify(const std::string& suite, const braidverify::SuiteParams& params,
               const std::string& json_path) {
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& info : braidverify::list_suites()) names.push_back(info.name);
  } else {
    names.push_back(suite);
  }
  bool all_ok = true;
  std::string json = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    braidverify::Report report = braidverify::run_suite(names[i], params);
    std::cout << report.to_table();
    if (i) json += ",\n";
    json += report.to_json();
    all_ok = all_ok && report.ok();
  }
  json += "]\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << json;
  }
  return all_ok ? 0 : 1;
}

int run_normal_form(int n, const std::string& word) {
  braidverify::BraidWord w = braidverify::BraidWord::parse(n, word);
  braidverify::GarsideForm nf = braidverify::normal_form(w);
  std::cout << "input      " << (w.empty() ? "(empty)" : w.text()) << "\n"
            << "normal     " << nf.to_string() << "\n"
            << "infimum    " << nf.infimum() << "\n"
            << "length     " << nf.canonical_length() << "\n"
            << "supremum   " << nf.supremum() << "\n"
            << "permutation " << braidverify::permutation_of(w).cycle_string()
            << "\n"
            << "trivial    " << (nf.is_trivial() ? "yes" : "no") << "\n";
  return 0;
}

int run_enumerate(int degree, const std::string& source, bool surjective,
                  bool enable_n6) {
  braidverify::Presentation p = [&] {
    if (!std::filesystem::exists(source))
      return braidverify::builtin_presentation(source);
    return braidverify::Presentation::load(source);
  }();
  braidverify::EnumOptions opt;
  opt.allow_degree_6 = enable_n6;
  braidverify::HomClassification cls =
      braidverify::enumerate_homs(p, degree, surjective, opt);
  std::cout << (surjective ? "surjective " : "") << "homomorphism classes into S_"
            << degree << ": " << cls.classes.size() << "\n";
  for (std::size_t i = 0; i < cls.classes.size(); ++i) {
    const auto& c = cls.classes[i];
    std::cout << "class " << i + 1 << " (orbit " << c.orbit_size << "):";
    for (std::size_t g = 0; g < c.representative.size(); ++g)
      std::cout << " " << p.generators[g] << " -> "
                << c.representative.at(g).cycle_string();
    std::cout << "\n";
  }
  std::cout << "total homomorphisms: " << cls.total << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for braid groups and their quotients"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  braidverify::SuiteParams params;
  std::string json_path;
  verify->add_option("suite", suite, "suite name, or 'all'")->required();
  verify->add_option("--n", params.n, "strand count (default: suite grid)");
  verify->add_option("--dmax", params.dmax, "modulus bound for grid suites");
  verify->add_option("--maxlen", params.maxlen, "word length bound");
  verify->add_option("--seed", params.seed, "seed for randomized suites");
  verify->add_option("--json", json_path, "write the reports to this file");
  verify->add_flag("--enable-n6", params.enable_n6,
                   "include the long-running degree-6 searches");

  auto* nf = app.add_subcommand("normal-form", "left-greedy normal form");
  int nf_n = 0;
  std::string nf_word;
  nf->add_option("--n", nf_n, "strand count")->required();
  nf->add_option("--word", nf_word, "signed letters, e.g. \"1 2 -3\"")->required();

  auto* en = app.add_subcommand("enumerate", "classify homomorphisms into S_m");
  int degree = 0;
  std::string pres;
  bool surjective = false, enable_n6 = false;
  en->add_option("--target-degree", degree, "symmetric group degree")->required();
  en->add_option("--presentation", pres,
                 "presentation file, or a builtin name like braid:4")
      ->required();
  en->add_flag("--surjective", surjective, "keep surjections only");
  en->add_flag("--enable-n6", enable_n6, "allow degree 6");

  app.add_subcommand("list-suites", "print the suite catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(suite, params, json_path);
    if (nf->parsed()) return run_normal_form(nf_n, nf_word);
    if (en->parsed()) return run_enumerate(degree, pres, surjective, enable_n6);
    for (const auto& info : braidverify::list_suites())
      std::cout << info.name << "  " << info.description << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
