// Command-line front end: construction, diagram rendering, op application,
// exhaustive search, classification, and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cocyc/bundle.hpp"
#include "cocyc/classify.hpp"
#include "cocyc/diagram.hpp"
#include "cocyc/generators.hpp"
#include "cocyc/group.hpp"
#include "cocyc/hprime.hpp"
#include "cocyc/search.hpp"
#include "cocyc/sign_matrix.hpp"
#include "cocyc/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  int t = 0;
  std::string set_text;
  std::string file;
  std::string op_word;
  std::string group = "hstar";
  std::string out = "-";
  std::string suite = "all";
  int workers = 1;
  bool quotient_v = false;
  bool no_rho = false;
};

int cmd_gen(const Options& opt) {
  const std::vector<int> set = cocyc::parse_index_set(opt.set_text, opt.t);
  const cocyc::SignMatrix m = cocyc::assemble(set, opt.t, !opt.no_rho);
  const bool rowsum = cocyc::hadamard_rowsum(m);
  const bool full = cocyc::hadamard_full(m);
  std::cout << m.to_text();
  std::cout << "hadamard: " << (full ? "yes" : "no") << '\n';
  if (rowsum != full)
    std::cout << "note: row-sum shortcut disagrees (rowsum " << (rowsum ? "yes" : "no") << ")\n";
  return 0;
}

int cmd_diagram(const Options& opt) {
  if (!opt.file.empty()) {
    const cocyc::Diagram d = cocyc::parse_diagram(read_file(opt.file), opt.t);
    std::cout << "set: " << cocyc::format_index_set(cocyc::set_from_diagram(d)) << '\n';
    std::cout << cocyc::render(d);
    return 0;
  }
  const std::vector<int> set = cocyc::parse_index_set(opt.set_text, opt.t);
  std::cout << cocyc::render(cocyc::diagram_from_set(set, opt.t));
  return 0;
}

int cmd_apply(const Options& opt) {
  const std::vector<int> set = cocyc::parse_index_set(opt.set_text, opt.t);
  const auto ops = cocyc::parse_op_word(opt.op_word, opt.t);
  const cocyc::Diagram image = cocyc::apply_op_word(ops, cocyc::diagram_from_set(set, opt.t));
  std::cout << "set: " << cocyc::format_index_set(cocyc::set_from_diagram(image)) << '\n';
  std::cout << cocyc::render(image);
  return 0;
}

int cmd_search(const Options& opt) {
  std::vector<std::vector<int>> hits;
  const cocyc::SearchSummary summary =
      cocyc::search_parallel(opt.t, opt.workers, hits, opt.quotient_v);
  if (opt.out == "-") {
    cocyc::write_hits_file(std::cout, summary, hits);
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
    cocyc::write_hits_file(out, summary, hits);
  }
  std::cerr << "t=" << summary.t << " visited=" << summary.visited << " hits=" << summary.hits
            << " hits_with_index1=" << summary.hits_with_index1 << " seconds=" << summary.seconds
            << (summary.quotient_v ? " (V-canonical classes only)" : "") << '\n';
  if (summary.aborted) {
    std::cerr << "aborted: sink refused input; counts are partial\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const Options& opt) {
  const cocyc::GroupMode mode = cocyc::parse_group_mode(opt.group);
  std::vector<std::vector<int>> sets;
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw std::invalid_argument("cannot open file '" + opt.file + "'");
    sets = cocyc::read_sets_file(in, opt.t);
  } else {
    sets.push_back(cocyc::parse_index_set(opt.set_text, opt.t));
  }
  const auto reports = cocyc::census(sets, mode, opt.t);
  const std::string text = cocyc::format_census(reports);
  if (opt.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.out + "'");
    out << text;
  }
  return 0;
}

int cmd_orbit(const Options& opt) {
  const cocyc::GroupMode mode = cocyc::parse_group_mode(opt.group);
  const std::vector<int> set = cocyc::parse_index_set(opt.set_text, opt.t);
  const cocyc::Diagram d = cocyc::diagram_from_set(set, opt.t);
  const auto members = cocyc::orbit(d, mode, opt.t);
  const bool orth =
      cocyc::hadamard_full(cocyc::assemble(set, opt.t, true));
  std::cout << "orbit_size: " << members.size() << '\n';
  std::cout << "orthogonal: " << (orth ? "yes" : "no") << '\n';
  for (const auto& m : members)
    std::cout << cocyc::format_index_set(cocyc::set_from_diagram(m)) << '\n';
  return 0;
}

int cmd_verify(const Options& opt) {
  const auto results = cocyc::run_suite(opt.suite, opt.t);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << '\n';
    all_ok = all_ok && r.passed;
  }
  std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocyclic matrices over Z_t x Z_2^2: construction, diagrams, search, classification"};
  app.require_subcommand(1);
  Options opt;

  auto add_t = [&opt](CLI::App* cmd) {
    cmd->add_option("--t", opt.t, "odd order parameter t > 1")->required();
  };

  CLI::App* gen = app.add_subcommand("gen", "assemble a cocyclic matrix and test it");
  add_t(gen);
  gen->add_option("--set", opt.set_text, "coboundary index set, e.g. 4,6,9");
  gen->add_flag("--no-rho", opt.no_rho, "omit the rho factor");

  CLI::App* diagram = app.add_subcommand("diagram", "render a set as a grid or parse a grid file");
  add_t(diagram);
  diagram->add_option("--set", opt.set_text, "index set to render");
  diagram->add_option("--file", opt.file, "grid file to parse");

  CLI::App* apply = app.add_subcommand("apply", "apply an op word to a diagram");
  add_t(apply);
  apply->add_option("--set", opt.set_text, "index set");
  apply->add_option("--op", opt.op_word, "ops separated by ';': C2, s12..s34, T:<k>, V:<r>")
      ->required();

  CLI::App* search = app.add_subcommand("search", "exhaustive Hadamard search over all masks");
  add_t(search);
  search->add_option("--out", opt.out, "hits file path, '-' for stdout");
  search->add_option("--workers", opt.workers, "worker threads");
  search->add_flag("--quotient-v", opt.quotient_v, "enumerate V-canonical classes only");

  CLI::App* classify = app.add_subcommand("classify", "census of a hits file by orbit");
  add_t(classify);
  classify->add_option("--file", opt.file, "hits file");
  classify->add_option("--set", opt.set_text, "single index set");
  classify->add_option("--group", opt.group, "hstar or hprime");
  classify->add_option("--out", opt.out, "output path, '-' for stdout");

  CLI::App* orbit = app.add_subcommand("orbit", "orbit of one set under the chosen group");
  add_t(orbit);
  orbit->add_option("--set", opt.set_text, "index set");
  orbit->add_option("--group", opt.group, "hstar or hprime");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  add_t(verify);
  verify->add_option("--suite", opt.suite,
                     "translate, transpose, orders, eq9, crossconstruct, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0, parse errors are usage errors
  }

  try {
    cocyc::require_valid_t(opt.t);
    if (gen->parsed()) return cmd_gen(opt);
    if (diagram->parsed()) return cmd_diagram(opt);
    if (apply->parsed()) return cmd_apply(opt);
    if (search->parsed()) return cmd_search(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (orbit->parsed()) return cmd_orbit(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const cocyc::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
