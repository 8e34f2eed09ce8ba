#include "cocyc/verify.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "cocyc/bundle.hpp"
#include "cocyc/diagram.hpp"
#include "cocyc/generators.hpp"
#include "cocyc/group.hpp"
#include "cocyc/hprime.hpp"
#include "cocyc/sign_matrix.hpp"

namespace cocyc {

namespace {

constexpr uint64_t kSeed = 0x5eed5eed5eedull;

std::vector<std::vector<int>> sample_sets(int t, int count, std::mt19937_64& rng) {
  std::vector<std::vector<int>> out;
  out.reserve(count);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < count; ++i) {
    std::vector<int> s;
    for (int d = 1; d <= 4 * t; ++d)
      if (bit(rng)) s.push_back(d);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<int>> all_sets(int t) {
  std::vector<std::vector<int>> out;
  const int n = 4 * t;
  out.reserve(1ull << n);
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> s;
    for (int d = 1; d <= n; ++d)
      if (mask >> (d - 1) & 1) s.push_back(d);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<int>> suite_sets(int t, int sample_count) {
  if (t == 3) return all_sets(t);
  std::mt19937_64 rng(kSeed + t);
  return sample_sets(t, sample_count, rng);
}

std::vector<std::pair<std::string, BundleElement>> generator_families(int t) {
  std::vector<std::pair<std::string, BundleElement>> gens;
  gens.emplace_back("shift x", h_shift(g_x()));
  gens.emplace_back("shift u", h_shift(g_u()));
  gens.emplace_back("shift v", h_shift(g_v()));
  for (int r : units_mod(t))
    gens.emplace_back("aut h_r r=" + std::to_string(r), h_aut(aut_hr(r, t)));
  gens.emplace_back("aut h_23", h_aut(aut_h23()));
  gens.emplace_back("aut h_243", h_aut(aut_h243()));
  return gens;
}

CheckResult check_translate_family(int t, const std::string& name, const BundleElement& h,
                                   const std::vector<std::vector<int>>& sets) {
  CheckResult res{"translate " + name + " t=" + std::to_string(t), true, ""};
  long long failures = 0;
  for (const auto& s : sets)
    if (!verify_translation(t, h, s)) ++failures;
  if (failures) {
    res.passed = false;
    res.detail = std::to_string(failures) + "/" + std::to_string(sets.size()) + " sets disagree";
  } else {
    res.detail = std::to_string(sets.size()) + " sets";
  }
  return res;
}

std::vector<CheckResult> suite_translate(int t) {
  const auto sets = suite_sets(t, 200);
  std::vector<CheckResult> out;
  for (const auto& [name, h] : generator_families(t))
    out.push_back(check_translate_family(t, name, h, sets));
  return out;
}

std::vector<CheckResult> suite_transpose(int t) {
  const auto sets = suite_sets(t, 200);
  long long failures = 0;
  for (const auto& s : sets) {
    const Diagram d = diagram_from_set(s, t);
    const SignMatrix lhs = assemble(set_from_diagram(op_complement(d)), t, true);
    const SignMatrix rhs = transpose(assemble(s, t, true));
    if (!(lhs == rhs)) ++failures;
  }
  CheckResult res{"transpose t=" + std::to_string(t), failures == 0,
                  failures ? std::to_string(failures) + " sets disagree"
                           : std::to_string(sets.size()) + " sets"};
  return {res};
}

std::vector<CheckResult> suite_orders(int t) {
  std::vector<CheckResult> out;
  const long long expect_h = 24ll * t * euler_phi(t);
  const long long expect_hp = 48ll * t * euler_phi(t);

  const auto hs = h_enumerate(t);
  {
    std::set<std::pair<std::pair<int, int>, std::pair<int, std::array<uint8_t, 4>>>> distinct;
    for (const auto& h : hs)
      distinct.insert({{h.shift.a, h.shift.o}, {h.aut.r, h.aut.sigma}});
    out.push_back({"order of H t=" + std::to_string(t),
                   static_cast<long long>(distinct.size()) == expect_h,
                   std::to_string(distinct.size()) + " distinct, expected " +
                       std::to_string(expect_h)});
  }
  const auto hps = hp_enumerate(t);
  out.push_back({"order of H' t=" + std::to_string(t),
                 static_cast<long long>(hps.size()) == expect_hp,
                 std::to_string(hps.size()) + " normal forms, expected " +
                     std::to_string(expect_hp)});

  // Closure under composition: exhaustive pair table at t = 3, sampled above.
  {
    std::set<std::vector<int>> keys;
    for (const auto& h : hs)
      keys.insert({h.shift.a, h.shift.o, h.aut.r, h.aut.sigma[1], h.aut.sigma[2], h.aut.sigma[3]});
    auto key = [](const BundleElement& h) {
      return std::vector<int>{h.shift.a, h.shift.o, h.aut.r, h.aut.sigma[1], h.aut.sigma[2],
                              h.aut.sigma[3]};
    };
    bool closed = true;
    if (t == 3) {
      for (const auto& h1 : hs)
        for (const auto& h2 : hs)
          if (!keys.count(key(h_compose(h1, h2, t)))) closed = false;
    } else {
      std::mt19937_64 rng(kSeed);
      std::uniform_int_distribution<size_t> pick(0, hs.size() - 1);
      for (int i = 0; i < 2000; ++i)
        if (!keys.count(key(h_compose(hs[pick(rng)], hs[pick(rng)], t)))) closed = false;
    }
    out.push_back({"H closed under composition t=" + std::to_string(t), closed,
                   t == 3 ? "all pairs" : "2000 random pairs"});
  }
  {
    std::set<std::vector<int>> keys;
    for (const auto& e : hps)
      keys.insert({e.eps, e.pi[0], e.pi[1], e.pi[2], e.pi[3], e.k, e.r});
    auto key = [](const HPrimeElement& e) {
      return std::vector<int>{e.eps, e.pi[0], e.pi[1], e.pi[2], e.pi[3], e.k, e.r};
    };
    bool closed = true;
    if (t == 3) {
      for (const auto& e1 : hps)
        for (const auto& e2 : hps)
          if (!keys.count(key(hp_compose(e1, e2, t)))) closed = false;
    } else {
      std::mt19937_64 rng(kSeed);
      std::uniform_int_distribution<size_t> pick(0, hps.size() - 1);
      for (int i = 0; i < 2000; ++i)
        if (!keys.count(key(hp_compose(hps[pick(rng)], hps[pick(rng)], t)))) closed = false;
    }
    out.push_back({"H' closed under composition t=" + std::to_string(t), closed,
                   t == 3 ? "all pairs" : "2000 random pairs"});
  }
  return out;
}

std::vector<CheckResult> suite_eq9(int t) {
  std::vector<CheckResult> out;
  const SignMatrix k = k_matrix(t);
  const char* names[3] = {"class 2", "class 3", "class 0"};
  const int residues[3] = {2, 3, 0};
  for (int c = 0; c < 3; ++c) {
    SignMatrix prod(4 * t);
    for (int j = 0; j < t; ++j) {
      const int d = residues[c] == 0 ? 4 * j + 4 : 4 * j + residues[c];
      prod.hprod_inplace(delta_matrix(d, t));
    }
    out.push_back({std::string("delta product over ") + names[c] + " equals K t=" +
                       std::to_string(t),
                   prod == k, ""});
  }
  // Class 1 behaves differently: its product times the class-2 product is
  // the all-minus matrix, not J.
  SignMatrix p1(4 * t);
  for (int j = 0; j < t; ++j) p1.hprod_inplace(delta_matrix(4 * j + 1, t));
  SignMatrix combined = hprod(p1, k);
  out.push_back({"class 1 product differs (product with class 2 is -J) t=" + std::to_string(t),
                 combined == negated(SignMatrix(4 * t)), ""});
  return out;
}

std::vector<CheckResult> suite_crossconstruct(int t) {
  long long failures = 0;
  for (int i = 1; i <= 4 * t; ++i) {
    SignMatrix d = delta_matrix(i, t);
    d.negate_row(i - 1);
    d.negate_col(i - 1);
    if (!(d == block_gen_matrix(i, t))) ++failures;
  }
  return {{"block generators equal negated deltas t=" + std::to_string(t), failures == 0,
           failures ? std::to_string(failures) + " indices disagree"
                    : std::to_string(4 * t) + " indices"}};
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"translate", "transpose", "orders", "eq9", "crossconstruct", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, int t) {
  require_valid_t(t);
  if (suite == "translate") return suite_translate(t);
  if (suite == "transpose") return suite_transpose(t);
  if (suite == "orders") return suite_orders(t);
  if (suite == "eq9") return suite_eq9(t);
  if (suite == "crossconstruct") return suite_crossconstruct(t);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : {"translate", "transpose", "orders", "eq9", "crossconstruct"}) {
      auto part = run_suite(name, t);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace cocyc
