// engelkit: verify commutator-calculus statements about left 3-Engel elements
// on a corpus of finite groups, and symbolically in free nilpotent groups.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "engelkit/claims.hpp"
#include "engelkit/collector.hpp"
#include "engelkit/corpus.hpp"
#include "engelkit/engel.hpp"
#include "engelkit/errors.hpp"
#include "engelkit/exponent.hpp"
#include "engelkit/kernels.hpp"
#include "engelkit/subgroup.hpp"

namespace {

using namespace engelkit;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void describe_group(const FiniteGroup& G) {
  std::cout << G.name() << ": order " << G.order();
  Subgroup whole = whole_group(G);
  auto cls = nilpotency_class(whole);
  auto dl = derived_length(whole);
  std::cout << ", " << (G.is_abelian() ? "abelian" : "non-abelian");
  if (cls)
    std::cout << ", nilpotent of class " << *cls;
  else
    std::cout << ", not nilpotent";
  if (dl)
    std::cout << ", soluble of derived length " << *dl;
  else
    std::cout << ", not soluble";
  std::cout << ", centre of order " << center(G).size() << "\n";
  std::cout << "generators:";
  for (size_t i = 0; i < G.generator_labels().size(); ++i)
    std::cout << " " << G.generator_labels()[i];
  std::cout << "\n";
}

int cmd_check(const std::string& claim, const std::string& group, bool json) {
  const FiniteGroup& G = corpus::by_name(group);
  std::vector<ClaimResult> results{run_claim(claim_by_id(claim).id, G)};
  std::cout << (json ? report_json(results) : report_text(results));
  return report_exit_code(results);
}

int cmd_check_all(const std::string& groups_csv, const std::string& claims_csv, bool json,
                  int jobs) {
  RunOptions opt;
  opt.groups = split_csv(groups_csv);
  opt.claims = split_csv(claims_csv);
  opt.jobs = jobs;
  auto results = run_all(opt);
  std::cout << (json ? report_json(results) : report_text(results));
  return report_exit_code(results);
}

int cmd_engel_set(const std::string& side, int n, const std::string& group) {
  const FiniteGroup& G = corpus::by_name(group);
  EngelSet s = side == "left" ? left_engel_set(G, n) : right_engel_set(G, n);
  std::cout << (side == "left" ? "L_" : "R_") << n << "(" << G.name() << "): "
            << s.members.count() << " element(s)\n";
  s.members.for_each([&](int x) { std::cout << "  " << G.element_word(x) << "\n"; });
  return 0;
}

int cmd_radical(const std::string& kind, const std::string& group) {
  const FiniteGroup& G = corpus::by_name(group);
  Subgroup s = kind == "baer" ? baer_radical(G) : fitting_oracle(G);
  std::cout << kind << " radical of " << G.name() << ": order " << s.size() << "\n";
  std::cout << "generators:";
  if (s.gens.empty()) std::cout << " (trivial)";
  for (int g : s.gens) std::cout << " " << G.element_word(g);
  std::cout << "\n";
  return 0;
}

int cmd_collect(int rank, int cls, const std::string& word) {
  const Collector& C = Collector::get(rank, cls);
  NormalForm nf = C.collect(parse_gen_word(word, rank));
  std::cout << C.to_string(nf) << "\n";
  return 0;
}

int cmd_theorem2(int len, int conj, long long cap) {
  Theorem2Verdict v = theorem2_symbolic(len, conj, cap);
  std::cout << (v.verified ? "Verified" : "Inconclusive") << " (instances: " << v.instances
            << ")\n";
  for (int w = 1; w <= 5; ++w) {
    std::cout << "  weight-" << w << " layer index: ";
    if (v.layer_index[w - 1])
      std::cout << *v.layer_index[w - 1];
    else
      std::cout << "infinite";
    std::cout << "\n";
  }
  return 0;
}

int cmd_eval_expr(const std::string& group, const std::string& base, const std::string& expr,
                  const std::string& env_csv) {
  const FiniteGroup& G = corpus::by_name(group);
  const int u = G.element_by_word(base);
  std::map<char, int> env;
  for (const auto& binding : split_csv(env_csv)) {
    auto eq = binding.find('=');
    if (eq == std::string::npos || eq != 1)
      throw ParseError("env bindings are single letters: label=word");
    env[binding[0]] = G.element_by_word(binding.substr(eq + 1));
  }
  const int r = eval_exponent(G, u, parse_exponent(expr), env);
  std::cout << G.element_word(r) << "\n";
  return 0;
}

int cmd_load(const std::string& cayley, const std::string& perms, const std::string& name) {
  if (cayley.empty() == perms.empty())
    throw ValidationError("usage", "load needs exactly one of --cayley or --perms");
  FiniteGroup G = cayley.empty() ? corpus::load_perm_file(perms, name)
                                 : corpus::load_cayley_file(cayley, name);
  describe_group(G);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for left 3-Engel element computations"};
  app.require_subcommand(1);

  auto* list_groups = app.add_subcommand("list-groups", "list the built-in corpus");
  auto* list_claims = app.add_subcommand("list-claims", "list registered claims");

  std::string claim, group;
  bool json = false;
  auto* check = app.add_subcommand("check", "run one claim on one group");
  check->add_option("--claim", claim, "claim id, e.g. CHK-02")->required();
  check->add_option("--group", group, "corpus group name")->required();
  check->add_flag("--json", json, "emit a JSON report");

  std::string groups_csv, claims_csv;
  bool json_all = false;
  int jobs = 1;
  auto* check_all = app.add_subcommand("check-all", "run claims over the corpus");
  check_all->add_option("--groups", groups_csv, "comma-separated group names");
  check_all->add_option("--claims", claims_csv, "comma-separated claim ids");
  check_all->add_flag("--json", json_all, "emit a JSON report");
  check_all->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

  std::string side = "left", es_group;
  int es_n = 0;
  auto* engel_set = app.add_subcommand("engel-set", "compute L_n or R_n of a group");
  engel_set->add_option("--side", side, "left or right")
      ->check(CLI::IsMember({"left", "right"}))
      ->required();
  engel_set->add_option("--n", es_n, "Engel depth")->required()->check(CLI::Range(0, 16));
  engel_set->add_option("--group", es_group, "corpus group name")->required();

  std::string rad_kind, rad_group;
  auto* radical = app.add_subcommand("radical", "compute the Baer radical or its oracle");
  radical->add_option("--kind", rad_kind, "baer or fitting")
      ->check(CLI::IsMember({"baer", "fitting"}))
      ->required();
  radical->add_option("--group", rad_group, "corpus group name")->required();

  int c_rank = 2, c_cls = 5;
  std::string c_word;
  auto* collect = app.add_subcommand("collect", "normal form in a free nilpotent group");
  collect->add_option("--rank", c_rank, "number of generators")->required()->check(CLI::Range(1, 3));
  collect->add_option("--class", c_cls, "nilpotency class")->required()->check(CLI::Range(1, 5));
  collect->add_option("--word", c_word, "word over a,b,c, e.g. abab^{-1}")->required();

  int t_len = 0, t_conj = 0;
  long long t_cap = 2000000;
  auto* thm2 = app.add_subcommand("theorem2-sym",
                                  "saturate left-3-Engel relators in the free class-5 group");
  thm2->add_option("--instance-len", t_len, "max relator word length")->required();
  thm2->add_option("--conj-len", t_conj, "max conjugator word length")->required();
  thm2->add_option("--max-instances", t_cap, "instance schedule cap");

  std::string ee_group, ee_base, ee_expr, ee_env;
  auto* eval_cmd = app.add_subcommand("eval-expr", "evaluate an exponent expression");
  eval_cmd->add_option("--group", ee_group, "corpus group name")->required();
  eval_cmd->add_option("--base", ee_base, "base element as a generator word")->required();
  eval_cmd->add_option("--expr", ee_expr, "exponent expression, e.g. (g+h)(-k)")->required();
  eval_cmd->add_option("--env", ee_env, "bindings label=word,...");

  std::string ld_cayley, ld_perms, ld_name = "loaded";
  auto* load = app.add_subcommand("load", "load and validate a group file");
  load->add_option("--cayley", ld_cayley, "multiplication table file");
  load->add_option("--perms", ld_perms, "permutation generator file");
  load->add_option("--name", ld_name, "name for the loaded group")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (list_groups->parsed()) {
      for (const auto& g : engelkit::corpus::default_corpus())
        std::cout << g.name() << " (order " << g.order() << ")\n";
      return 0;
    }
    if (list_claims->parsed()) {
      for (const auto& c : engelkit::claim_registry())
        std::cout << c.id << "  [" << c.kind << "]  " << c.statement << "\n";
      return 0;
    }
    if (check->parsed()) return cmd_check(claim, group, json);
    if (check_all->parsed()) return cmd_check_all(groups_csv, claims_csv, json_all, jobs);
    if (engel_set->parsed()) return cmd_engel_set(side, es_n, es_group);
    if (radical->parsed()) return cmd_radical(rad_kind, rad_group);
    if (collect->parsed()) return cmd_collect(c_rank, c_cls, c_word);
    if (thm2->parsed()) return cmd_theorem2(t_len, t_conj, t_cap);
    if (eval_cmd->parsed()) return cmd_eval_expr(ee_group, ee_base, ee_expr, ee_env);
    if (load->parsed()) return cmd_load(ld_cayley, ld_perms, ld_name);
  } catch (const engelkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
