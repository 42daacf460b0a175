#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "diagcat/checks.hpp"
#include "diagcat/csp.hpp"
#include "diagcat/json_io.hpp"

using namespace diagcat;

namespace {

enum Exit { kPass = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct Options {
  int r = -1, s = -1, n = -1, k = -1, p = -1;
  std::string delta, family, format = "json", kind, schur, lambda, mode = "h";
  bool count_only = false, selftest = false;
  int max_degree = 4;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--r", o.r, "size / number of tensor factors");
  app->add_option("--s", o.s, "codomain size");
  app->add_option("--n", o.n, "rank parameter of the group");
  app->add_option("--k", o.k, "symmetric power / block size");
  app->add_option("--p", o.p, "propagating number or first Yang-Baxter label");
  app->add_option("--delta", o.delta, "loop value as num/den");
  app->add_option("--family", o.family, "character or CSP family");
  app->add_option("--format", o.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app->add_option("--kind", o.kind, "object or group kind");
  app->add_option("--schur", o.schur, "partition such as 2,2");
  app->add_option("--lambda", o.lambda, "partition such as 2,1");
  app->add_option("--mode", o.mode, "h or e for sym_multiset")->check(CLI::IsMember({"h", "e"}));
  app->add_option("--max-degree", o.max_degree, "degree cap for series identities");
  app->add_flag("--count-only", o.count_only, "print only the number of objects");
  app->add_flag("--selftest", o.selftest, "run this subcommand's invariant suite");
}

int need(int value, const char* flag) {
  if (value < 0) throw DomainError(std::string("missing or negative ") + flag);
  return value;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part == "()") continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw DomainError("bad partition: " + text);
    }
    if (used != part.size()) throw DomainError("bad partition: " + text);
    if (v != 0) p.push_back(v);
  }
  if (!is_partition(p)) throw DomainError("not a partition: " + text);
  return p;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int emit_report(const Report& rep, const Options& o, const std::string& banner = {}) {
  if (o.format == "json") {
    Json out = {{"checks", to_json(rep)}, {"pass", all_pass(rep)}};
    if (!banner.empty()) out["note"] = banner;
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "check,params,expected,got,pass\n";
    for (const auto& c : rep)
      std::cout << csv_field(c.check) << "," << csv_field(c.params) << "," << csv_field(c.expected) << ","
                << csv_field(c.got) << "," << (c.pass ? "true" : "false") << "\n";
  } else {
    if (!banner.empty()) std::cout << banner << "\n";
    for (const auto& c : rep)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.check << " [" << c.params << "] expected " << c.expected << ", got "
                << c.got << "\n";
  }
  return all_pass(rep) ? kPass : kFailed;
}

template <class T>
int emit_list(const std::vector<T>& items, const Options& o) {
  if (o.count_only) {
    std::cout << items.size() << "\n";
    return kPass;
  }
  Json out = Json::array();
  for (const auto& x : items) out.push_back(to_json(x));
  if (o.format == "pretty") {
    for (const auto& x : out) std::cout << x.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "index,object\n";
    for (std::size_t i = 0; i < out.size(); ++i) std::cout << i << "," << csv_field(out[i].dump()) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return kPass;
}

int run_enumerate(const Options& o) {
  const std::string& kind = o.kind;
  if (kind == "matchings") return emit_list(enumerate_matchings(need(o.r, "--r")), o);
  if (kind == "noncrossing") return emit_list(enumerate_noncrossing(need(o.r, "--r"), need(o.n, "--n")), o);
  if (kind == "brauer") return emit_list(enumerate_brauer(need(o.r, "--r"), need(o.s, "--s")), o);
  if (kind == "setpartitions") return emit_list(enumerate_setpartitions(need(o.r, "--r"), o.n < 0 ? o.r : o.n), o);
  if (kind == "partition") return emit_list(enumerate_partition_diagrams(need(o.r, "--r"), need(o.s, "--s")), o);
  if (kind == "regular")
    return emit_list(enumerate_regular_diagrams(need(o.r, "--r"), need(o.n, "--n"), need(o.k, "--k")), o);
  if (kind == "directed") return emit_list(enumerate_directed(need(o.r, "--r"), need(o.s, "--s")), o);
  if (kind == "permutations") return emit_list(enumerate_permutations(need(o.r, "--r")), o);
  if (kind == "partitions") {
    PartitionFilter f;
    if (o.n >= 0) f.max_length = o.n;
    return emit_list(enumerate_partitions(need(o.r, "--r"), f), o);
  }
  if (kind == "tableaux") {
    return emit_list(standard_tableaux(parse_partition(o.schur.empty() ? o.lambda : o.schur)), o);
  }
  if (kind == "oscillating") {
    int n = need(o.n, "--n"), r = need(o.r, "--r");
    Partition final_shape = parse_partition(o.lambda);
    if (o.count_only) {
      std::cout << count_oscillating(n, r, final_shape).get_str() << "\n";
      return kPass;
    }
    Json out = Json::array();
    for (const auto& t : enumerate_oscillating(n, r, final_shape)) out.push_back(t);
    std::cout << (o.format == "json" ? out.dump(2) : out.dump()) << "\n";
    return kPass;
  }
  throw DomainError("enumerate --kind must be one of matchings, noncrossing, brauer, setpartitions, partition, "
                    "regular, directed, permutations, partitions, tableaux, oscillating");
}

FamilyParams family_params(const Options& o) {
  return {std::max(o.r, 0), std::max(o.n, 0), std::max(o.k, 0), o.mode[0]};
}

int run_character(const Options& o) {
  if (o.family.empty()) throw DomainError("character needs --family");
  need(o.r, "--r");
  SymFunc ch = invariant_character(o.family, family_params(o));
  int degree = 0;
  for (const auto& [key, c] : ch.terms()) degree = partition_size(key[0]);
  Json schur_terms = Json::array();
  for (const auto& [lambda, c] : p_to_schur(ch, degree)) schur_terms.push_back({{"lambda", lambda}, {"coeff", to_string(c)}});
  if (o.format == "json") {
    Json out = {{"family", o.family}, {"terms", to_json(ch)}, {"schur", schur_terms}};
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "basis,index,coeff\n";
    for (const auto& [key, c] : ch.terms()) std::cout << "p," << csv_field(Json(key[0]).dump()) << "," << to_string(c) << "\n";
    for (const auto& t : schur_terms) std::cout << "s," << csv_field(t["lambda"].dump()) << "," << t["coeff"].get<std::string>() << "\n";
  } else {
    std::cout << ch.to_string() << "\n";
  }
  return kPass;
}

int run_fakedegree(const Options& o) {
  QPoly fd;
  if (!o.schur.empty()) fd = fake_degree_schur(parse_partition(o.schur));
  else if (!o.family.empty()) fd = fake_degree(invariant_character(o.family, family_params(o)));
  else throw DomainError("fakedegree needs --schur or --family");
  if (o.format == "pretty") std::cout << fd.to_string() << "\n";
  else if (o.format == "csv") {
    std::cout << "exponent,coeff\n";
    for (int e = 0; e <= fd.degree(); ++e) std::cout << e << "," << to_string(fd.coeff(e)) << "\n";
  } else {
    std::cout << to_json(fd).dump() << "\n";
  }
  return kPass;
}

int run_csp(const Options& o) {
  if (o.family.empty()) throw DomainError("csp-verify needs --family");
  auto inst = build_instance(o.family, family_params(o));
  auto verdict = verify(inst);
  Json out = to_json(inst, verdict);
  if (o.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "family,set_size,polynomial,reduced_polynomial,chi,pass\n"
              << inst.family << "," << inst.set_size << "," << csv_field(inst.polynomial.to_string()) << ","
              << csv_field(verdict.reduced.to_string()) << "," << csv_field(verdict.chi.to_string()) << ","
              << (inst.asserted ? (verdict.pass ? "true" : "false") : "n/a") << "\n";
  } else {
    std::cout << inst.family << ": P = " << inst.polynomial.to_string() << "\n";
    if (inst.asserted) {
      std::cout << "|X| = " << inst.set_size << ", chi = " << verdict.chi.to_string()
                << ", P mod q^" << inst.order << "-1 = " << verdict.reduced.to_string() << "\n"
                << (verdict.pass ? "PASS" : "FAIL") << "\n";
    } else {
      std::cout << "not asserted: no permutation set is claimed for this variant\n";
    }
  }
  return verdict.pass ? kPass : kFailed;
}

Evaluator make_evaluator(const Options& o) {
  int n = need(o.n, "--n");
  if (o.kind == "sp") return Evaluator::symplectic(n);
  if (o.kind == "sn") return Evaluator::symmetric(n);
  if (o.kind == "gl") return Evaluator::general_linear(n);
  throw DomainError("--kind must be sp, sn or gl");
}

int run_fft_sft(const Options& o) {
  if (o.kind == "sympower") return emit_report(sym_power_basis_check(need(o.n, "--n"), need(o.r, "--r"), need(o.k, "--k")), o);
  Evaluator e = make_evaluator(o);
  return emit_report(fundamental_theorem_checks(e, need(o.r, "--r"), o.s < 0 ? 0 : o.s), o);
}

int run_idempotent(const Options& o) {
  if (o.kind == "brauer") return emit_report(brauer_idempotent_check(need(o.n, "--n")), o);
  if (o.kind == "partition") {
    if (o.delta.empty()) throw DomainError("partition idempotents need --delta");
    return emit_report(partition_idempotent_check(need(o.r, "--r"), parse_rational(o.delta)), o,
                       "conjecture: numerical evidence only");
  }
  if (o.kind == "yang-baxter") {
    if (o.delta.empty()) throw DomainError("yang-baxter needs --delta");
    return emit_report(yang_baxter_check(need(o.p, "--p"), need(o.k, "--k"), parse_rational(o.delta)), o);
  }
  throw DomainError("idempotent --kind must be brauer, partition or yang-baxter");
}

int run_branching(const Options& o) {
  std::optional<Partition> lambda;
  if (!o.lambda.empty()) lambda = parse_partition(o.lambda);
  if (o.kind == "brauer" || o.kind.empty()) return emit_report(brauer_branching_check(need(o.r, "--r"), lambda), o);
  if (o.kind == "partition") return emit_report(partition_branching_check(need(o.r, "--r"), lambda), o);
  throw DomainError("branching --kind must be brauer or partition");
}

int run_relations(const Options& o) {
  Evaluator e = make_evaluator(o);
  Report rep = relation_test_suite(e);
  Report more = functoriality_check(e, 100);
  rep.insert(rep.end(), more.begin(), more.end());
  return emit_report(rep, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with diagram categories, invariant theory and cyclic sieving"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, int (*)(const Options&)>> commands{
      {"enumerate", run_enumerate},   {"character", run_character}, {"fakedegree", run_fakedegree},
      {"csp-verify", run_csp},        {"fft-sft", run_fft_sft},     {"idempotent", run_idempotent},
      {"branching", run_branching},   {"relations", run_relations}};
  for (const auto& [name, fn] : commands) add_common(app.add_subcommand(name), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    for (const auto& [name, fn] : commands) {
      if (!app.got_subcommand(name)) continue;
      if (o.selftest) return emit_report(selftest(name), o);
      return fn(o);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
