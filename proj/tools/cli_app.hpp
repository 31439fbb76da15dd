#pragma once

// The omc command line: validate / kappa / reorient / delta / blocking / gen,
// plus --corpus and --version. Every run writes one JSON document to `out`.
//
// Exit codes: 0 success, 1 methods disagree or a corpus criterion failed,
// 2 usage or validation error, 3 budget exceeded.

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "omc/acceptance.hpp"
#include "omc/omc.hpp"

namespace omc::cli {

using nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kDisagree = 1, kInvalid = 2, kBudget = 3 };

struct RunConfig {
  std::string file;
  std::string canonical_name;
  std::string method;
  std::string ell;
  bool opposite_free = false;
  std::uint64_t budget = 0;  // 0: library defaults
  unsigned threads = 1;
  std::string out_path;
  std::string element_set;
  int a = 0;
  int k = 0;
  int m = 0;
  std::string r = "0";
  std::string antichain_path;
  int sweep = 0;
  std::uint64_t seed = 1;
  std::string arrangement_path;
  std::string generator = "fm";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ordered_json dec(const Integer& v) { return v.str(); }
inline ordered_json dec(long long v) { return std::to_string(v); }

inline ordered_json vector_json(const KappaVector& v) {
  ordered_json arr = ordered_json::array();
  for (const Integer& c : v.counts()) arr.push_back(c.str());
  return arr;
}

inline Budget budget_of(const RunConfig& cfg) {
  Budget b;
  if (cfg.budget != 0) b.max_nodes = b.max_elements = cfg.budget;
  return b;
}

inline TopeSet load_topes(const RunConfig& cfg) {
  if (!cfg.file.empty()) return read_topes(cfg.file);
  if (!cfg.canonical_name.empty()) return canonical(cfg.canonical_name);
  throw UsageError("one of --file or --canonical is required");
}

inline ordered_json header(const TopeSet& m) {
  ordered_json j;
  j["t"] = dec(m.ground_size());
  j["topes"] = dec(m.size());
  return j;
}

inline std::vector<int> parse_element_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0) throw Error(ErrorKind::BadSymbol, "'" + token + "' is not an element index");
    out.push_back(v);
  }
  return out;
}

inline std::vector<BLElement> read_antichain(const std::string& path, int m) {
  std::vector<BLElement> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(BLElement::parse(m, line));
  }
  return out;
}

struct MethodCounts {
  std::optional<KappaVector> general;
  std::optional<KappaVector> ring;
  std::uint64_t terms = 0;
};

inline MethodCounts counts_by(const std::string& method, const TopeSet& m, const RunConfig& cfg, Ell ell) {
  MethodCounts out;
  const Budget budget = budget_of(cfg);
  if (method == "brute") {
    if (!cfg.opposite_free) out.general = kappa_star(m, false, cfg.threads);
    out.ring = kappa_star(m, true, cfg.threads);
    return out;
  }
  std::vector<Integer> general, ring;
  for (int k = 1; k <= m.half_size(); ++k) {
    SumResult g, r;
    if (method == "ie") {
      if (!cfg.opposite_free) g = count_committees_ie(m, k, ell, budget);
      r = count_ring_ie(m, k, budget);
    } else {
      if (!cfg.opposite_free) g = count_committees_moebius(m, k, budget);
      r = count_ring_moebius(m, k, budget);
    }
    general.push_back(g.value);
    ring.push_back(r.value);
    out.terms += g.terms + r.terms;
  }
  if (!cfg.opposite_free) out.general = KappaVector(Variant::General, std::move(general));
  out.ring = KappaVector(Variant::OppositeFree, std::move(ring));
  return out;
}

inline void put_counts(ordered_json& j, const MethodCounts& c, bool with_terms) {
  if (c.general) j["kappa"] = vector_json(*c.general);
  if (c.ring) j["kappa_opposite_free"] = vector_json(*c.ring);
  if (with_terms) j["terms_evaluated"] = std::to_string(c.terms);
}

}  // namespace detail

inline int cmd_validate(const RunConfig& cfg, ordered_json& j) {
  const TopeSet m = detail::load_topes(cfg);
  j["valid"] = true;
  j.update(detail::header(m));
  j["acyclic"] = is_acyclic(m);
  return kOk;
}

inline int cmd_kappa(const RunConfig& cfg, ordered_json& j) {
  const std::string method = cfg.method.empty() ? "brute" : cfg.method;
  if (!cfg.ell.empty() && method != "ie" && method != "all")
    throw UsageError("--ell applies to --method ie or all only");
  const Ell ell = cfg.ell == "complement" ? Ell::Complement : Ell::K;
  const TopeSet m = detail::load_topes(cfg);
  j.update(detail::header(m));
  j["method"] = method;
  if (method == "brute") {
    detail::put_counts(j, detail::counts_by("brute", m, cfg, ell), false);
    return kOk;
  }
  if (method == "ie" || method == "moebius") {
    j["ell"] = method == "ie" ? std::string(ell_name(ell)) : "complement";
    detail::put_counts(j, detail::counts_by(method, m, cfg, ell), true);
    return kOk;
  }
  j["ell"] = std::string(ell_name(ell));
  const auto brute = detail::counts_by("brute", m, cfg, ell);
  const auto ie = detail::counts_by("ie", m, cfg, ell);
  const auto moebius = detail::counts_by("moebius", m, cfg, ell);
  ordered_json jb, ji, jm;
  detail::put_counts(jb, brute, false);
  detail::put_counts(ji, ie, true);
  detail::put_counts(jm, moebius, true);
  j["brute"] = jb;
  j["ie"] = ji;
  j["moebius"] = jm;
  detail::put_counts(j, brute, false);
  const bool agree = brute.general == ie.general && brute.general == moebius.general && brute.ring == ie.ring &&
                     brute.ring == moebius.ring;
  j["agree"] = agree;
  return agree ? kOk : kDisagree;
}

inline int cmd_reorient(const RunConfig& cfg, ordered_json& j) {
  const TopeSet m = detail::load_topes(cfg);
  const std::vector<int> elements = detail::parse_element_list(cfg.element_set);
  const TopeSet flipped = reorient(m, elements);
  if (!cfg.out_path.empty()) write_topes(flipped, cfg.out_path);
  j.update(detail::header(flipped));
  ordered_json set = ordered_json::array();
  for (int e : elements) set.push_back(std::to_string(e));
  j["reoriented_on"] = set;
  j["acyclic"] = is_acyclic(flipped);
  ordered_json list = ordered_json::array();
  for (const Tope& t : flipped.topes()) list.push_back(t.str());
  j["tope_list"] = list;
  return kOk;
}

inline int cmd_delta(const RunConfig& cfg, ordered_json& j) {
  const std::string method = cfg.method.empty() ? "all" : cfg.method;
  const TopeSet m = detail::load_topes(cfg);
  const DeltaRequest req{m, cfg.a, cfg.k, cfg.opposite_free ? Variant::OppositeFree : Variant::General};
  req.validate();
  const Budget budget = detail::budget_of(cfg);
  j.update(detail::header(m));
  j["a"] = detail::dec(cfg.a);
  j["k"] = detail::dec(cfg.k);
  j["variant"] = std::string(variant_name(req.variant));
  j["method"] = method;
  if (method != "all") {
    const DeltaMethod dm = method == "ie" ? DeltaMethod::Ie : method == "moebius" ? DeltaMethod::Moebius : DeltaMethod::Direct;
    const SumResult r = delta(req, dm, budget);
    j[method] = r.value.str();
    j["delta"] = r.value.str();
    return kOk;
  }
  const Integer ie = delta_ie(req, budget).value;
  const Integer moebius = delta_moebius(req, budget).value;
  const Integer direct = delta_direct(req).value;
  j["ie"] = ie.str();
  j["moebius"] = moebius.str();
  j["direct"] = direct.str();
  const bool agree = ie == direct && moebius == direct;
  j["agree"] = agree;
  return agree ? kOk : kDisagree;
}

inline int cmd_blocking(const RunConfig& cfg, ordered_json& j) {
  const Budget budget = detail::budget_of(cfg);
  if (cfg.sweep > 0) {
    std::mt19937_64 rng(cfg.seed);
    const Rational thresholds[] = {Rational(0, 1), Rational(1, 3), Rational(1, 2)};
    int disagreements = 0;
    for (int c = 0; c < cfg.sweep; ++c) {
      const int m = std::uniform_int_distribution<int>(1, 4)(rng);
      const int k = std::uniform_int_distribution<int>(1, m)(rng);
      const Rational r = thresholds[c % 3];
      const auto lambda = acceptance::random_antichain(rng, m, r, k);
      const Integer brute = relative_blocking_brute(m, r, k, lambda);
      if (relative_blocking_ie(m, r, k, lambda, budget).value != brute ||
          relative_blocking_moebius(m, r, k, lambda, budget).value != brute)
        ++disagreements;
    }
    j["cases"] = detail::dec(cfg.sweep);
    j["seed"] = std::to_string(cfg.seed);
    j["disagreements"] = detail::dec(disagreements);
    j["agree"] = disagreements == 0;
    return disagreements == 0 ? kOk : kDisagree;
  }
  const Rational r = Rational::parse(cfg.r);
  const auto lambda = detail::read_antichain(cfg.antichain_path, cfg.m);
  const Integer brute = relative_blocking_brute(cfg.m, r, cfg.k, lambda);
  const Integer ie = relative_blocking_ie(cfg.m, r, cfg.k, lambda, budget).value;
  const Integer moebius = relative_blocking_moebius(cfg.m, r, cfg.k, lambda, budget).value;
  j["m"] = detail::dec(cfg.m);
  j["k"] = detail::dec(cfg.k);
  j["r"] = r.str();
  ordered_json list = ordered_json::array();
  for (const auto& l : lambda) list.push_back(l.str());
  j["antichain"] = list;
  j["brute"] = brute.str();
  j["ie"] = ie.str();
  j["moebius"] = moebius.str();
  const bool agree = ie == brute && moebius == brute;
  j["agree"] = agree;
  return agree ? kOk : kDisagree;
}

inline int cmd_gen(const RunConfig& cfg, ordered_json& j) {
  Arrangement arr;
  if (!cfg.arrangement_path.empty())
    arr = read_arrangement(cfg.arrangement_path);
  else if (!cfg.canonical_name.empty())
    arr = catalog_entry(cfg.canonical_name).arrangement;
  else
    throw UsageError("one of --arrangement or --canonical is required");
  const TopeSet m = cfg.generator == "angular" ? topes_of_planar_arrangement(arr) : topes_of_arrangement(arr);
  if (!cfg.out_path.empty()) write_topes(m, cfg.out_path);
  j.update(detail::header(m));
  j["generator"] = cfg.generator;
  ordered_json list = ordered_json::array();
  for (const Tope& t : m.topes()) list.push_back(t.str());
  j["tope_list"] = list;
  return kOk;
}

inline int cmd_corpus(ordered_json& j) {
  bool all = true;
  ordered_json rows = ordered_json::array();
  for (const auto& r : acceptance::run_all()) {
    ordered_json row;
    row["id"] = std::to_string(r.id);
    row["name"] = r.name;
    row["passed"] = r.passed;
    std::ostringstream secs;
    secs << r.seconds;
    row["seconds"] = secs.str();
    row["detail"] = r.detail;
    rows.push_back(row);
    all = all && r.passed;
  }
  j["criteria"] = rows;
  ordered_json obs = ordered_json::array();
  for (const auto& c : acceptance::observe_blocking_correspondence()) {
    ordered_json o;
    o["instance"] = c.instance;
    o["k"] = std::to_string(c.k);
    o["opposite_free"] = c.ring.str();
    o["relative_blocking"] = c.blocking.str();
    obs.push_back(o);
  }
  j["blocking_correspondence"] = obs;
  j["all_passed"] = all;
  return all ? kOk : kDisagree;
}

/// Parses argv, runs one subcommand and writes its JSON to `out`.
inline int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Tope committee counts of simple oriented matroids"};
  app.set_version_flag("");
  RunConfig cfg;
  bool corpus = false, version = false;
  app.add_flag("--corpus", corpus, "Run the acceptance corpus and print a pass/fail table");
  app.add_flag("--version", version, "Print artifact and format versions");
  app.add_option("--threads", cfg.threads, "Worker cap for exhaustive enumeration")->check(CLI::Range(1u, 256u));
  app.require_subcommand(0, 1);

  auto add_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("--file", cfg.file, "Tope file");
    auto* c = sub->add_option("--canonical", cfg.canonical_name, "Catalog instance name");
    f->excludes(c);
    c->excludes(f);
  };

  auto* validate = app.add_subcommand("validate", "Validate a tope file");
  add_input(validate);

  auto* kappa = app.add_subcommand("kappa", "Committee count vectors");
  add_input(kappa);
  kappa->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "ie", "moebius", "all"}));
  kappa->add_option("--ell", cfg.ell)->check(CLI::IsMember({"k", "complement"}));
  kappa->add_flag("--opposite-free", cfg.opposite_free);
  kappa->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);

  auto* reorient_cmd = app.add_subcommand("reorient", "Reorient on a set of elements");
  add_input(reorient_cmd);
  reorient_cmd->add_option("--set", cfg.element_set, "Comma-separated 1-based elements")->required();
  reorient_cmd->add_option("--out", cfg.out_path);

  auto* delta_cmd = app.add_subcommand("delta", "Change of a count under a one-element reorientation");
  add_input(delta_cmd);
  delta_cmd->add_option("--a", cfg.a)->required();
  delta_cmd->add_option("--k", cfg.k)->required();
  delta_cmd->add_flag("--opposite-free", cfg.opposite_free);
  delta_cmd->add_option("--method", cfg.method)->check(CLI::IsMember({"ie", "moebius", "direct", "all"}));
  delta_cmd->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);

  auto* blocking = app.add_subcommand("blocking", "Relatively r-blocking elements of B(2m)");
  auto* m_opt = blocking->add_option("--m", cfg.m);
  auto* k_opt = blocking->add_option("--k", cfg.k);
  blocking->add_option("--r", cfg.r, "Threshold P/Q");
  blocking->add_option("--antichain", cfg.antichain_path, "One element per line, e.g. 1,-2,3");
  auto* sweep = blocking->add_option("--sweep", cfg.sweep, "Run N seeded random cases instead");
  blocking->add_option("--seed", cfg.seed);
  blocking->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  sweep->excludes(m_opt);
  sweep->excludes(k_opt);

  auto* gen = app.add_subcommand("gen", "Topes of a central arrangement");
  auto* arr_opt = gen->add_option("--arrangement", cfg.arrangement_path);
  auto* can_opt = gen->add_option("--canonical", cfg.canonical_name);
  arr_opt->excludes(can_opt);
  can_opt->excludes(arr_opt);
  gen->add_option("--generator", cfg.generator)->check(CLI::IsMember({"fm", "angular"}));
  gen->add_option("--out", cfg.out_path);

  ordered_json j = ordered_json::object();
  int code = kOk;
  auto fail = [&](std::string_view kind, const std::string& message, int exit_code) {
    j = ordered_json::object();
    j["error_kind"] = std::string(kind);
    j["message"] = message;
    code = exit_code;
  };
  try {
    app.parse(argc, argv);
    if (version) {
      j["version"] = kVersion;
      j["tope_format"] = std::to_string(kTopeFormatVersion);
    } else if (corpus) {
      code = cmd_corpus(j);
    } else if (validate->parsed()) {
      code = cmd_validate(cfg, j);
    } else if (kappa->parsed()) {
      code = cmd_kappa(cfg, j);
    } else if (reorient_cmd->parsed()) {
      code = cmd_reorient(cfg, j);
    } else if (delta_cmd->parsed()) {
      code = cmd_delta(cfg, j);
    } else if (blocking->parsed()) {
      if (cfg.sweep == 0 && (cfg.m == 0 || cfg.k == 0)) throw UsageError("blocking needs --m and --k, or --sweep");
      code = cmd_blocking(cfg, j);
    } else if (gen->parsed()) {
      code = cmd_gen(cfg, j);
    } else {
      throw UsageError("a subcommand, --corpus or --version is required");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    fail("UsageError", e.what(), kInvalid);
  } catch (const UsageError& e) {
    fail("UsageError", e.what(), kInvalid);
  } catch (const Error& e) {
    fail(kind_name(e.kind()), e.what(), e.kind() == ErrorKind::BudgetExceeded ? kBudget : kInvalid);
  }
  out << j.dump(2) << '\n';
  return code;
}

}  // namespace omc::cli
