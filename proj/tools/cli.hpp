#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sigma0/verify.hpp"

namespace sigma0::cli {

/// Exit statuses: every check passed or was skipped, some check failed, bad input.
enum Exit : int { ok = 0, failed = 1, usage = 2 };

struct RunConfig {
  std::string catalog_path;
  std::string corpus_path;
  std::optional<std::string> budget_text;
  bool det = false;
  unsigned threads = 1;
  std::string format = "table";
  bool human = false;

  std::optional<unsigned> n, max;
  std::string class_text;
  std::string family;
  std::string mode = "lattice";
  std::string target; // group ref, check id or instance path
};

namespace detail {

/// 3175200 -> 3,175,200; leaves anything that is not a plain digit string alone.
inline std::string group_digits(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return s;
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i && (s.size() - i) % 3 == 0) out += ',';
    out += s[i];
  }
  return out;
}

class Context {
public:
  explicit Context(const RunConfig& c) : cfg(c), fmt(parse_format(c.format)) {
    if (c.budget_text) budget = parse_budget(*c.budget_text);
    budget.threads = c.threads;
    budget.deterministic = c.det || c.threads <= 1;
    budget.validate();
  }

  const PrimitiveCatalog& catalog() {
    if (!catalog_)
      catalog_ = cfg.catalog_path.empty() ? PrimitiveCatalog::shipped() : PrimitiveCatalog::load(cfg.catalog_path);
    return *catalog_;
  }

  const std::vector<CorpusEntry>& corpus() {
    if (!corpus_) corpus_ = load_corpus(cfg.corpus_path.empty() ? shipped_corpus_path() : cfg.corpus_path);
    return *corpus_;
  }

  std::string num(const std::string& s) const { return cfg.human && fmt == OutputFormat::table ? group_digits(s) : s; }

  /// One record in the chosen format; the table form prints "key: value" lines.
  void emit(std::ostream& out, const nlohmann::ordered_json& rec) const {
    switch (fmt) {
    case OutputFormat::jsonl: out << rec.dump() << '\n'; break;
    case OutputFormat::csv: {
      std::string head, row;
      for (const auto& [k, v] : rec.items()) {
        head += (head.empty() ? "" : ",") + k;
        row += (row.empty() ? "" : ",") + sigma0::detail::csv_field(v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << head << '\n' << row << '\n';
      break;
    }
    case OutputFormat::table:
      for (const auto& [k, v] : rec.items()) {
        std::string text;
        if (v.is_string())
          text = num(v.get<std::string>());
        else if (v.is_array())
          for (const auto& x : v) text += (text.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
        else
          text = v.dump();
        out << k << ": " << text << '\n';
      }
      break;
    }
  }

  const RunConfig& cfg;
  OutputFormat fmt;
  Budget budget;

private:
  std::optional<PrimitiveCatalog> catalog_;
  std::optional<std::vector<CorpusEntry>> corpus_;
};

inline unsigned symmetric_degree(const std::string& ref) {
  if (ref.size() < 2 || ref[0] != 'S' || ref.find_first_not_of("0123456789", 1) != std::string::npos)
    throw precondition_error("--class needs a symmetric group Sn, got '" + ref + "'");
  return static_cast<unsigned>(std::stoul(ref.substr(1)));
}

inline void put_solution(nlohmann::ordered_json& rec, const CoverSolution& sol, std::size_t lb) {
  rec["status"] = to_string(sol.status);
  if (sol.status == CoverStatus::infinite) {
    rec["value"] = "inf";
  } else if (sol.status == CoverStatus::optimal) {
    rec["value"] = std::to_string(sol.size());
  } else if (sol.status == CoverStatus::upper_bound_only) {
    rec["low"] = std::to_string(lb);
    rec["high"] = std::to_string(sol.size());
  }
  rec["nodes"] = std::to_string(sol.nodes);
}

inline int cmd_sigma0(Context& ctx, std::ostream& out) {
  const auto& cfg = ctx.cfg;
  nlohmann::ordered_json rec;
  rec["group"] = cfg.target;
  if (!cfg.class_text.empty()) {
    const unsigned n = symmetric_degree(cfg.target);
    auto lambda = Partition::parse(cfg.class_text);
    if (lambda.n() > n) throw precondition_error("class " + lambda.str() + " is larger than the degree");
    lambda = lambda.padded_to(n);
    const auto ci = class_cover_instance(n, lambda, maximal_families(n, ctx.catalog()));
    const auto warm = family_warm_start(ci);
    const auto sol = solve_exact(ci.instance, ctx.budget, warm.sets);
    const auto lb = std::max(sol.lower_bound, lower_bound(ci.instance));
    rec["class"] = lambda.str();
    rec["universe"] = std::to_string(ci.instance.universe);
    rec["sets"] = std::to_string(ci.instance.sets.size());
    put_solution(rec, sol, lb);
    if (!warm.sets.empty()) rec["family cover"] = std::to_string(warm.sets.size()) + " (" + warm.family + ")";
    rec["assumed maximality"] = ci.assumed_maximality;
    std::vector<std::string> labels;
    for (auto s : sol.chosen) labels.push_back(ci.instance.sets[s].label);
    rec["cover"] = labels;
    ctx.emit(out, rec);
    return ok;
  }
  const auto g = group_by_ref(cfg.target, ctx.corpus());
  MaximalMode mode;
  if (cfg.mode == "lattice")
    mode = MaximalMode::lattice;
  else if (cfg.mode == "catalog")
    mode = MaximalMode::catalog;
  else
    throw precondition_error("--mode must be lattice or catalog");
  const PrimitiveCatalog* cat = mode == MaximalMode::catalog ? &ctx.catalog() : nullptr;
  const auto sol = sigma0_exact(g, mode, cat, ctx.budget);
  rec["order"] = std::to_string(g.size());
  rec["mode"] = cfg.mode;
  put_solution(rec, sol, sol.lower_bound);
  rec["assumed maximality"] = sol.assumed_maximality;
  if (sol.finite()) {
    const auto subs = mode == MaximalMode::catalog ? catalog_maximal_subgroups(g, *cat) : lattice_maximal_subgroups(g);
    std::vector<std::string> labels;
    for (auto s : sol.chosen) labels.push_back(subs[s].label);
    rec["cover"] = labels;
  }
  ctx.emit(out, rec);
  return ok;
}

inline int cmd_verify(Context& ctx, std::ostream& out) {
  const auto& cfg = ctx.cfg;
  CheckParams p;
  p.n = cfg.n;
  p.max = cfg.max;
  p.budget = ctx.budget;
  p.heavy = cfg.budget_text.has_value();
  if (cfg.target != "all" && !find_check(cfg.target)) throw precondition_error("unknown check '" + cfg.target + "'");
  p.catalog = &ctx.catalog();
  p.corpus = &ctx.corpus();
  const auto reports = run_check(cfg.target, p);
  write_reports(out, reports, ctx.fmt);
  for (const auto& r : reports)
    if (r.verdict == Verdict::fail) return failed;
  return ok;
}

inline int cmd_count(Context& ctx, std::ostream& out) {
  const auto& cfg = ctx.cfg;
  if (!cfg.n) throw precondition_error("count needs --n");
  const unsigned n = *cfg.n;
  auto lambda = Partition::parse(cfg.class_text);
  if (lambda.n() > n) throw precondition_error("class " + lambda.str() + " is larger than n");
  lambda = lambda.padded_to(n);
  const auto spec = parse_family(cfg.family, n, &ctx.catalog());
  Nat value;
  std::string method;
  switch (spec.kind) {
  case FamilyKind::alternating:
    value = intersect_alt(lambda);
    method = "even permutations of the class";
    break;
  case FamilyKind::set_stab:
    value = intersect_setstab(lambda, spec.size);
    method = "sub-multisets of the cycle type summing to m";
    break;
  case FamilyKind::block_stab:
    if (2 * spec.size == n) {
      if (const auto why = blockstab_half_violation(lambda); !why.empty())
        throw precondition_error("half-block formula does not apply: " + why);
      value = intersect_blockstab_half(lambda);
      method = "half-block formula |class| 2^(k-1) / index";
    } else {
      value = brute_intersection(family_members(spec).front(), lambda);
      method = "brute force over the class";
    }
    break;
  case FamilyKind::primitive:
    value = sigma0::detail::exact_primitive_count(*spec.entry, lambda);
    method = "enumeration of the catalogued group";
    break;
  }
  nlohmann::ordered_json rec;
  rec["n"] = std::to_string(n);
  rec["family"] = spec.label();
  rec["class"] = lambda.str();
  rec["count"] = value.str();
  rec["class size"] = class_size(lambda).str();
  rec["method"] = method;
  ctx.emit(out, rec);
  return ok;
}

inline int cmd_table(Context& ctx, std::ostream& out) {
  write_table(out, reproduce_theorem_table(ctx.cfg.max.value_or(64)), ctx.fmt);
  return ok;
}

inline int cmd_solve(Context& ctx, std::ostream& out) {
  std::ifstream in(ctx.cfg.target);
  if (!in) throw parse_error("cannot open instance file " + ctx.cfg.target);
  const auto inst = CoverInstance::load(in);
  const auto sol = solve_exact(inst, ctx.budget);
  nlohmann::ordered_json rec;
  rec["instance"] = ctx.cfg.target;
  rec["universe"] = std::to_string(inst.universe);
  rec["sets"] = std::to_string(inst.sets.size());
  put_solution(rec, sol, sol.lower_bound);
  std::vector<std::string> labels;
  for (auto s : sol.chosen) labels.push_back(inst.sets[s].label);
  rec["cover"] = labels;
  ctx.emit(out, rec);
  return ok;
}

inline int cmd_list(Context& ctx, std::ostream& out) {
  for (const auto& e : ctx.corpus()) {
    nlohmann::ordered_json rec;
    rec["kind"] = "corpus";
    rec["name"] = e.name;
    rec["degree"] = e.degree;
    rec["order"] = std::to_string(e.build().size());
    ctx.emit(out, rec);
  }
  for (unsigned n = 1; n <= Perm::kMaxDegree; ++n)
    for (const auto& e : ctx.catalog().entries_for(n)) {
      nlohmann::ordered_json rec;
      rec["kind"] = "primitive";
      rec["name"] = e->name;
      rec["degree"] = e->n;
      rec["order"] = e->order.str();
      rec["maximality"] = e->maximality == Maximality::verified ? "verified" : "assumed";
      ctx.emit(out, rec);
    }
  return ok;
}

} // namespace detail

/// Parses argv and runs one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Primary covering numbers of symmetric groups: exact solves and checks"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--catalog", cfg.catalog_path, "primitive catalog file")->check(CLI::ExistingFile);
  app.add_option("--corpus", cfg.corpus_path, "group corpus file")->check(CLI::ExistingFile);
  app.add_option("--budget", cfg.budget_text, "solver budget: 90s, 10m, 24h or 200000n; enables heavy checks");
  app.add_flag("--det", cfg.det, "single-threaded deterministic search");
  app.add_option("--threads", cfg.threads, "solver threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", cfg.format, "table, csv or jsonl")->check(CLI::IsMember({"table", "csv", "jsonl"}));
  app.add_flag("--human", cfg.human, "thousands separators in table output");

  auto* s0 = app.add_subcommand("sigma0", "primary covering number of a group, or of one class of S_n");
  s0->add_option("group", cfg.target, "Sn, An, Cn or a corpus name")->required();
  s0->add_option("--class", cfg.class_text, "cover only this class of S_n, e.g. 4,4,2");
  s0->add_option("--mode", cfg.mode, "lattice or catalog")->check(CLI::IsMember({"lattice", "catalog"}));

  auto* ver = app.add_subcommand("verify", "run a check, or all of them");
  ver->add_option("check", cfg.target, "check id or all")->required();
  ver->add_option("--n", cfg.n, "degree");
  ver->add_option("--max", cfg.max, "upper end of the range");

  auto* cnt = app.add_subcommand("count", "members of a class inside one member of a family");
  cnt->add_option("--n", cfg.n, "degree")->required();
  cnt->add_option("--family", cfg.family, "A, X<m>, W<d> or a catalog name")->required();
  cnt->add_option("--class", cfg.class_text, "cycle type, e.g. 8,4,2")->required();

  auto* tab = app.add_subcommand("table", "sigma_0(S_n) by degree");
  tab->add_option("--max", cfg.max, "largest degree (<= 64)");

  auto* sol = app.add_subcommand("solve", "exact set cover of an instance dump");
  sol->add_option("instance", cfg.target, "instance file")->required()->check(CLI::ExistingFile);

  auto* lst = app.add_subcommand("list", "corpus groups and catalogued primitive groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  try {
    detail::Context ctx(cfg);
    if (*s0) return detail::cmd_sigma0(ctx, out);
    if (*ver) return detail::cmd_verify(ctx, out);
    if (*cnt) return detail::cmd_count(ctx, out);
    if (*tab) return detail::cmd_table(ctx, out);
    if (*sol) return detail::cmd_solve(ctx, out);
    if (*lst) return detail::cmd_list(ctx, out);
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

} // namespace sigma0::cli
