#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "stanley/bounds.hpp"
#include "stanley/certificate_io.hpp"
#include "stanley/engine.hpp"
#include "stanley/errors.hpp"
#include "stanley/ideal_io.hpp"

namespace stanley::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct PosetFlags {
  std::string ideal;
  std::string quotient;
  std::vector<std::string> pair;

  void attach(CLI::App& cmd) {
    cmd.add_option("--ideal", ideal, "poset P_I of an ideal file");
    cmd.add_option("--quotient", quotient, "poset P_{S/I} of an ideal file");
    cmd.add_option("--pair", pair, "poset P_{J/I}: files for J then I")->expected(2);
  }

  bool given() const { return !ideal.empty() || !quotient.empty() || !pair.empty(); }

  PosetSource source() const {
    const int count = int(!ideal.empty()) + int(!quotient.empty()) + int(!pair.empty());
    if (count != 1) throw InputError("give exactly one of --ideal, --quotient, --pair");
    if (!ideal.empty()) return {PosetKind::ideal, ideal, std::nullopt};
    if (!quotient.empty()) return {PosetKind::quotient, quotient, std::nullopt};
    return {PosetKind::pair, pair[0], pair[1]};
  }
};

struct SearchFlags {
  double timeout_s = 0.0;
  int workers = 1;
  std::string strategy = "lowest";
  bool hall = false;
  bool level_counts = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--timeout", timeout_s, "wall-clock budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
    cmd.add_option("--workers", workers, "search threads")->check(CLI::PositiveNumber);
    cmd.add_option("--strategy", strategy, "branching rule")->check(CLI::IsMember({"lowest", "fewest"}));
    cmd.add_flag("--hall", hall, "per-node Hall-condition pruning");
    cmd.add_flag("--level-count-prune", level_counts, "per-node alpha recurrence on uncovered counts");
  }

  SearchOptions options() const {
    SearchOptions o;
    o.rule = strategy == "fewest" ? BranchRule::fewest_options : BranchRule::lowest_level;
    o.hall_check = hall;
    o.level_count_prune = level_counts;
    o.workers = workers;
    if (timeout_s > 0) o.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0));
    return o;
  }
};

BoundTarget load_target(const PosetSource& src) {
  BoundTarget target;
  target.kind = src.kind;
  target.ideal = read_ideal_file(src.ideal_file);
  if (src.kind == PosetKind::pair) {
    target.smaller = read_ideal_file(*src.ideal2_file);
    if (target.smaller->num_vars() != target.ideal.num_vars()) throw InputError("J and I live in different rings");
  }
  return target;
}

void require_squarefree(const BoundTarget& target) {
  const bool ok = target.ideal.is_squarefree() && (!target.smaller || target.smaller->is_squarefree());
  if (!ok) {
    throw InputError(
        "poset methods need squarefree generators; use --bounds-only for the generator-count bounds");
  }
}

std::string value_string(const SdepthResult& r) {
  if (r.infinite) return "infinite";
  if (!r.conclusive) return "[" + std::to_string(r.value) + ", " + (r.upper ? std::to_string(*r.upper) : "?") + "]";
  return std::to_string(r.value);
}

void print_bounds_text(std::ostream& out, const BoundReport& report) {
  out << "target: " << report.target << "\n";
  for (const auto& b : report.lower_bounds) {
    out << "  lower " << b.value;
    if (b.raw != b.value) out << " (raw " << b.raw << ")";
    out << "  [" << b.provenance << "]\n";
  }
  for (const auto& b : report.upper_bounds) out << "  upper " << b.value << "  [" << b.provenance << "]\n";
  if (report.exact) out << "  exact " << report.exact->value << "  [" << report.exact->provenance << "]\n";
  if (report.depth_formula) {
    out << "  depth " << report.depth_formula->value << "  [" << report.depth_formula->provenance << "]\n";
  }
  if (report.stanley_conjecture) out << "  sdepth >= depth: " << (*report.stanley_conjecture ? "yes" : "no") << "\n";
}

// ---------------------------------------------------------------- gen

int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& output,
            std::ostream& out) {
  auto int_param = [&](std::size_t i) {
    if (i >= params.size()) throw InputError("gen " + family + ": missing parameter");
    try {
      std::size_t used = 0;
      const int v = std::stoi(params[i], &used);
      if (used != params[i].size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw InputError("gen " + family + ": bad integer '" + params[i] + "'");
    }
  };
  MonomialIdeal ideal;
  std::size_t expected = 1;
  if (family == "line") {
    ideal = line_ideal(int_param(0));
  } else if (family == "cycle") {
    ideal = cycle_ideal(int_param(0));
  } else if (family == "veronese") {
    ideal = veronese_ideal(int_param(0), int_param(1));
    expected = 2;
  } else if (family == "file") {
    if (params.empty()) throw InputError("gen file: missing path");
    ideal = read_ideal_file(params[0]);
  } else {
    throw InputError("unknown family '" + family + "' (line, cycle, veronese, file)");
  }
  if (params.size() != expected) throw InputError("gen " + family + ": expected " + std::to_string(expected) + " parameter(s)");
  if (output.empty()) {
    out << format_ideal(ideal);
  } else {
    write_ideal_file(output, ideal);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sdepth

struct SdepthFlags {
  PosetFlags poset;
  SearchFlags search;
  bool exact = false;
  bool bounds_only = false;
  bool no_hint = false;
  std::string certificate;
  std::string format = "text";
};

int cmd_sdepth(const SdepthFlags& flags, std::ostream& out) {
  const PosetSource src = flags.poset.source();
  const BoundTarget target = load_target(src);
  const BoundReport report = bound_report(target);

  if (flags.bounds_only) {
    if (flags.format == "json") {
      out << json{{"bounds", report.to_json()}}.dump(2) << "\n";
    } else {
      print_bounds_text(out, report);
    }
    return kExitOk;
  }

  require_squarefree(target);
  const SubsetPoset poset = poset_of_target(target);
  std::optional<int> hint;
  if (!flags.no_hint) hint = report.best_lower();
  const SdepthResult result = sdepth_exact(poset, flags.search.options(), hint);

  if (!flags.certificate.empty() && result.conclusive) {
    PartitionCertificate cert = result.certificate.value_or(PartitionCertificate{poset.num_vars(), {}, std::nullopt});
    write_certificate_file(flags.certificate, CertificateDocument{src, cert});
  }

  if (flags.format == "json") {
    json j;
    j["target"] = report.target;
    j["sdepth"] = sdepth_result_to_json(result);
    j["bounds"] = report.to_json();
    j["certificate"] = flags.certificate.empty() || !result.conclusive ? json(nullptr) : json(flags.certificate);
    out << j.dump(2) << "\n";
  } else {
    print_bounds_text(out, report);
    out << "sdepth: " << value_string(result) << (result.conclusive ? "" : " (inconclusive: budget exhausted)") << "\n";
    if (result.refutation_k) out << "refuted at k = " << *result.refutation_k << "\n";
    out << "stats: " << result.stats.to_json().dump() << "\n";
    if (!flags.certificate.empty() && result.conclusive) out << "certificate: " << flags.certificate << "\n";
  }
  return result.conclusive ? kExitOk : kExitInconclusive;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const PosetFlags& poset_flags, const std::string& cert_path, const std::string& format,
               std::ostream& out, std::ostream& err) {
  const CertificateDocument doc = read_certificate_file(cert_path);
  PosetSource src = poset_flags.given() ? poset_flags.source() : doc.source;
  if (!poset_flags.given()) {
    // Certificate-relative paths are resolved against the certificate's directory.
    const fs::path base = fs::path(cert_path).parent_path();
    auto resolve = [&](const std::string& p) {
      return fs::exists(p) || base.empty() ? p : (base / p).string();
    };
    src.ideal_file = resolve(src.ideal_file);
    if (src.ideal2_file) src.ideal2_file = resolve(*src.ideal2_file);
  }
  const BoundTarget target = load_target(src);
  require_squarefree(target);
  const SubsetPoset poset = poset_of_target(target);
  const auto violation = verify_partition(poset, doc.certificate);

  if (format == "json") {
    json j{{"valid", !violation}};
    j["violation"] = violation ? json{{"kind", to_string(violation->kind)},
                                      {"witness", mask_elements(violation->witness)},
                                      {"interval", violation->interval_index}}
                               : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << (violation ? "invalid" : "valid") << "\n";
  }
  if (violation) {
    err << "certificate rejected: " << violation->describe() << "\n";
    return kExitInvalidCertificate;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- alpha

int cmd_alpha(const PosetFlags& poset_flags, int k, const std::string& format, std::ostream& out) {
  const BoundTarget target = load_target(poset_flags.source());
  require_squarefree(target);
  const SubsetPoset poset = poset_of_target(target);
  const auto& beta = poset.level_counts();
  if (k < 0 || k > poset.num_vars()) throw InputError("k must lie in [0, n]");
  const AlphaTest test = alpha_test(beta, k);

  if (format == "json") {
    std::vector<std::size_t> beta_k(beta.begin(), beta.begin() + k + 1);
    out << json{{"k", k}, {"beta", beta_k}, {"alpha", test.alpha}, {"pass", test.pass}}.dump(2) << "\n";
    return kExitOk;
  }
  out << " t  beta_t  alpha_t\n";
  for (int t = 0; t <= k; ++t) {
    out << std::setw(2) << t << "  " << std::setw(6) << beta[static_cast<std::size_t>(t)] << "  " << std::setw(7)
        << test.alpha[static_cast<std::size_t>(t)] << "\n";
  }
  out << "alpha-test at k = " << k << ": " << (test.pass ? "pass" : "fail (sdepth < k)") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- poset

int cmd_poset(const PosetFlags& poset_flags, const std::string& format, std::ostream& out) {
  const BoundTarget target = load_target(poset_flags.source());
  require_squarefree(target);
  const SubsetPoset poset = poset_of_target(target);
  const auto maximal = poset.maximal_members();
  json j{{"n", poset.num_vars()}, {"size", poset.size()}, {"level_counts", poset.level_counts()},
         {"maximal_members", maximal.size()}};
  if (!poset.empty()) {
    j["empty_cut_bound"] = empty_cut_bound(poset);
    j["alpha_bound"] = alpha_upper_bound(poset);
  }
  if (format == "json") {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "n = " << poset.num_vars() << ", |P| = " << poset.size() << "\nlevel counts:";
  for (auto c : poset.level_counts()) out << " " << c;
  out << "\nmaximal members: " << maximal.size() << "\n";
  if (!poset.empty()) {
    out << "empty-cut bound: " << j["empty_cut_bound"] << "\nalpha-test bound: " << j["alpha_bound"] << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- paper

struct PaperRow {
  std::string quantity;
  std::string paper;
  std::string computed;
  bool agree = false;
  std::string note;
};

int engine_value(const SubsetPoset& poset, const SearchOptions& options, bool& conclusive) {
  const SdepthResult r = sdepth_exact(poset, options);
  conclusive = conclusive && r.conclusive;
  if (r.certificate && verify_partition(poset, *r.certificate)) return -1;  // never expected
  return r.value;
}

std::vector<PaperRow> paper_rows(bool include_slow, const SearchOptions& options, bool& conclusive) {
  std::vector<PaperRow> rows;
  auto add_int = [&](std::string q, int paper, int computed, std::string note = {}) {
    rows.push_back({std::move(q), std::to_string(paper), std::to_string(computed), paper == computed, std::move(note)});
  };
  for (int n = 3; n <= 12; ++n) {
    add_int("sdepth(S/I_" + std::to_string(n) + ")", sdepth_line_quotient(n),
            engine_value(poset_of_quotient(line_ideal(n)), options, conclusive), "Lemma 1.6");
  }
  for (int n : {3, 5, 6, 8, 9, 11, 12}) {
    add_int("sdepth(S/J_" + std::to_string(n) + ")", *sdepth_cycle_quotient_bracket(n).exact,
            engine_value(poset_of_quotient(cycle_ideal(n)), options, conclusive), "Thm 1.9(1)");
  }
  std::vector<std::pair<int, int>> remark = {{4, 1}, {7, 2}, {10, 4}};
  if (include_slow) remark.emplace_back(13, 5);
  for (auto [n, v] : remark) {
    add_int("sdepth(S/J_" + std::to_string(n) + ")", v,
            engine_value(poset_of_quotient(cycle_ideal(n)), options, conclusive), "Remark 1.11");
  }
  for (int n = 3; n <= 10; ++n) {
    add_int("sdepth(J_" + std::to_string(n) + "/I_" + std::to_string(n) + ")", sdepth_cycle_mod_line(n),
            engine_value(poset_of_ideal_quotient(cycle_ideal(n), line_ideal(n)), options, conclusive), "Prop 1.10");
  }
  const SubsetPoset c7 = poset_of_quotient(cycle_ideal(7));
  const std::int64_t beta_paper[] = {1, 7, 14, 7};
  for (int t = 0; t <= 3; ++t) {
    const auto enumerated = static_cast<std::int64_t>(c7.level_counts()[static_cast<std::size_t>(t)]);
    const bool closed_ok = cycle_beta_closed(7, t) == enumerated;
    rows.push_back({"beta(7," + std::to_string(t) + ")", std::to_string(beta_paper[t]), std::to_string(enumerated),
                    enumerated == beta_paper[t] && closed_ok, "Example 2.5"});
  }
  const AlphaTest alpha = alpha_test(c7.level_counts(), 3);
  const std::int64_t alpha_paper[] = {1, 4, 2, -1};
  for (int t = 0; t <= 3; ++t) {
    const std::int64_t computed = alpha.alpha[static_cast<std::size_t>(t)];
    PaperRow row{"alpha(7,3," + std::to_string(t) + ")", std::to_string(alpha_paper[t]), std::to_string(computed),
                 computed == alpha_paper[t], "Example 2.5"};
    if (t == 2) {
      // The printed 2 contradicts the recurrence; 14 - C(3,2)*1 - C(2,1)*4 = 3.
      row.agree = computed == 3;
      row.note = "Example 2.5 prints 2; the recurrence gives 14 - 3*1 - 2*4 = 3, the only value consistent with alpha_3 = -1";
    }
    rows.push_back(std::move(row));
  }
  rows.push_back({"alpha-test(S/J_7, k=3)", "fail", alpha.pass ? "pass" : "fail", !alpha.pass, "Example 2.5"});
  return rows;
}

int cmd_paper(bool include_slow, const SearchOptions& options, const std::string& format, std::ostream& out) {
  bool conclusive = true;
  const auto rows = paper_rows(include_slow, options, conclusive);
  bool all = conclusive;
  for (const auto& r : rows) all = all && r.agree;

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"quantity", r.quantity}, {"paper", r.paper}, {"computed", r.computed},
                     {"agree", r.agree}, {"source", r.note}});
    }
    out << json{{"rows", arr}, {"all_agree", all}}.dump(2) << "\n";
  } else {
    out << std::left << std::setw(26) << "quantity" << std::setw(8) << "paper" << std::setw(10) << "computed"
        << "agree\n";
    std::vector<std::string> footnotes;
    for (const auto& r : rows) {
      std::string mark = r.agree ? "yes" : "NO";
      if (r.note.find("prints") != std::string::npos) {
        footnotes.push_back(r.note);
        mark += " [" + std::to_string(footnotes.size()) + "]";
      }
      out << std::left << std::setw(26) << r.quantity << std::setw(8) << r.paper << std::setw(10) << r.computed
          << mark << "\n";
    }
    for (std::size_t i = 0; i < footnotes.size(); ++i) out << "[" << i + 1 << "] " << footnotes[i] << "\n";
    out << (all ? "all rows reproduced" : "REGRESSION: some rows disagree") << "\n";
  }
  return all ? kExitOk : kExitRegression;
}

// ---------------------------------------------------------------- conjecture

int cmd_conjecture(const std::vector<int>& ns, const SearchOptions& options, const std::string& cert_dir,
                   const std::string& format, std::ostream& out) {
  for (int n : ns) {
    if (n < 10 || n % 3 != 1) throw InputError("conjecture instances need n >= 10 with n = 1 mod 3, got " + std::to_string(n));
  }
  if (!cert_dir.empty()) fs::create_directories(cert_dir);
  bool any_inconclusive = false;
  json verdicts = json::array();
  for (int n : ns) {
    const int target_k = (n + 2) / 3;
    const MonomialIdeal ideal = cycle_ideal(n);
    const SubsetPoset poset = poset_of_quotient(ideal);
    const Decision d = decide_at_least(poset, target_k, options);
    std::string verdict;
    std::string cert_path;
    switch (d.outcome) {
      case Outcome::success: {
        verdict = "confirmed";
        if (!cert_dir.empty()) {
          const std::string ideal_name = "J" + std::to_string(n) + ".ideal";
          write_ideal_file(fs::path(cert_dir) / ideal_name, ideal);
          cert_path = (fs::path(cert_dir) / ("J" + std::to_string(n) + ".cert.json")).string();
          write_certificate_file(cert_path, CertificateDocument{{PosetKind::quotient, ideal_name, std::nullopt},
                                                                *d.certificate});
        }
        break;
      }
      case Outcome::refusal: verdict = "refuted"; break;
      case Outcome::timeout:
        verdict = "inconclusive";
        any_inconclusive = true;
        break;
    }
    const int value = d.outcome == Outcome::success ? target_k : target_k - 1;
    json v{{"n", n}, {"target", target_k}, {"verdict", verdict}, {"stats", d.stats.to_json()}};
    v["value"] = d.outcome == Outcome::timeout ? json(nullptr) : json(value);
    v["certificate"] = cert_path.empty() ? json(nullptr) : json(cert_path);
    verdicts.push_back(v);
    if (format != "json") {
      out << "n = " << n << ": " << verdict;
      if (d.outcome != Outcome::timeout) out << " (sdepth(S/J_" << n << ") = " << value << ")";
      if (!cert_path.empty()) out << ", certificate " << cert_path;
      out << ", " << d.stats.nodes << " nodes, " << std::fixed << std::setprecision(1) << d.stats.wall_ms << " ms\n";
    }
  }
  if (format == "json") out << json{{"verdicts", verdicts}}.dump(2) << "\n";
  return any_inconclusive ? kExitInconclusive : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley depth of squarefree monomial ideals via interval partitions"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "write an ideal file: line N | cycle N | veronese N D | file PATH");
  std::string family;
  std::vector<std::string> params;
  std::string gen_output;
  gen->add_option("family", family)->required();
  gen->add_option("params", params);
  gen->add_option("-o,--output", gen_output, "output path (default stdout)");

  auto* sdepth = app.add_subcommand("sdepth", "exact Stanley depth with bounds and certificate");
  SdepthFlags sd;
  sd.poset.attach(*sdepth);
  sd.search.attach(*sdepth);
  auto* exact_flag = sdepth->add_flag("--exact", sd.exact, "run the exact search (default)");
  sdepth->add_flag("--bounds-only", sd.bounds_only, "only the closed-form bounds")->excludes(exact_flag);
  sdepth->add_flag("--no-hint", sd.no_hint, "start the level scan at 0 instead of the best lower bound");
  sdepth->add_option("--certificate", sd.certificate, "write the partition certificate here");

  auto* verify = app.add_subcommand("verify", "check a partition certificate");
  PosetFlags verify_poset;
  verify_poset.attach(*verify);
  std::string verify_cert;
  verify->add_option("--certificate,certificate", verify_cert, "certificate JSON")->required();

  auto* alpha = app.add_subcommand("alpha", "alpha-test table at level k");
  PosetFlags alpha_poset;
  alpha_poset.attach(*alpha);
  int alpha_k = 0;
  alpha->add_option("-k", alpha_k, "level")->required();

  auto* poset_cmd = app.add_subcommand("poset", "level counts and simple bounds of a poset");
  PosetFlags inspect_poset;
  inspect_poset.attach(*poset_cmd);

  auto* paper = app.add_subcommand("paper", "reproduce the known values for path and cycle ideals");
  bool include_slow = false;
  SearchFlags paper_search;
  paper_search.attach(*paper);
  paper->add_flag("--include-slow", include_slow, "also reproduce sdepth(S/J_13) = 5");

  auto* conjecture = app.add_subcommand("conjecture", "test sdepth(S/J_n) = ceil(n/3) for n = 1 mod 3");
  std::vector<int> conj_ns;
  SearchFlags conj_search;
  conj_search.timeout_s = 60;
  conj_search.attach(*conjecture);
  bool conj_no_hall = false;
  std::string cert_dir;
  conjecture->add_option("-n", conj_ns, "instances")->required();
  conjecture->add_flag("--no-hall", conj_no_hall, "disable Hall-condition pruning (on by default here)");
  conjecture->add_option("--certificate-dir", cert_dir, "write ideal and certificate files here");

  // --format is accepted after the subcommand as well.
  for (auto* sub : {sdepth, verify, alpha, poset_cmd, paper, conjecture}) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, params, gen_output, out);
    if (sdepth->parsed()) {
      sd.format = format;
      return cmd_sdepth(sd, out);
    }
    if (verify->parsed()) return cmd_verify(verify_poset, verify_cert, format, out, err);
    if (alpha->parsed()) return cmd_alpha(alpha_poset, alpha_k, format, out);
    if (poset_cmd->parsed()) return cmd_poset(inspect_poset, format, out);
    if (paper->parsed()) return cmd_paper(include_slow, paper_search.options(), format, out);
    if (conjecture->parsed()) {
      SearchOptions options = conj_search.options();
      options.hall_check = !conj_no_hall;
      return cmd_conjecture(conj_ns, options, cert_dir, format, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace stanley::cli
