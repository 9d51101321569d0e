#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "loops/bk_construction.hpp"
#include "loops/error.hpp"
#include "loops/loop_io.hpp"
#include "loops/search.hpp"
#include "loops/structure.hpp"
#include "loops/theorems.hpp"
#include "loops/varieties.hpp"

namespace loops::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::uint64_t nodes = 1'000'000'000;
  double seconds = 600;
};

void add_budget(CLI::App* app, Budget& b) {
  app->add_option("--budget-nodes", b.nodes, "Node cap for searches, element cap for groups")
      ->capture_default_str();
  app->add_option("--budget-seconds", b.seconds, "Wall-clock cap")->capture_default_str();
}

std::size_t group_cap(const Budget& b) {
  return static_cast<std::size_t>(std::min<std::uint64_t>(b.nodes, kDefaultGroupCap));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Deadline {
 public:
  explicit Deadline(double seconds) : seconds_(seconds), start_(Clock::now()) {}
  void check() const {
    if (seconds_ > 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > seconds_) {
      throw LoopError(ErrorKind::BudgetExceeded, "time budget exceeded");
    }
  }

 private:
  double seconds_;
  Clock::time_point start_;
};

void list_varieties(std::ostream& out) {
  for (const auto& v : catalog()) {
    out << v.id;
    if (!v.aliases.empty()) {
      out << " (";
      for (std::size_t i = 0; i < v.aliases.size(); ++i) out << (i ? ", " : "") << v.aliases[i];
      out << ")";
    }
    out << ": " << v.description << "\n";
  }
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string path;
  bool g_loop = false;
  Budget budget;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const LoopTable q = read_loop_file(a.path);
  const std::size_t cap = group_cap(a.budget);
  const Deadline deadline(a.budget.seconds);
  out << "order: " << q.order() << "\n";
  out << "left nucleus: " << left_nucleus(q).to_string() << "\n";
  out << "middle nucleus: " << middle_nucleus(q).to_string() << "\n";
  out << "right nucleus: " << right_nucleus(q).to_string() << "\n";
  const SubloopSet n = nucleus(q);
  out << "nucleus: " << n.to_string() << (n.is_all() ? " (N = Q)" : "") << "\n";
  out << "center: " << center(q).to_string() << "\n";
  const auto cls = nilpotency_class(q, cap);
  out << "nilpotency class: " << (cls ? std::to_string(*cls) : std::string("not nilpotent")) << "\n";
  out << "varieties:\n";
  for (const auto& v : catalog()) {
    deadline.check();
    out << "  " << v.id << " " << yes_no(check_variety(q, v.id)) << "\n";
  }
  const bool nn = is_normal_subloop(q, n, cap);
  out << "nucleus normal: " << yes_no(nn) << "\n";
  if (nn) {
    const LoopTable f = quotient(q, n, cap).table;
    out << "quotient by nucleus: order " << f.order() << ", abelian group "
        << yes_no(check_variety(f, "associative") && check_variety(f, "commutative")) << "\n";
  }
  if (a.g_loop) {
    deadline.check();
    out << "g-loop: " << yes_no(is_g_loop(q)) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::size_t order = 0;
  std::vector<std::string> require, forbid;
  std::string mode = "count";
  std::string iso = "reduced";
  std::string cell_order = "mrv";
  bool no_propagate = false;
  bool no_deduce = false;
  std::size_t shards = 1;
  std::string out_dir;
  Budget budget;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchSpec spec;
  spec.order = a.order;
  spec.required = a.require;
  spec.forbidden = a.forbid;
  spec.propagate = !a.no_propagate;
  spec.deduce = !a.no_deduce;
  spec.shards = a.shards;
  spec.budget = {a.budget.nodes, a.budget.seconds};
  spec.cell_order = a.cell_order == "row-major" ? CellOrder::RowMajor : CellOrder::MinRemaining;
  spec.isomorphs = a.iso == "up-to-iso" ? IsomorphHandling::UpToIso
                   : a.iso == "all"     ? IsomorphHandling::All
                                        : IsomorphHandling::Reduced;
  if (a.mode == "count-iso") {
    spec.mode = SearchMode::Count;
    spec.isomorphs = IsomorphHandling::UpToIso;
  } else {
    spec.mode = a.mode == "collect" ? SearchMode::Collect
                : a.mode == "first" ? SearchMode::First
                                    : SearchMode::Count;
  }
  const SearchResult r = spec.shards > 1 ? run_sharded(spec) : enumerate(spec);
  std::size_t k = 0;
  for (const LoopTable& q : r.loops) {
    if (a.out_dir.empty()) {
      out << "# witness " << k << "\n";
      write_loop(out, q);
    } else {
      std::filesystem::create_directories(a.out_dir);
      const std::string path =
          (std::filesystem::path(a.out_dir) /
           ("order" + std::to_string(a.order) + "_" + std::to_string(k) + ".loop"))
              .string();
      write_loop_file(path, q);
      out << "wrote " << path << "\n";
    }
    ++k;
  }
  out << summary_line(r) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> paths;
  std::size_t corpus = 0;
  Budget budget;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Deadline deadline(a.budget.seconds);
  VerifyOptions opt;
  opt.cap = group_cap(a.budget);
  std::size_t counts[3] = {0, 0, 0};
  const auto verify_one = [&](const std::string& id, const LoopTable& q) {
    deadline.check();
    const TheoremReport r = verify_theorems(q, opt);
    out << format_report(id, r);
    counts[0] += r.count(CheckStatus::Pass);
    counts[1] += r.count(CheckStatus::Fail);
    counts[2] += r.count(CheckStatus::NotApplicable);
  };
  for (const std::string& path : a.paths) {
    verify_one(std::filesystem::path(path).stem().string(), read_loop_file(path));
  }
  for (std::size_t n = 1; n <= a.corpus; ++n) {
    SearchSpec spec;
    spec.order = n;
    spec.isomorphs = IsomorphHandling::UpToIso;
    spec.mode = SearchMode::Collect;
    spec.budget = {a.budget.nodes, a.budget.seconds};
    const SearchResult r = enumerate(spec);
    for (std::size_t k = 0; k < r.loops.size(); ++k) {
      verify_one("order" + std::to_string(n) + "_" + std::to_string(k), r.loops[k]);
    }
  }
  out << "pass=" << counts[0] << " fail=" << counts[1] << " na=" << counts[2] << "\n";
  return counts[1] ? kExitTheoremFail : kExitOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::int64_t p = 2;
  std::int64_t window_a = 0;
  std::int64_t window_x = 100;
  std::string op;
  std::vector<std::string> operands;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  bk::Params params;
  params.p = a.p;
  params.window_a = a.window_a > 0 ? a.window_a : a.p * a.p * a.p;
  params.window_x = a.window_x;
  bk::validate(params);
  const auto need = [&](std::size_t k) {
    if (a.operands.size() != k) {
      err << "error: '" << a.op << "' takes " << k << " operand(s)\n";
      return false;
    }
    return true;
  };
  const auto el = [&](std::size_t i) { return bk::parse_element(a.operands[i]); };
  if (a.op == "mul" || a.op == "ldiv" || a.op == "rdiv") {
    if (!need(2)) return kExitUsage;
    const bk::Element r = a.op == "mul"    ? bk::mul(params, el(0), el(1))
                          : a.op == "ldiv" ? bk::ldiv(params, el(0), el(1))
                                           : bk::rdiv(params, el(0), el(1));
    out << bk::format_element(r) << "\n";
  } else if (a.op == "inner") {
    if (!need(4)) return kExitUsage;
    const std::string& kind = a.operands[0];
    bk::InnerKind k;
    if (kind == "LL" || kind == "ll") {
      k = bk::InnerKind::LL;
    } else if (kind == "RR" || kind == "rr") {
      k = bk::InnerKind::RR;
    } else if (kind == "TR" || kind == "tr") {
      k = bk::InnerKind::TR;
    } else {
      err << "error: inner kind must be LL, RR or TR\n";
      return kExitUsage;
    }
    out << bk::format_element(bk::standard_inner(params, k, el(1), el(2), el(3))) << "\n";
  } else if (a.op == "witness") {
    if (!need(0)) return kExitUsage;
    const bk::Witness w = bk::nonnormal_witness(params);
    out << "x=" << bk::format_element(w.x) << " y=" << bk::format_element(w.y)
        << " s0=" << bk::format_element(w.s0) << " preimage=" << bk::format_element(w.preimage)
        << "\n";
  } else if (a.op == "audit") {
    if (!need(0)) return kExitUsage;
    const bk::AuditReport r = bk::window_audit(params);
    for (const auto& v : r.violations) out << "violation: " << v << "\n";
    out << r.violations.size() << " violations in " << r.checks << " checks\n";
    return r.violations.empty() ? kExitOk : kExitTheoremFail;
  } else {
    err << "error: unknown construct operation '" << a.op
        << "' (mul, ldiv, rdiv, inner, witness, audit)\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct IsotopeArgs {
  std::string path;
  int a = -1;
  int b = -1;
  Budget budget;
};

int cmd_isotopes(const IsotopeArgs& a, std::ostream& out, std::ostream& err) {
  const LoopTable q = read_loop_file(a.path);
  const int n = static_cast<int>(q.order());
  if ((a.a < 0) != (a.b < 0) || a.a >= n || a.b >= n) {
    err << "error: give both --a and --b, each below the order\n";
    return kExitUsage;
  }
  if (a.a >= 0) {
    write_loop(out, principal_isotope(q, static_cast<Element>(a.a), static_cast<Element>(a.b)));
    return kExitOk;
  }
  const Deadline deadline(a.budget.seconds);
  std::size_t iso = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      deadline.check();
      if (isomorphic(principal_isotope(q, static_cast<Element>(x), static_cast<Element>(y)), q)) ++iso;
    }
  }
  const GLoopReport g = g_loop_report(q);
  out << "isomorphic principal isotopes: " << iso << "/" << n * n << "\n";
  out << "g-loop by isotopes: " << yes_no(g.by_isotopes) << "\n";
  out << "g-loop by companions: " << yes_no(g.by_companions) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct QuotientArgs {
  std::string path;
  std::string by = "nucleus";
  std::vector<int> members;
  Budget budget;
};

int cmd_quotient(const QuotientArgs& a, std::ostream& out, std::ostream& err) {
  const LoopTable q = read_loop_file(a.path);
  SubloopSet s(q.order());
  if (!a.members.empty()) {
    for (int m : a.members) {
      if (m < 0 || m >= static_cast<int>(q.order())) {
        err << "error: element " << m << " out of range\n";
        return kExitUsage;
      }
      s.insert(static_cast<Element>(m));
    }
    s.insert(0);
  } else if (a.by == "nucleus") {
    s = nucleus(q);
  } else if (a.by == "center") {
    s = center(q);
  } else {
    err << "error: --by must be nucleus or center\n";
    return kExitUsage;
  }
  const Quotient f = quotient(q, s, group_cap(a.budget));
  out << "# quotient by " << s.to_string() << "\n";
  write_loop(out, f.table);
  return kExitOk;
}

int exit_code_for(const LoopError& e) {
  return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite loop toolkit: structure, varieties, search, theorem checks"};
  app.name("loops");
  bool list = false;
  app.add_flag("--list-varieties", list, "List catalog variety ids");

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Structure and variety report for a .loop file");
  c_check->add_option("path", check.path)->required();
  c_check->add_flag("--g-loop", check.g_loop, "Also decide the G-loop property");
  add_budget(c_check, check.budget);

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Enumerate loops of one order");
  c_search->add_option("--order", search.order)->required()->check(CLI::Range(1, 64));
  c_search->add_option("--require", search.require)->delimiter(',');
  c_search->add_option("--forbid", search.forbid)->delimiter(',');
  c_search->add_option("--mode", search.mode)
      ->check(CLI::IsMember({"count", "count-iso", "collect", "first"}))
      ->capture_default_str();
  c_search->add_option("--iso", search.iso)
      ->check(CLI::IsMember({"all", "reduced", "up-to-iso"}))
      ->capture_default_str();
  c_search->add_option("--cell-order", search.cell_order)
      ->check(CLI::IsMember({"mrv", "row-major"}))
      ->capture_default_str();
  c_search->add_flag("--no-propagate", search.no_propagate, "Filter at leaves only");
  c_search->add_flag("--no-deduce", search.no_deduce, "Judge instances without filling forced cells");
  c_search->add_option("--shards", search.shards)->check(CLI::PositiveNumber)->capture_default_str();
  c_search->add_option("--out", search.out_dir, "Directory for witness .loop files");
  add_budget(c_search, search.budget);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run the theorem suite on loops");
  c_verify->add_option("paths", verify.paths);
  c_verify->add_option("--corpus", verify.corpus, "All loops up to this order, up to isomorphism");
  add_budget(c_verify, verify.budget);

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Query the infinite loop on Z x Z");
  c_construct->add_option("--p", construct.p, "Prime")->required();
  c_construct->add_option("--window-a", construct.window_a, "Bound on |a| (default p^3)");
  c_construct->add_option("--window-x", construct.window_x, "Bound on |x|")->capture_default_str();
  c_construct->add_option("op", construct.op, "mul | ldiv | rdiv | inner | witness | audit")->required();
  c_construct->add_option("operands", construct.operands, "Elements as (a,x); inner takes KIND x y s");

  IsotopeArgs isotopes;
  auto* c_iso = app.add_subcommand("isotopes", "Principal isotopes and the G-loop property");
  c_iso->add_option("path", isotopes.path)->required();
  c_iso->add_option("--a", isotopes.a);
  c_iso->add_option("--b", isotopes.b);
  add_budget(c_iso, isotopes.budget);

  QuotientArgs quot;
  auto* c_quot = app.add_subcommand("quotient", "Factor loop by a normal subloop");
  c_quot->add_option("path", quot.path)->required();
  c_quot->add_option("--by", quot.by, "nucleus | center")->capture_default_str();
  c_quot->add_option("--members", quot.members, "Explicit subloop elements")->delimiter(',');
  add_budget(c_quot, quot.budget);

  std::vector<std::string> argv_store{"loops"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list) {
      list_varieties(out);
      return kExitOk;
    }
    if (c_check->parsed()) return cmd_check(check, out);
    if (c_search->parsed()) return cmd_search(search, out);
    if (c_verify->parsed()) return cmd_verify(verify, out);
    if (c_construct->parsed()) return cmd_construct(construct, out, err);
    if (c_iso->parsed()) return cmd_isotopes(isotopes, out, err);
    if (c_quot->parsed()) return cmd_quotient(quot, out, err);
    err << app.help();
    return kExitUsage;
  } catch (const LoopError& e) {
    err << "error: " << e.what();
    if (e.detail()) err << " (" << *e.detail() << ")";
    err << "\n";
    return exit_code_for(e);
  }
}

}  // namespace loops::cli
