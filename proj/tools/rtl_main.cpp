// rtl: evaluate, certify, audit and brute-force-check the tree Ramsey and
// Turan catalog. See README.md for the subcommand tour.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rtl/canonical.hpp"
#include "rtl/certify.hpp"
#include "rtl/containment.hpp"
#include "rtl/graph6.hpp"
#include "rtl/oracle.hpp"
#include "rtl/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct CliOptions {
  rtl::RunConfig cfg;
  std::string out_path;
  bool strict = false;
  bool no_timestamp = false;
};

void emit(const CliOptions& opt, const std::string& content) {
  if (opt.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
  f << content;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected <lo>..<hi>, got '" + text + "'");
  }
}

std::vector<rtl::TreeSpec> parse_family_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("range", "expected <family>:<lo>..<hi>, got '" + text + "'");
  std::string fam = text.substr(0, colon);
  auto [lo, hi] = parse_range(text.substr(colon + 1));
  std::vector<rtl::TreeSpec> out;
  for (int v = lo; v <= hi; ++v) out.push_back(rtl::TreeSpec::parse(fam + ":" + std::to_string(v)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree Ramsey / Turan catalog laboratory"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  CliOptions opt;

  app.add_option("--workers", opt.cfg.workers, "worker threads")->envname("RTL_WORKERS");
  app.add_option("--cap-graphs", opt.cfg.cap_graphs, "max order for graph enumeration")
      ->envname("RTL_CAP_GRAPHS");
  app.add_option("--cap-trees", opt.cfg.cap_trees, "max order for tree enumeration")
      ->envname("RTL_CAP_TREES");
  app.add_option("--contain-budget", opt.cfg.contain_budget,
                 "node budget per containment call (0 = unlimited)")
      ->envname("RTL_CONTAIN_BUDGET");
  app.add_option("--format", opt.cfg.format, "output format for grid reports: json|csv")
      ->envname("RTL_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opt.out_path, "write output to this path instead of stdout")
      ->envname("RTL_OUT");
  app.add_flag("--strict", opt.strict, "exit 1 unless certificates are COMPLETE");
  app.add_flag("--no-timestamp", opt.no_timestamp, "suppress generated_at/elapsed fields");

  // trees
  std::string trees_spec;
  bool trees_dot = false;
  auto* sc_trees = app.add_subcommand("trees", "describe a tree spec");
  sc_trees->add_option("spec", trees_spec, "tree spec, e.g. tdp:12 or dstar:5,2")->required();
  sc_trees->add_flag("--dot", trees_dot, "emit DOT instead of JSON");

  // ex
  std::string ex_spec;
  long long ex_p = 0;
  auto* sc_ex = app.add_subcommand("ex", "closed-form ex(p;T)");
  sc_ex->add_option("spec", ex_spec)->required();
  sc_ex->add_option("p", ex_p)->required();

  // ex-table
  std::string ext_spec, ext_range;
  auto* sc_ext = app.add_subcommand("ex-table", "CSV table of ex(p;T) over a p range");
  sc_ext->add_option("spec", ext_spec)->required();
  sc_ext->add_option("prange", ext_range, "<pmin>..<pmax>")->required();

  // ramsey
  std::string ra, rb;
  auto* sc_ramsey = app.add_subcommand("ramsey", "table lookup of r(T_a, T_b)");
  sc_ramsey->add_option("specA", ra)->required();
  sc_ramsey->add_option("specB", rb)->required();

  // witness
  std::string wa, wb;
  int wp = 0;
  auto* sc_witness = app.add_subcommand("witness", "verified lower-bound coloring at order p");
  sc_witness->add_option("specA", wa)->required();
  sc_witness->add_option("specB", wb)->required();
  sc_witness->add_option("p", wp)->required();

  // contains
  std::string host_g6, ctree;
  auto* sc_contains = app.add_subcommand("contains", "does a host graph contain a tree?");
  sc_contains->add_option("host", host_g6, "host graph in graph6")->required();
  sc_contains->add_option("tree", ctree, "tree spec")->required();

  // certify
  std::string ca, cb;
  auto* sc_certify = app.add_subcommand("certify", "two-sided certificate for a table value");
  sc_certify->add_option("specA", ca)->required();
  sc_certify->add_option("specB", cb)->required();

  // audit
  std::string audit_id, audit_n, audit_m;
  bool audit_no_probe = false;
  auto* sc_audit = app.add_subcommand("audit", "re-check certificate arithmetic over a range");
  sc_audit->add_option("--theorem", audit_id, "theorem id, e.g. 3.1 or 5.3t3")->required();
  sc_audit->add_option("--n,--range", audit_n, "n range <lo>..<hi>")->required();
  sc_audit->add_option("--m", audit_m, "m range <lo>..<hi> (two-parameter theorems)");
  sc_audit->add_flag("--no-probe", audit_no_probe, "skip refutation witness probes");

  // oracle
  auto* sc_oracle = app.add_subcommand("oracle", "exhaustive ground truth at small order");
  sc_oracle->require_subcommand(1);
  std::string oex_spec;
  int oex_p = 0;
  auto* sc_oex = sc_oracle->add_subcommand("ex", "exact ex(p;T) by enumeration");
  sc_oex->add_option("spec", oex_spec)->required();
  sc_oex->add_option("p", oex_p)->required();
  std::string ora, orb;
  int or_cap = 9;
  auto* sc_oram = sc_oracle->add_subcommand("ramsey", "exact r by enumeration");
  sc_oram->add_option("specA", ora)->required();
  sc_oram->add_option("specB", orb)->required();
  sc_oram->add_option("--cap", or_cap, "give up beyond this order");

  // scan
  auto* sc_scan = app.add_subcommand("scan", "experimental conjecture scans (reported, never asserted)");
  sc_scan->require_subcommand(1);
  int c1_n = 6, c1_p = 7;
  auto* sc_c1 = sc_scan->add_subcommand("conj1", "min-degree >= alpha2 forces containment");
  sc_c1->add_option("--n", c1_n, "max tree order")->required();
  sc_c1->add_option("--p", c1_p, "max host order")->required();
  int c2_m = 4, c2_n = 6;
  auto* sc_c2 = sc_scan->add_subcommand("conj2", "r(star, T) <= m-1+alpha2(T)");
  sc_c2->add_option("--m", c2_m, "max star order")->required();
  sc_c2->add_option("--n", c2_n, "max tree order")->required();

  // report
  std::string rep_rows, rep_cols;
  auto* sc_report = app.add_subcommand("report", "ramsey grid over two family ranges");
  sc_report->add_option("--rows", rep_rows, "<family>:<lo>..<hi>")->required();
  sc_report->add_option("--cols", rep_cols, "<family>:<lo>..<hi>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool ts = !opt.no_timestamp;
  try {
    if (*sc_trees && trees_dot) {
      emit(opt, rtl::build(rtl::TreeSpec::parse(trees_spec)).to_dot());
    } else if (*sc_trees) {
      rtl::TreeSpec spec = rtl::TreeSpec::parse(trees_spec);
      rtl::Graph g = rtl::build(spec);
      rtl::Json j;
      j["spec"] = spec.to_string();
      j["order"] = g.order();
      j["max_degree"] = rtl::max_degree(spec);
      j["alpha2"] = rtl::alpha2(g);
      j["graph6"] = rtl::encode_graph6(g);
      j["degrees"] = g.degrees().sorted_desc;
      rtl::Json labels = rtl::Json::array();
      for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
      j["labels"] = std::move(labels);
      emit(opt, rtl::finish_json("trees", std::move(j), ts));
    } else if (*sc_ex) {
      rtl::TreeSpec spec = rtl::TreeSpec::parse(ex_spec);
      rtl::Json j;
      j["spec"] = spec.to_string();
      j["p"] = ex_p;
      rtl::Json inner = rtl::to_json(rtl::ex_eval(spec, ex_p));
      for (auto& [k, v] : inner.items()) j[k] = v;
      emit(opt, rtl::finish_json("ex", std::move(j), ts));
    } else if (*sc_ext) {
      rtl::TreeSpec spec = rtl::TreeSpec::parse(ext_spec);
      auto [lo, hi] = parse_range(ext_range);
      emit(opt, rtl::ex_table_csv(spec, lo, hi));
    } else if (*sc_ramsey) {
      rtl::TreeSpec a = rtl::TreeSpec::parse(ra), b = rtl::TreeSpec::parse(rb);
      emit(opt, rtl::finish_json("ramsey", rtl::to_json(rtl::ramsey_eval(a, b), a, b), ts));
    } else if (*sc_witness) {
      rtl::TreeSpec a = rtl::TreeSpec::parse(wa), b = rtl::TreeSpec::parse(wb);
      auto w = rtl::lower_witness(a, b, wp, opt.cfg);
      rtl::Json j;
      j["pair"] = {a.to_string(), b.to_string()};
      j["p"] = wp;
      j["found"] = w.has_value();
      if (w)
        j["witness"] = rtl::to_json(*w);
      else
        j["witness"] = nullptr;
      emit(opt, rtl::finish_json("witness", std::move(j), ts));
      if (opt.strict && !w) return kExitVerification;
    } else if (*sc_contains) {
      rtl::Graph host = rtl::decode_graph6(host_g6);
      rtl::TreeSpec spec = rtl::TreeSpec::parse(ctree);
      rtl::Graph t = rtl::build(spec);
      auto embedding = rtl::embed_tree(host, t, opt.cfg.contain_budget);
      rtl::Json j;
      j["host"] = host_g6;
      j["tree"] = spec.to_string();
      j["contains"] = embedding.has_value();
      if (embedding)
        j["embedding"] = embedding->map;
      else
        j["embedding"] = nullptr;
      emit(opt, rtl::finish_json("contains", std::move(j), ts));
    } else if (*sc_certify) {
      rtl::TreeSpec a = rtl::TreeSpec::parse(ca), b = rtl::TreeSpec::parse(cb);
      rtl::Certificate cert = rtl::certify(a, b, opt.cfg);
      emit(opt, rtl::finish_json("certify", rtl::to_json(cert), ts));
      if (opt.strict && cert.status != rtl::Certificate::Status::Complete)
        return kExitVerification;
    } else if (*sc_audit) {
      auto [nlo, nhi] = parse_range(audit_n);
      int mlo = 0, mhi = 0;
      if (!audit_m.empty()) std::tie(mlo, mhi) = parse_range(audit_m);
      auto rows = rtl::audit_theorem(audit_id, nlo, nhi, mlo, mhi, !audit_no_probe);
      emit(opt, rtl::audit_csv(rows));
    } else if (*sc_oex) {
      rtl::TreeSpec spec = rtl::TreeSpec::parse(oex_spec);
      rtl::SearchStats st;
      long long v = rtl::oracle_ex(oex_p, spec, opt.cfg, &st);
      rtl::Json j;
      j["spec"] = spec.to_string();
      j["p"] = oex_p;
      j["value"] = v;
      j["stats"] = rtl::to_json(st, ts);
      emit(opt, rtl::finish_json("oracle-ex", std::move(j), ts));
    } else if (*sc_oram) {
      rtl::TreeSpec a = rtl::TreeSpec::parse(ora), b = rtl::TreeSpec::parse(orb);
      rtl::SearchStats st;
      int v = rtl::oracle_ramsey(a, b, or_cap, opt.cfg, &st);
      rtl::Json j;
      j["pair"] = {a.to_string(), b.to_string()};
      j["cap"] = or_cap;
      j["value"] = v;
      j["stats"] = rtl::to_json(st, ts);
      emit(opt, rtl::finish_json("oracle-ramsey", std::move(j), ts));
    } else if (*sc_c1) {
      auto rep = rtl::scan_conjecture1(c1_n, c1_p, opt.cfg);
      emit(opt, rtl::finish_json("scan-conj1", rtl::to_json(rep, ts), ts));
    } else if (*sc_c2) {
      auto rep = rtl::scan_conjecture2(c2_m, c2_n, opt.cfg);
      emit(opt, rtl::finish_json("scan-conj2", rtl::to_json(rep, ts), ts));
    } else if (*sc_report) {
      auto rows = parse_family_range(rep_rows);
      auto cols = parse_family_range(rep_cols);
      if (opt.cfg.format == "csv") {
        emit(opt, rtl::report_grid_csv(rows, cols));
      } else {
        emit(opt, rtl::finish_json("report", rtl::report_grid_json(rows, cols), ts));
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rtl::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const rtl::ContainmentBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const rtl::NotCertifiable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const rtl::Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}
