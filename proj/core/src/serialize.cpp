#include "rtl/serialize.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "rtl/graph6.hpp"

namespace rtl {

Json to_json(const ExtremalValue& v) {
  Json j;
  if (v.kind == ExKind::OutOfDomain) {
    j["value"] = nullptr;
  } else {
    j["value"] = v.value;
  }
  j["kind"] = to_string(v.kind);
  j["citation"] = v.citation;
  j["branch"] = v.branch;
  if (v.r >= 0) {
    j["k"] = v.k;
    j["r"] = v.r;
  }
  return j;
}

Json to_json(const RamseyResult& r, const TreeSpec& a, const TreeSpec& b) {
  Json j;
  j["pair"] = {a.to_string(), b.to_string()};
  switch (r.outcome) {
    case RamseyResult::Outcome::Exact:
      j["outcome"] = "exact";
      j["value"] = r.value;
      break;
    case RamseyResult::Outcome::Range:
      j["outcome"] = "range";
      j["lo"] = r.lo;
      j["hi"] = r.hi;
      break;
    case RamseyResult::Outcome::NotCovered:
      j["outcome"] = "not_covered";
      break;
  }
  j["citations"] = r.citations;
  if (r.conflict) j["conflict"] = true;
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json jc;
    jc["citation"] = c.citation;
    jc["hypothesis"] = c.hypothesis;
    jc["params"] = c.params;
    jc["holds"] = c.holds;
    conds.push_back(std::move(jc));
  }
  j["conditions"] = std::move(conds);
  return j;
}

Json to_json(const VerifiedWitness& w) {
  Json j;
  j["order"] = w.order;
  j["construction"] = w.construction;
  j["graph6"] = encode_graph6(w.graph);
  j["red_tree"] = w.red.to_string();
  j["red_contains"] = !w.red_absent;
  j["blue_tree"] = w.blue.to_string();
  j["blue_contains"] = !w.blue_absent;
  return j;
}

namespace {

Json side_json(const ExSide& s) {
  Json j;
  j["tree"] = s.tree;
  if (s.kind == ExKind::OutOfDomain) {
    j["value"] = nullptr;
  } else {
    j["value"] = s.value;
  }
  j["kind"] = to_string(s.kind);
  j["citation"] = s.citation;
  if (!s.branch.empty()) j["branch"] = s.branch;
  j["within_stated_domain"] = s.within_stated_domain;
  return j;
}

}  // namespace

Json to_json(const UpperCert& u) {
  Json j;
  j["p"] = u.p;
  j["constructible"] = u.constructible;
  j["ex1"] = side_json(u.side1);
  j["ex2"] = side_json(u.side2);
  if (u.constructible) {
    j["sum"] = u.sum;
    j["binom"] = u.binom;
    j["holds"] = u.holds;
  } else {
    j["binom"] = u.binom;
    j["holds"] = false;
  }
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["pair"] = {c.a.to_string(), c.b.to_string()};
  j["claimed_r"] = c.claimed_r;
  j["citations"] = c.table.citations;
  j["status"] = c.status == Certificate::Status::Complete ? "COMPLETE" : "PARTIAL";
  if (!c.failing.empty()) j["failing"] = c.failing;
  if (c.lower) {
    j["lower"] = to_json(*c.lower);
  } else {
    j["lower"] = nullptr;
  }
  j["upper"] = to_json(c.upper);
  Json conds = Json::array();
  auto add_side = [&](const ExSide& s) {
    if (s.citation.empty()) return;
    Json jc;
    jc["citation"] = s.citation;
    jc["within_stated_domain"] = s.within_stated_domain;
    conds.push_back(std::move(jc));
  };
  add_side(c.upper.side1);
  add_side(c.upper.side2);
  j["conditional_on"] = std::move(conds);
  return j;
}

Json to_json(const SearchStats& s, bool with_elapsed) {
  Json j;
  j["visited"] = s.visited;
  j["iso_rejections"] = s.iso_rejections;
  j["containment_calls"] = s.containment_calls;
  if (with_elapsed) j["elapsed_s"] = s.elapsed_s;
  j["workers"] = s.workers;
  return j;
}

Json to_json(const Conjecture1Report& r, bool with_elapsed) {
  Json j;
  j["n_max"] = r.n_max;
  j["p_max"] = r.p_max;
  j["hosts_checked"] = r.hosts_checked;
  j["pairs_checked"] = r.pairs_checked;
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json jv;
    jv["host_g6"] = viol.host_g6;
    jv["tree_g6"] = viol.tree_g6;
    v.push_back(std::move(jv));
  }
  j["violations"] = std::move(v);
  j["stats"] = to_json(r.stats, with_elapsed);
  return j;
}

Json to_json(const Conjecture2Report& r, bool with_elapsed) {
  Json j;
  j["m_max"] = r.m_max;
  j["n_max"] = r.n_max;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["m"] = row.m;
    jr["tree_g6"] = row.tree_g6;
    jr["tree_order"] = row.tree_order;
    jr["alpha2"] = row.alpha2;
    jr["bound"] = row.bound;
    if (row.oracle_r)
      jr["oracle_r"] = *row.oracle_r;
    else
      jr["oracle_r"] = nullptr;
    jr["holds"] = row.holds;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["violations"] = r.violations;
  j["stats"] = to_json(r.stats, with_elapsed);
  return j;
}

std::string finish_json(const std::string& command, Json body, bool timestamp) {
  Json out;
  out["command"] = command;
  for (auto& [k, v] : body.items()) out[k] = v;
  if (timestamp) {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    out["generated_at"] = buf;
  }
  return out.dump(2) + "\n";
}

std::string csv_escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string audit_csv(const std::vector<AuditRow>& rows) {
  std::ostringstream os;
  os << "theorem,m,n,pair,claimed_r,lower23,lower23_case,lower_ok,p,ex1,ex1_kind,ex2,ex2_kind,"
        "sum,binom,upper_holds,witness_at_r_g6,witness_at_r_construction\n";
  for (const auto& r : rows) {
    os << csv_escape(r.theorem) << ",";
    if (r.m) os << *r.m;
    os << "," << r.n << "," << csv_escape(r.pair) << "," << r.claimed_r << "," << r.lower23 << ","
       << csv_escape(r.lower23_case) << "," << (r.lower_ok ? "true" : "false") << "," << r.upper.p
       << ",";
    auto side = [&](const ExSide& s) {
      if (s.kind == ExKind::OutOfDomain)
        os << "," << to_string(s.kind);
      else
        os << s.value << "," << to_string(s.kind);
    };
    side(r.upper.side1);
    os << ",";
    side(r.upper.side2);
    os << ",";
    if (r.upper.constructible)
      os << r.upper.sum;
    os << "," << r.upper.binom << "," << (r.upper.constructible && r.upper.holds ? "true" : "false")
       << "," << csv_escape(r.witness_at_r_g6) << "," << csv_escape(r.witness_at_r_construction)
       << "\n";
  }
  return os.str();
}

std::string ex_table_csv(const TreeSpec& spec, long long pmin, long long pmax) {
  std::ostringstream os;
  os << "p,value,kind,citation,branch\n";
  for (long long p = pmin; p <= pmax; ++p) {
    ExtremalValue v = ex_eval(spec, p);
    os << p << ",";
    if (v.kind != ExKind::OutOfDomain) os << v.value;
    os << "," << to_string(v.kind) << "," << csv_escape(v.citation) << "," << csv_escape(v.branch)
       << "\n";
  }
  return os.str();
}

namespace {

std::string grid_cell(const TreeSpec& a, const TreeSpec& b) {
  RamseyResult r = ramsey_eval(a, b);
  std::ostringstream cell;
  switch (r.outcome) {
    case RamseyResult::Outcome::NotCovered:
      return "NC";
    case RamseyResult::Outcome::Exact:
      cell << r.value;
      break;
    case RamseyResult::Outcome::Range:
      cell << r.lo << ".." << r.hi;
      break;
  }
  cell << " [";
  for (size_t i = 0; i < r.citations.size(); ++i) {
    if (i) cell << "; ";
    cell << r.citations[i];
  }
  cell << "]";
  return cell.str();
}

}  // namespace

std::string report_grid_csv(const std::vector<TreeSpec>& rows, const std::vector<TreeSpec>& cols) {
  std::ostringstream os;
  os << "pair";
  for (const auto& c : cols) os << "," << csv_escape(c.to_string());
  os << "\n";
  for (const auto& r : rows) {
    os << csv_escape(r.to_string());
    for (const auto& c : cols) os << "," << csv_escape(grid_cell(r, c));
    os << "\n";
  }
  return os.str();
}

Json report_grid_json(const std::vector<TreeSpec>& rows, const std::vector<TreeSpec>& cols) {
  Json j;
  Json names = Json::array();
  for (const auto& c : cols) names.push_back(c.to_string());
  j["columns"] = std::move(names);
  Json jrows = Json::array();
  for (const auto& r : rows) {
    Json jr;
    jr["row"] = r.to_string();
    Json cells = Json::array();
    for (const auto& c : cols) cells.push_back(grid_cell(r, c));
    jr["cells"] = std::move(cells);
    jrows.push_back(std::move(jr));
  }
  j["rows"] = std::move(jrows);
  return j;
}

}  // namespace rtl
