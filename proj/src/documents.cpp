#include "bgmu/documents.hpp"

#include <json.hpp>

namespace bgmu::io {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr char kToolName[] = "bgmu";
constexpr char kToolVersion[] = "0.1.0";

ordered_json config_json(RunConfig const& cfg) {
  ordered_json j;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["degree_bound"] = cfg.degree_bound;
  j["verify"] = cfg.verify;
  j["support_ceiling"] = cfg.support_ceiling;
  j["q"] = cfg.q;
  j["m"] = cfg.m;
  j["workers"] = cfg.workers;
  return j;
}

ordered_json doc_shell(std::string const& schema, RunConfig const& cfg) {
  ordered_json j;
  j["schema"] = schema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config"] = config_json(cfg);
  return j;
}

std::string comment_header(std::string const& schema, RunConfig const& cfg,
                           std::string const& lead) {
  return lead + " schema: " + schema + "\n" + lead + " config: " + cfg.describe() + "\n";
}

ordered_json qvec_json(QVec const& v) {
  ordered_json a = ordered_json::array();
  for (auto const& x : v) a.push_back(x.str());
  return a;
}

std::string dump(ordered_json const& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string RunConfig::describe() const {
  return "seed=" + std::to_string(seed) + " samples=" + std::to_string(samples) +
         " degree_bound=" + std::to_string(degree_bound) +
         " verify=" + (verify ? std::string("true") : std::string("false")) +
         " support_ceiling=" + std::to_string(support_ceiling) + " q=" + std::to_string(q) +
         " m=" + std::to_string(m) + " workers=" + std::to_string(workers);
}

std::string table_document(std::string const& group, strata::TableResult const& t,
                           RunConfig const& cfg, std::string const& format) {
  auto const& pi1 = t.poset.pi1;
  if (format == "json") {
    ordered_json j = doc_shell("bgmu.table/1", cfg);
    j["group"] = group;
    j["mu"] = qvec_json(t.poset.mu);
    j["pi1"] = pi1.describe();
    j["kappa"] = pi1.format(t.poset.kappa_mu);
    j["total_dim"] = t.total_dim.str();
    ordered_json rows = ordered_json::array();
    for (auto const& r : t.records) {
      ordered_json row;
      row["nu"] = qvec_json(r.cls.nu.v);
      row["defect"] = r.defect;
      row["length_to_mu"] = r.length_to_mu;
      row["dim_adlv"] = r.dim_adlv;
      row["dim_central_leaf"] = r.dim_central_leaf;
      row["dim_stratum"] = r.dim_stratum;
      row["codim_stratum"] = r.codim_stratum;
      rows.push_back(row);
    }
    j["classes"] = rows;
    return dump(j);
  }
  if (format == "csv") {
    std::string s = comment_header("bgmu.table/1", cfg, "#");
    s += "# group: " + group + " mu: " + format_qvec(t.poset.mu) + "\n";
    s += "nu,kappa,defect,length_to_mu,dim_adlv,dim_central_leaf,dim_stratum,codim_stratum\n";
    for (auto const& r : t.records) {
      s += "\"" + format_qvec(r.cls.nu.v) + "\",\"" + pi1.format(r.cls.kappa) + "\"," +
           std::to_string(r.defect) + "," + std::to_string(r.length_to_mu) + "," +
           std::to_string(r.dim_adlv) + "," + std::to_string(r.dim_central_leaf) + "," +
           std::to_string(r.dim_stratum) + "," + std::to_string(r.codim_stratum) + "\n";
    }
    return s;
  }
  // markdown
  std::string s = "<!-- schema: bgmu.table/1 -->\n<!-- config: " + cfg.describe() + " -->\n";
  s += "# classes below mu = " + format_qvec(t.poset.mu) + " for " + group + "\n\n";
  s += "pi1 coinvariants: " + pi1.describe() + ", kappa = " + pi1.format(t.poset.kappa_mu) +
       ", total dimension " + t.total_dim.str() + "\n\n";
  s += "| nu | defect | length to mu | dim ADLV | dim central leaf | dim stratum | codim |\n";
  s += "|---|---|---|---|---|---|---|\n";
  for (auto const& r : t.records) {
    s += "| " + format_qvec(r.cls.nu.v) + " | " + std::to_string(r.defect) + " | " +
         std::to_string(r.length_to_mu) + " | " + std::to_string(r.dim_adlv) + " | " +
         std::to_string(r.dim_central_leaf) + " | " + std::to_string(r.dim_stratum) + " | " +
         std::to_string(r.codim_stratum) + " |\n";
  }
  return s;
}

std::string hasse_dot(std::string const& group, strata::TableResult const& t,
                      RunConfig const& cfg) {
  std::string s = comment_header("bgmu.hasse/1", cfg, "//");
  s += "// group: " + group + " mu: " + format_qvec(t.poset.mu) + "\n";
  s += "digraph newton_strata {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t i = 0; i < t.records.size(); ++i) {
    auto const& r = t.records[i];
    s += "  n" + std::to_string(i) + " [label=\"" + format_qvec(r.cls.nu.v) + "\\ndef=" +
         std::to_string(r.defect) + " dim=" + std::to_string(r.dim_stratum) +
         " codim=" + std::to_string(r.codim_stratum) + "\"];\n";
  }
  // arrows point from larger to smaller
  std::vector<std::pair<size_t, size_t>> edges;
  for (auto const& [lo, hi] : t.poset.covers) edges.emplace_back(hi, lo);
  std::sort(edges.begin(), edges.end());
  for (auto const& [a, b] : edges)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  s += "}\n";
  return s;
}

std::string check_document(std::string const& group, QVec const& mu,
                           strata::CheckReport const& rep, RunConfig const& cfg,
                           std::string const& format) {
  if (format == "md") {
    std::string s = "<!-- schema: bgmu.check/1 -->\n<!-- config: " + cfg.describe() + " -->\n";
    s += "# check report for " + group + " mu = " + format_qvec(mu) + "\n\n";
    s += std::to_string(rep.checks_run) + " check groups run, " +
         std::to_string(rep.findings.size()) + " findings\n\n";
    for (auto const& f : rep.findings)
      s += "- [" + strata::severity_name(f.severity) + "] " + f.code + ": " + f.message + "\n";
    return s;
  }
  ordered_json j = doc_shell("bgmu.check/1", cfg);
  j["group"] = group;
  j["mu"] = qvec_json(mu);
  j["checks_run"] = rep.checks_run;
  j["failed"] = rep.failed();
  ordered_json fs = ordered_json::array();
  for (auto const& f : rep.findings) {
    ordered_json fj;
    fj["severity"] = strata::severity_name(f.severity);
    fj["code"] = f.code;
    fj["message"] = f.message;
    fs.push_back(fj);
  }
  j["findings"] = fs;
  return dump(j);
}

std::string oracle_document(iso::LaurentMatrix const& m, ZVec const& cartan, QVec const& newton,
                            long long kappa, iso::NewtonVerification const& ver,
                            RunConfig const& cfg, std::string const& format) {
  if (format == "md") {
    std::string s = "<!-- schema: bgmu.oracle/1 -->\n<!-- config: " + cfg.describe() + " -->\n";
    s += "# isocrystal invariants\n\n";
    s += "- field: q=" + std::to_string(m.ctx->field.q()) + " m=" + std::to_string(m.ctx->field.m()) +
         ", size " + std::to_string(m.n) + "\n";
    s += "- cartan: " + format_zvec(cartan) + "\n";
    s += "- newton: " + format_qvec(newton) + "\n";
    s += "- kappa: " + std::to_string(kappa) + "\n";
    if (ver.ran)
      s += "- cartan-limit verification: agreed at sigma-power " +
           std::to_string(ver.power_used) + "\n";
    return s;
  }
  ordered_json j = doc_shell("bgmu.oracle/1", cfg);
  j["q"] = m.ctx->field.q();
  j["m"] = m.ctx->field.m();
  j["n"] = m.n;
  j["cartan"] = cartan;
  j["newton"] = qvec_json(newton);
  j["kappa"] = kappa;
  if (ver.ran) {
    j["verification"] = {{"method", "cartan-limit"},
                         {"agreed", ver.agreed},
                         {"sigma_power", ver.power_used}};
  }
  return dump(j);
}

std::string mazur_document(std::string const& group, iso::MazurReport const& rep,
                           std::vector<QVec> const& expected_classes, RunConfig const& cfg,
                           std::string const& format) {
  std::vector<std::string> unobserved;
  for (auto const& e : expected_classes) {
    bool seen = false;
    for (auto const& [nu, cnt] : rep.observed)
      if (nu == e) { seen = true; break; }
    if (!seen) unobserved.push_back(format_qvec(e));
  }
  if (format == "md") {
    std::string s = "<!-- schema: bgmu.mazur/1 -->\n<!-- config: " + cfg.describe() + " -->\n";
    s += "# slope inequality sampling for " + group + " mu = " + format_zvec(rep.mu) + "\n\n";
    s += "- samples: " + std::to_string(rep.samples) + ", seed " + std::to_string(rep.seed) + "\n";
    s += "- violations: " + std::to_string(rep.violations) + "\n\n";
    s += "| nu | hits |\n|---|---|\n";
    for (auto const& [nu, cnt] : rep.observed)
      s += "| " + format_qvec(nu) + " | " + std::to_string(cnt) + " |\n";
    if (!unobserved.empty()) {
      s += "\nexpected but unobserved classes:\n";
      for (auto const& u : unobserved) s += "- " + u + "\n";
    }
    return s;
  }
  ordered_json j = doc_shell("bgmu.mazur/1", cfg);
  j["group"] = group;
  j["mu"] = rep.mu;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["violations"] = rep.violations;
  j["violation_details"] = rep.violation_details;
  ordered_json obs = ordered_json::array();
  for (auto const& [nu, cnt] : rep.observed)
    obs.push_back({{"nu", qvec_json(nu)}, {"count", cnt}});
  j["observed"] = obs;
  ordered_json exp = ordered_json::array();
  for (auto const& e : expected_classes) exp.push_back(qvec_json(e));
  j["expected_classes"] = exp;
  j["unobserved"] = unobserved;
  j["verdict"] = rep.violations == 0 ? "pass" : "fail";
  return dump(j);
}

std::string kr_document(std::string const& group, ZVec const& mu,
                        std::vector<KrClassVerdict> const& verdicts, RunConfig const& cfg,
                        std::string const& format) {
  if (format == "md") {
    std::string s = "<!-- schema: bgmu.kr/1 -->\n<!-- config: " + cfg.describe() + " -->\n";
    s += "# double-coset representatives for " + group + " mu = " + format_zvec(mu) + "\n\n";
    s += "| nu | verdict |\n|---|---|\n";
    for (auto const& v : verdicts) {
      std::string verdict;
      if (v.witness) {
        verdict = "monomial w=";
        for (size_t i = 0; i < v.witness->w.size(); ++i)
          verdict += (i ? "," : "") + std::to_string(v.witness->w[i] + 1);
        verdict += " a=" + format_zvec(v.witness->a);
      } else if (v.randomized_hit) {
        verdict = "randomized witness";
      } else {
        verdict = "inconclusive after " + std::to_string(v.tried) + " tries";
      }
      s += "| " + format_qvec(v.nu) + " | " + verdict + " |\n";
    }
    return s;
  }
  ordered_json j = doc_shell("bgmu.kr/1", cfg);
  j["group"] = group;
  j["mu"] = mu;
  ordered_json rows = ordered_json::array();
  for (auto const& v : verdicts) {
    ordered_json row;
    row["nu"] = qvec_json(v.nu);
    if (v.witness) {
      ordered_json w = ordered_json::array();
      for (auto x : v.witness->w) w.push_back(x + 1);  // 1-based images
      row["witness"] = {{"w", w}, {"a", v.witness->a}};
      row["verdict"] = "monomial";
    } else if (v.randomized_hit) {
      row["verdict"] = "randomized";
    } else {
      row["verdict"] = "inconclusive";
      row["tried"] = v.tried;
    }
    rows.push_back(row);
  }
  j["classes"] = rows;
  return dump(j);
}

}  // namespace bgmu::io
