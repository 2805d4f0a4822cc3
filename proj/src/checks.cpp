#include "bgmu/checks.hpp"

#include <algorithm>
#include <functional>

namespace bgmu::strata {

std::string severity_name(Severity s) {
  switch (s) {
    case Severity::info: return "info";
    case Severity::warn: return "warn";
    case Severity::error: return "error";
  }
  return "?";
}

namespace {

std::string pair_label(StrataPoset const& p, size_t a, size_t b) {
  return format_qvec(p.classes[a].nu.v) + " <= " + format_qvec(p.classes[b].nu.v);
}

}  // namespace

CheckReport run_checks(DatumPtr const& datum, QVec const& mu, CheckOptions const& opt) {
  CheckReport rep;
  RootDatum const& d = *datum;
  StrataPoset p = enumerate_bg_mu(datum, mu);
  size_t n = p.classes.size();

  // order sanity
  ++rep.checks_run;
  for (size_t i = 0; i < n; ++i) {
    if (!p.leq[i][i]) rep.add(Severity::error, "order.reflexive", pair_label(p, i, i));
    for (size_t j = 0; j < n; ++j) {
      if (i != j && p.leq[i][j] && p.leq[j][i])
        rep.add(Severity::error, "order.antisymmetric", pair_label(p, i, j));
      for (size_t k = 0; k < n; ++k)
        if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k])
          rep.add(Severity::error, "order.transitive", pair_label(p, i, k));
    }
  }

  // convex hull oracle
  if (d.rank <= opt.hull_rank_cap) {
    ++rep.checks_run;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        bool hull = newton_leq_convex_oracle(d, p.classes[i].nu, p.classes[j].nu);
        if (hull != p.leq[i][j])
          rep.add(Severity::error, "order.hull-oracle",
                  pair_label(p, i, j) + " cone=" + (p.leq[i][j] ? "true" : "false") +
                      " hull=" + (hull ? "true" : "false"));
      }
  }

  // gradedness and the floor-sum formula
  ++rep.checks_run;
  bool domain_ok = floor_formula_domain_ok(d);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!p.leq[i][j] || i == j) continue;
      size_t len;
      try {
        len = length_poset(p, i, j);
      } catch (std::exception const& e) {
        rep.add(Severity::error, "poset.ranked", pair_label(p, i, j) + ": " + e.what());
        continue;
      }
      if (p.rank_of[j] - p.rank_of[i] != len)
        rep.add(Severity::error, "poset.rank-function", pair_label(p, i, j));
      auto f = length_formula(d, p.classes[i].nu, p.classes[j].nu);
      if (f.value != (long long)len) {
        if (domain_ok)
          rep.add(Severity::error, "length.formula",
                  pair_label(p, i, j) + " poset=" + std::to_string(len) +
                      " formula=" + std::to_string(f.value));
        else
          rep.add(Severity::warn, "length.formula-domain",
                  pair_label(p, i, j) + " poset=" + std::to_string(len) +
                      " formula=" + std::to_string(f.value) +
                      " (fractional fundamental-weight pairings; poset value is authoritative)");
      }
    }

  // type A specifics
  if (d.is_type_a_gl()) {
    ++rep.checks_run;
    auto oracle = gl_polygon_oracle(d, mu);
    std::vector<QVec> a, b;
    for (auto const& x : oracle) a.push_back(x.v);
    for (auto const& c : p.classes) b.push_back(c.nu.v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      rep.add(Severity::error, "enumeration.polygon-oracle",
              "polygon oracle yields " + std::to_string(a.size()) + " classes, enumeration " +
                  std::to_string(b.size()));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (!p.leq[i][j]) continue;
        auto f = length_formula(d, p.classes[i].nu, p.classes[j].nu);
        long long pts = integral_point_count_gl(d, p.classes[i].nu, p.classes[j].nu);
        if (f.value != pts)
          rep.add(Severity::error, "length.integral-points",
                  pair_label(p, i, j) + " formula=" + std::to_string(f.value) +
                      " points=" + std::to_string(pts));
      }
    for (size_t i = 0; i < n; ++i) {
      long long slope = gl_slope_defect(p.classes[i].nu.v);
      long long derived = defect_in_poset(p, i);
      if (slope != derived)
        rep.add(Severity::error, "defect.slope-vs-derived",
                format_qvec(p.classes[i].nu.v) + " slope=" + std::to_string(slope) +
                    " derived=" + std::to_string(derived));
    }
  }

  // dimension identities
  ++rep.checks_run;
  try {
    auto table = strata_table(datum, mu);
    for (auto const& r : table.records) {
      if (Rat(r.dim_stratum + r.codim_stratum) != table.total_dim)
        rep.add(Severity::error, "dims.total", format_qvec(r.cls.nu.v));
      if (r.dim_stratum != r.dim_adlv + r.dim_central_leaf)
        rep.add(Severity::error, "dims.almost-product", format_qvec(r.cls.nu.v));
      if (r.dim_adlv < 0 || r.dim_central_leaf < 0 || r.codim_stratum < 0)
        rep.add(Severity::error, "dims.negative", format_qvec(r.cls.nu.v));
    }
  } catch (std::exception const& e) {
    rep.add(Severity::error, "dims.table", e.what());
  }

  // lattice structure: sup/inf for subsets
  ++rep.checks_run;
  {
    std::vector<std::vector<size_t>> subsets;
    if (n <= 12) {
      for (size_t mask = 1; mask < ((size_t)1 << n); ++mask) {
        std::vector<size_t> s;
        for (size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1) s.push_back(i);
        subsets.push_back(std::move(s));
      }
    } else {
      std::vector<size_t> idx;
      std::function<void(size_t, std::vector<size_t>&)> rec = [&](size_t start,
                                                                  std::vector<size_t>& cur) {
        if (!cur.empty()) subsets.push_back(cur);
        if (cur.size() == opt.subset_cap) return;
        for (size_t i = start; i < n; ++i) {
          cur.push_back(i);
          rec(i + 1, cur);
          cur.pop_back();
        }
      };
      std::vector<size_t> cur;
      rec(0, cur);
    }
    for (auto const& s : subsets) {
      try {
        sup_inf(p, s);
      } catch (std::exception const& e) {
        std::string label;
        for (size_t i : s) label += format_qvec(p.classes[i].nu.v);
        rep.add(Severity::error, "lattice.sup-inf", label + ": " + e.what());
      }
    }
  }

  // derived defect independence (costly: enumerates auxiliary posets)
  if (opt.verify) {
    ++rep.checks_run;
    for (size_t i = 0; i < n; ++i) {
      try {
        auto vals = derived_defects_over_box(datum, p.classes[i].nu, 3);
        if (vals.empty())
          rep.add(Severity::error, "defect.no-auxiliary", format_qvec(p.classes[i].nu.v));
      } catch (std::exception const& e) {
        rep.add(Severity::error, "defect.independence",
                format_qvec(p.classes[i].nu.v) + ": " + e.what());
      }
    }
  }

  return rep;
}

}  // namespace bgmu::strata
