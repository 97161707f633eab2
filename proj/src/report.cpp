#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "chiforge/analysis.hpp"

namespace chiforge {

  namespace {
    using Json = nlohmann::ordered_json;

    Json analysis_json(ChiAnalysis const& a) {
      Json j;
      j["group_name"]         = a.group_name;
      j["order_G"]            = a.order_G;
      j["exp_G"]              = a.exp_G;
      j["order_chi"]          = a.order_chi;
      j["exp_chi"]            = a.exp_chi;
      j["order_L"]            = a.order_L;
      j["exp_L"]              = a.exp_L;
      j["order_D"]            = a.order_D;
      j["exp_D"]              = a.exp_D;
      j["order_W"]            = a.order_W;
      j["order_R"]            = a.order_R;
      j["order_T3"]           = a.order_T3;
      j["t_chi_size"]         = a.t_chi_size;
      j["w_mod_r_invariants"] = a.w_mod_r_invariants;
      j["g_ab_invariants"]    = a.g_ab_invariants;
      j["derived_order_G"]    = a.derived_order_G;

      Json checks = Json::object();
      for (auto const& c : a.checks) {
        Json v{{"pass", c.pass}};
        if (!c.witness.empty()) {
          v["witness"] = c.witness;
        }
        checks[c.name] = std::move(v);
      }
      j["checks"] = std::move(checks);

      Json stats = Json::array();
      for (auto const& oc : a.tensor_order_stats.counts) {
        stats.push_back({{"order", oc.order}, {"count", oc.count}});
      }
      j["tensor_order_stats"] = std::move(stats);
      Json ppow               = Json::object();
      for (auto const& [p, all] : a.tensor_order_stats.p_power_orders) {
        ppow[std::to_string(p)] = all;
      }
      j["tensor_p_power_orders"] = std::move(ppow);

      Json engel = Json::array();
      for (auto const& e : a.engel_degrees) {
        Json v{{"t", e.t}, {"x", e.x}};
        v["n"] = e.n ? Json(*e.n) : Json(nullptr);
        engel.push_back(std::move(v));
      }
      j["engel_degrees"] = std::move(engel);
      return j;
    }

    Json nu_json(NuComparison const& n) {
      Json j;
      j["group_name"]            = n.group_name;
      j["scope"]                 = n.scope == NuScope::elements ? "elements" : "generators";
      j["order_nu"]              = n.order_nu;
      j["order_delta_generated"] = n.order_delta_generated;
      j["order_delta"]           = n.order_delta;
      j["delta_closure_needed"]  = n.closure_needed;
      j["order_chi"]             = n.order_chi;
      j["order_R"]               = n.order_R;
      j["order_nu_other_scope"]
          = n.order_nu_other_scope ? Json(*n.order_nu_other_scope) : Json(nullptr);
      j["pass"] = n.pass;
      return j;
    }

    std::string invariants_text(std::vector<std::uint64_t> const& v) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? " " : "") + std::to_string(v[i]);
      }
      return out + "]";
    }
  }  // namespace

  std::string to_json(ChiAnalysis const& a) {
    return analysis_json(a).dump(2) + "\n";
  }

  std::string to_json(NuComparison const& n) {
    return nu_json(n).dump(2) + "\n";
  }

  std::string to_json(std::vector<SurveyRow> const& rows) {
    Json groups = Json::array();
    for (auto const& row : rows) {
      Json j;
      if (row.analysis) {
        j = analysis_json(*row.analysis);
      } else {
        j["group_name"] = row.name;
      }
      j["nu_compare"] = row.nu ? nu_json(*row.nu) : Json(nullptr);
      if (!row.error.empty()) {
        j["error"] = row.error;
      }
      j["all_checks_pass"] = row.all_pass();
      groups.push_back(std::move(j));
    }
    return Json{{"groups", std::move(groups)}}.dump(2) + "\n";
  }

  std::string to_text(ChiAnalysis const& a) {
    std::ostringstream out;
    auto line = [&out](char const* k, auto const& v) {
      out << std::left << std::setw(20) << k << v << '\n';
    };
    line("group", a.group_name);
    line("|G|", a.order_G);
    line("exp(G)", a.exp_G);
    line("|G'|", a.derived_order_G);
    line("G^ab", invariants_text(a.g_ab_invariants));
    line("|chi|", a.order_chi);
    line("exp(chi)", a.exp_chi);
    line("|L|", a.order_L);
    line("exp(L)", a.exp_L);
    line("|D|", a.order_D);
    line("exp(D)", a.exp_D);
    line("|W|", a.order_W);
    line("|R|", a.order_R);
    line("|T(G)|", a.order_T3);
    line("|T_chi|", a.t_chi_size);
    line("W/R", invariants_text(a.w_mod_r_invariants));

    std::string orders;
    for (auto const& oc : a.tensor_order_stats.counts) {
      orders += (orders.empty() ? "" : " ") + std::to_string(oc.order) + "x"
              + std::to_string(oc.count);
    }
    line("T_chi orders", orders.empty() ? "-" : orders);

    std::size_t found = 0, max_n = 0;
    for (auto const& e : a.engel_degrees) {
      if (e.n) {
        ++found;
        max_n = std::max<std::size_t>(max_n, *e.n);
      }
    }
    line("Engel samples", std::to_string(found) + "/" + std::to_string(a.engel_degrees.size())
                              + " terminated, max degree " + std::to_string(max_n));

    out << "checks:\n";
    for (auto const& c : a.checks) {
      out << "  " << (c.pass ? "pass " : "FAIL ") << c.name;
      if (!c.witness.empty()) {
        out << " (" << c.witness << ")";
      }
      out << '\n';
    }
    out << (a.all_pass() ? "all checks pass" : "some checks failed") << '\n';
    return out.str();
  }

  std::string to_text(NuComparison const& n) {
    std::ostringstream out;
    out << "group: " << n.group_name << '\n'
        << "scope: " << (n.scope == NuScope::elements ? "elements" : "generators") << '\n'
        << "|nu|: " << n.order_nu << '\n'
        << "|Delta|: " << n.order_delta
        << (n.closure_needed ? " (normal closure of " + std::to_string(n.order_delta_generated) + ")"
                             : std::string())
        << '\n'
        << "|chi|: " << n.order_chi << '\n'
        << "|R|: " << n.order_R << '\n'
        << "|nu|/|Delta| = " << n.order_nu / std::max<std::uint64_t>(n.order_delta, 1)
        << ", |chi|/|R| = " << n.order_chi / std::max<std::uint64_t>(n.order_R, 1) << '\n'
        << "|nu| with other scope: "
        << (n.order_nu_other_scope ? std::to_string(*n.order_nu_other_scope) : "overflow") << '\n'
        << "verdict: " << (n.pass ? "pass" : "FAIL") << '\n';
    return out.str();
  }

  std::string to_text(std::vector<SurveyRow> const& rows) {
    std::ostringstream out;
    out << std::left << std::setw(10) << "name" << std::right << std::setw(5) << "|G|"
        << std::setw(8) << "|chi|" << std::setw(6) << "|L|" << std::setw(6) << "|D|"
        << std::setw(6) << "|W|" << std::setw(6) << "|R|" << std::setw(8) << "|T3|"
        << std::setw(8) << "|T_chi|" << "  " << std::left << std::setw(10) << "M(G)"
        << std::setw(8) << "nu" << "checks\n";
    for (auto const& row : rows) {
      out << std::left << std::setw(10) << row.name;
      if (!row.analysis) {
        out << "error: " << row.error << '\n';
        continue;
      }
      auto const& a = *row.analysis;
      out << std::right << std::setw(5) << a.order_G << std::setw(8) << a.order_chi
          << std::setw(6) << a.order_L << std::setw(6) << a.order_D << std::setw(6)
          << a.order_W << std::setw(6) << a.order_R << std::setw(8) << a.order_T3
          << std::setw(8) << a.t_chi_size << "  " << std::left << std::setw(10)
          << invariants_text(a.w_mod_r_invariants) << std::setw(8)
          << (row.nu ? (row.nu->pass ? "pass" : "FAIL") : "-")
          << (row.all_pass() ? "pass" : "FAIL") << '\n';
    }
    return out.str();
  }

  std::string csv_header() {
    return "name,|G|,exp(G),|chi|,exp(chi),|L|,|D|,|W|,|R|,|T3|,|T_chi|,M(G) invariants,"
           "all-checks-pass\n";
  }

  std::string to_csv_row(ChiAnalysis const& a, bool all_pass) {
    std::ostringstream out;
    out << a.group_name << ',' << a.order_G << ',' << a.exp_G << ',' << a.order_chi << ','
        << a.exp_chi << ',' << a.order_L << ',' << a.order_D << ',' << a.order_W << ','
        << a.order_R << ',' << a.order_T3 << ',' << a.t_chi_size << ','
        << invariants_text(a.w_mod_r_invariants) << ',' << (all_pass ? "true" : "false")
        << '\n';
    return out.str();
  }

  std::string to_csv(std::vector<SurveyRow> const& rows) {
    std::string out = csv_header();
    for (auto const& row : rows) {
      if (row.analysis) {
        out += to_csv_row(*row.analysis, row.all_pass());
      } else {
        out += row.name + ",,,,,,,,,,,,false\n";
      }
    }
    return out;
  }

}  // namespace chiforge
