#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chiforge/analysis.hpp"
#include "chiforge/catalog.hpp"
#include "chiforge/error.hpp"

namespace chiforge::cli {

  namespace {
    enum class Format { text, json, csv };

    // Largest |G| for which nu(G) is built without --allow-large-nu.
    constexpr std::uint64_t nu_default_limit = 11;

    struct RunConfig {
      std::string command;
      std::string group;
      std::string file;
      std::size_t max_cosets     = default_max_cosets;
      Strategy    strategy       = Strategy::hlt;
      NuScope     nu_scope       = NuScope::elements;
      std::size_t engel_max      = 10;
      Format      format         = Format::text;
      std::string out_path;
      bool        allow_large_nu = false;
      bool        show_gens      = false;

      AnalysisOptions options() const {
        AnalysisOptions o;
        o.max_cosets = max_cosets;
        o.strategy   = strategy;
        o.nu_scope   = nu_scope;
        o.engel_max  = engel_max;
        return o;
      }
    };

    // An input problem found after argument parsing.
    struct InputError : Error {
      using Error::Error;
    };

    struct Source {
      Presentation                              presentation;
      std::optional<std::vector<std::uint64_t>> declared_schur;
    };

    Source load_source(RunConfig const& cfg) {
      if (cfg.group.empty() == cfg.file.empty()) {
        throw InputError(cfg.command + ": give exactly one of --group or --file");
      }
      if (!cfg.group.empty()) {
        for (auto const& e : catalog()) {
          if (e.name == cfg.group) {
            return {catalog_lookup(e.name), e.schur_multiplier};
          }
        }
        std::string known;
        for (auto const& e : catalog()) {
          known += (known.empty() ? "" : ", ") + std::string(e.name);
        }
        throw InputError("unknown group '" + cfg.group + "' (catalog: " + known + ")");
      }
      std::ifstream in(cfg.file);
      if (!in) {
        throw InputError("cannot read " + cfg.file);
      }
      std::ostringstream text;
      text << in.rdbuf();
      auto name = std::filesystem::path(cfg.file).stem().string();
      return {parse_presentation(text.str(), name), std::nullopt};
    }

    std::string enumerate_report(RunConfig const& cfg) {
      auto src   = load_source(cfg);
      auto const& p = src.presentation;
      auto table = enumerate(p, {}, cfg.max_cosets, cfg.strategy);
      std::vector<Permutation> gens;
      if (cfg.show_gens) {
        gens = regular_representation(table);
      }
      switch (cfg.format) {
        case Format::json: {
          nlohmann::ordered_json j;
          j["group_name"] = p.name;
          j["order"]      = table.live_count();
          if (cfg.show_gens) {
            auto& g = j["generators"] = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < gens.size(); ++i) {
              g[p.gen_names[i]] = gens[i].to_string();
            }
          }
          return j.dump(2) + "\n";
        }
        case Format::csv:
          return "name,order\n" + p.name + "," + std::to_string(table.live_count()) + "\n";
        case Format::text:
          break;
      }
      std::string out = "group: " + p.name + "\norder: " + std::to_string(table.live_count()) + "\n";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out += p.gen_names[i] + ": " + gens[i].to_string() + "\n";
      }
      return out;
    }

    std::pair<std::string, int> analyze_report(RunConfig const& cfg) {
      auto src = load_source(cfg);
      auto a   = analyze(src.presentation, src.declared_schur, cfg.options());
      int  rc  = a.all_pass() ? ok : check_failure;
      switch (cfg.format) {
        case Format::json: return {to_json(a), rc};
        case Format::csv: return {csv_header() + to_csv_row(a, a.all_pass()), rc};
        case Format::text: break;
      }
      return {to_text(a), rc};
    }

    std::pair<std::string, int> survey_report(RunConfig const& cfg) {
      if (!cfg.group.empty() || !cfg.file.empty()) {
        throw InputError("survey runs over the whole catalog; --group and --file are not allowed");
      }
      auto limit = cfg.allow_large_nu ? std::numeric_limits<std::uint64_t>::max() : nu_default_limit;
      auto rows  = survey(cfg.options(), limit);
      int  rc    = ok;
      for (auto const& row : rows) {
        if (!row.error.empty()) {
          rc = overflow;
        }
      }
      switch (cfg.format) {
        case Format::json: return {to_json(rows), rc};
        case Format::csv: return {to_csv(rows), rc};
        case Format::text: break;
      }
      return {to_text(rows), rc};
    }

    std::pair<std::string, int> nu_compare_report(RunConfig const& cfg, std::ostream& err) {
      auto src  = load_source(cfg);
      auto opts = cfg.options();
      auto m    = model_chi(src.presentation, opts);
      auto n    = m.g.group.order();
      if (n > nu_default_limit && !cfg.allow_large_nu) {
        err << "nu-compare: refusing |G| = " << n << " (default limit " << nu_default_limit
            << "); the nu(G) presentation has 2|G|^3 relators. Pass --allow-large-nu to run anyway.\n";
        return {{}, refused};
      }
      auto lat = compute_lattice(m.chi, m.g_block, m.phi_block, m.element_images, m.phi_images,
                                 opts.element_limit);
      auto c   = verify_nu_chi(m, lat.R.order(), opts);
      int  rc  = c.pass ? ok : check_failure;
      switch (cfg.format) {
        case Format::json: return {to_json(c), rc};
        case Format::csv:
          return {"name,|nu|,|Delta|,|chi|,|R|,pass\n" + c.group_name + ","
                      + std::to_string(c.order_nu) + "," + std::to_string(c.order_delta) + ","
                      + std::to_string(c.order_chi) + "," + std::to_string(c.order_R) + ","
                      + (c.pass ? "true" : "false") + "\n",
                  rc};
        case Format::text: break;
      }
      return {to_text(c), rc};
    }
  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App  app{"Weak commutativity groups chi(G) and nu(G) of finite groups", "chi-forge"};
    app.require_subcommand(1);
    app.fallthrough();

    auto* group = app.add_option("--group", cfg.group, "Catalog group name");
    app.add_option("--file", cfg.file, "Presentation file")->excludes(group);
    app.add_option("--max-cosets", cfg.max_cosets, "Coset table limit")
        ->envname("CHI_FORGE_MAX_COSETS")
        ->check(CLI::PositiveNumber);
    app.add_option("--strategy", cfg.strategy, "Coset enumeration strategy")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Strategy>{{"hlt", Strategy::hlt}, {"felsch", Strategy::felsch}}));
    app.add_option("--nu-scope", cfg.nu_scope, "Range of the nu relators")
        ->transform(CLI::CheckedTransformer(std::map<std::string, NuScope>{
            {"elements", NuScope::elements}, {"generators", NuScope::generators}}));
    app.add_option("--engel-max", cfg.engel_max, "Largest Engel degree tried")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{
            {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}}));
    app.add_option("--out", cfg.out_path, "Write the report to this file");
    app.add_flag("--allow-large-nu", cfg.allow_large_nu, "Build nu(G) for |G| >= 12");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Order of G by coset enumeration");
    enumerate_cmd->add_flag("--generators", cfg.show_gens, "Print the regular permutation generators");
    app.add_subcommand("analyze", "Subgroup lattice of chi(G) and structural checks");
    app.add_subcommand("survey", "Analyze every catalog group");
    app.add_subcommand("nu-compare", "Compare |nu|/|Delta| with |chi|/|R|");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int rc = app.exit(e, out, err);
      return rc == 0 ? ok : input_error;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    std::string report;
    int         rc = ok;
    try {
      if (cfg.command == "enumerate") {
        report = enumerate_report(cfg);
      } else if (cfg.command == "analyze") {
        std::tie(report, rc) = analyze_report(cfg);
      } else if (cfg.command == "survey") {
        std::tie(report, rc) = survey_report(cfg);
      } else {
        std::tie(report, rc) = nu_compare_report(cfg, err);
        if (rc == refused) {
          return rc;
        }
      }
    } catch (CosetOverflow const& e) {
      err << "error: " << e.what() << '\n';
      return overflow;
    } catch (LimitExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return overflow;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }

    if (cfg.out_path.empty()) {
      out << report;
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!(file << report)) {
        err << "error: cannot write " << cfg.out_path << '\n';
        return input_error;
      }
    }
    return rc;
  }

}  // namespace chiforge::cli
