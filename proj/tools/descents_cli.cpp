#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "descents/analysis.hpp"
#include "descents/count_table.hpp"
#include "descents/io.hpp"
#include "descents/gibbs.hpp"
#include "descents/sampler.hpp"

using namespace descents;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path, bool given = false) {
  if (path.empty() && given) throw CLI::ValidationError("--out", "empty output path");
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

nlohmann::json suite_json(const analysis::SuiteResult& r, bool timestamp) {
  nlohmann::json j{{"schema", "descents-report/1"},
                   {"criterion", r.criterion},
                   {"suite", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail},
                   {"data", r.data}};
  if (timestamp) {
    j["generated_at"] = iso_timestamp();
    j["seconds"] = r.seconds;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descent-class counting, sawtooth densities, samplers and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file under a [subcommand] section, mirrors the flags");

  std::string spec, out, format = "csv", target = "first", given;
  int grid = 0, precision = 12, n_max = 0, seeds = 0, bins = 32;
  long long samples = 0;
  uint64_t seed = 0x5eed5eedULL;
  bool no_timestamp = false, embed = false;

  auto* count = app.add_subcommand("count", "number of permutations with the given descent set");
  count->fallthrough();
  count->add_option("spec", spec, "composition \"3,2,4,1\" or descent set \"{3,5,9}@10\"")
      ->required();

  auto* density = app.add_subcommand("density", "exact marginal/conditional particle density");
  density->fallthrough();
  density->add_option("spec", spec)->required();
  density->add_option("--target", target, "first | last | P<k> (chain index)");
  density->add_option("--given", given, "conditioning \"P<k>=v\", v rational");
  density->add_option("--grid", grid, "table points (default 101)");
  density->add_option("--precision", precision, "decimal digits (default 12)");
  density->add_option("--out", out, "output path (default stdout)");
  density->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  density->add_flag("--no-timestamp", no_timestamp);

  auto* sample = app.add_subcommand("sample", "uniform permutations of the class, CSV rows");
  sample->fallthrough();
  sample->add_option("spec", spec)->required();
  sample->add_option("--samples", samples, "number of rows (default 10)");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_flag("--embed", embed, "append the continuous embedding columns");
  bool gibbs = false;
  int sweeps_between = 1, burnin = 200;
  sample->add_flag("--gibbs", gibbs, "numeric chain sampler: rows are particle positions");
  sample->add_option("--sweeps", sweeps_between, "sweeps between recorded rows (default 1)");
  sample->add_option("--burnin", burnin, "warm-up sweeps before recording (default 200)");
  sample->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "run a verification suite, exit 1 on FAIL");
  verify->fallthrough();
  std::string suite;
  verify->add_option("suite", suite, "all | " + [] {
           std::string s;
           for (const auto& n : analysis::suite_names()) {
             if (!s.empty()) s += " | ";
             s += n;
           }
           return s;
         }())
      ->required();
  verify->add_option("--n-max", n_max, "override the suite size limit");
  verify->add_option("--grid", grid, "override the grid resolution");
  verify->add_option("--samples", samples, "override the sample budget");
  verify->add_option("--seeds", seeds, "override the seed count");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--out", out, "JSON report path");
  std::string csv_out;
  verify->add_option("--csv", csv_out, "CSV summary path");
  verify->add_flag("--no-timestamp", no_timestamp);

  auto* experiment = app.add_subcommand("experiment", "emit curves without assertions");
  experiment->fallthrough();
  std::string name;
  std::vector<int> sizes, gaps, positions;
  experiment->add_option("name", name, "decay | lp-gaps | truncation")->required();
  experiment->add_option("spec", spec, "composition (lp-gaps, truncation)");
  experiment->add_option("--sizes", sizes, "alternating sizes (decay) or cut sizes (truncation)");
  experiment->add_option("--gaps", gaps, "position gaps (lp-gaps)");
  experiment->add_option("--grid", grid);
  experiment->add_option("--samples", samples);
  experiment->add_option("--bins", bins, "binning resolution 1/delta (lp-gaps)");
  experiment->add_option("--seeds", seeds);
  experiment->add_option("--seed", seed);
  experiment->add_option("--out", out);
  experiment->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  experiment->add_flag("--no-timestamp", no_timestamp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      std::cout << count_class(Composition::parse(spec)).get_str() << "\n";
      return 0;
    }

    if (density->parsed()) {
      Composition c = Composition::parse(spec);
      SawtoothModel m = model_from_composition(c);
      int particle = 1;
      if (target == "first")
        particle = 1;
      else if (target == "last")
        particle = m.particles();
      else if (target.size() > 1 && target[0] == 'P')
        particle = std::stoi(target.substr(1));
      else
        throw CLI::ValidationError("--target", "expected first, last or P<k>");
      DensityReport rep;
      if (!given.empty()) {
        auto eq = given.find('=');
        if (eq == std::string::npos || given[0] != 'P')
          throw CLI::ValidationError("--given", "expected P<k>=value");
        int pinned = std::stoi(given.substr(1, eq - 1));
        Rational value = parse_rational(given.substr(eq + 1));
        rep = conditional_density(m, particle, {Pin{pinned, value}});
      } else {
        rep = marginal(m, particle);
      }
      auto g = uniform_grid(grid ? grid : 101);
      std::ofstream file;
      std::ostream& os = open_or_stdout(file, out, density->count("--out") > 0);
      if (format == "json") {
        nlohmann::json j = density_report_json(rep, g, precision);
        j["composition"] = c.to_string();
        if (!no_timestamp) j["generated_at"] = iso_timestamp();
        os << j.dump(2) << "\n";
      } else {
        write_density_csv(os, rep, g, precision);
      }
      return 0;
    }

    if (sample->parsed()) {
      Composition c = Composition::parse(spec);
      std::ofstream file;
      std::ostream& os = open_or_stdout(file, out);
      long long rows = samples ? samples : 10;
      if (gibbs) {
        GibbsChain chain(black_box(model_from_composition(c)), seed);
        chain.run(burnin);
        for (long long i = 0; i < rows; ++i) {
          chain.run(sweeps_between);
          const auto& x = chain.state();
          for (size_t j = 0; j < x.size(); ++j) os << (j ? "," : "") << x[j];
          os << "\n";
        }
        return 0;
      }
      ClassSampler s(c);
      SplitMix64 rng = SplitMix64::stream(seed, 0);
      for (long long i = 0; i < rows; ++i) {
        Permutation p = s.sample(rng);
        for (size_t j = 0; j < p.size(); ++j) os << (j ? "," : "") << p[j];
        if (embed) {
          auto x = embed_continuous(p, rng);
          for (double v : x) os << "," << v;
        }
        os << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      analysis::SuiteParams params;
      params.n_max = n_max;
      params.grid = grid;
      params.samples = samples;
      params.seeds = seeds;
      params.seed = seed;
      std::vector<analysis::SuiteResult> results;
      if (suite == "all") {
        results = analysis::run_all(params);
      } else {
        results.push_back(analysis::run_suite(suite, params));
      }
      bool all_pass = true;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.criterion << ". " << r.name << ": "
                  << r.detail << "  (" << r.seconds << "s)\n";
        arr.push_back(suite_json(r, !no_timestamp));
      }
      if (!out.empty()) {
        std::ofstream file(out);
        file << (arr.size() == 1 ? arr[0] : nlohmann::json{{"suites", arr}}).dump(2) << "\n";
      }
      if (!csv_out.empty()) {
        std::ofstream file(csv_out);
        file << "criterion,suite,pass,detail\n";
        for (const auto& r : results) {
          std::string detail = r.detail;
          for (auto& ch : detail)
            if (ch == ',') ch = ';';
          file << r.criterion << "," << r.name << "," << (r.pass ? "PASS" : "FAIL") << ","
               << detail << "\n";
        }
      }
      return all_pass ? 0 : kExitFail;
    }

    if (experiment->parsed()) {
      std::ofstream file;
      std::ostream& os = open_or_stdout(file, out);
      if (name == "decay") {
        if (sizes.empty()) throw CLI::ValidationError("--sizes", "need at least one size");
        os << "size,sup_gap,cdf_gap\n";
        for (int size : sizes) {
          auto rep = analysis::independence_gap(Composition::alternating(size),
                                                grid ? grid : 20);
          os << size << "," << decimal_string(rep.sup_gap, precision) << ","
             << decimal_string(rep.cdf_gap, precision) << "\n";
        }
      } else if (name == "lp-gaps") {
        if (spec.empty() || gaps.empty())
          throw CLI::ValidationError("lp-gaps", "needs spec and --gaps");
        Composition c = Composition::parse(spec);
        long long budget = samples ? samples : 1000000;
        int nseeds = seeds ? seeds : 16;
        os << "gap,seed_index,tv,bound\n";
        for (int g : gaps) {
          int i1 = std::max(1, c.size() / 3);
          if (i1 + g > c.size()) throw CLI::ValidationError("--gaps", "gap exceeds the size");
          for (int s = 0; s < nseeds; ++s) {
            auto est = analysis::lp_independence_experiment(
                c, {i1, i1 + g}, budget, bins, seed + 31ull * static_cast<uint64_t>(s));
            os << g << "," << s << "," << est.tv << "," << est.bound << "\n";
          }
        }
      } else if (name == "truncation") {
        if (spec.empty() || sizes.empty())
          throw CLI::ValidationError("truncation", "needs spec and --sizes");
        Composition c = Composition::parse(spec);
        os << "n,sup_gap\n";
        for (int n : sizes) {
          auto rep = analysis::truncation_check(c, n, grid ? grid : 101);
          if (!rep.applicable) throw CLI::ValidationError("--sizes", rep.detail);
          os << n << "," << rep.data["sup_gap_decimal"].get<std::string>() << "\n";
        }
      } else {
        throw CLI::ValidationError("name", "unknown experiment " + name);
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
