// Copyright 2026 The mixext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "mixext/cli.hpp"

namespace {

using mixext::cli::CommandResult;

std::optional<std::pair<int, int>> parse_pair(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  const auto t = mixext::parse_tuple(*text);
  if (t.size() != 2 || t[0] < 1 || t[1] < 1)
    throw mixext::ParseError("expected two positive integers 'p,q'", 0);
  return std::make_pair(t[0], t[1]);
}

int emit(const CommandResult& r, const std::string& out_path) {
  if (!out_path.empty() && r.exit_code == mixext::cli::kExitOk) {
    std::ofstream f(out_path, std::ios::binary);
    f << r.out;
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return mixext::cli::kExitInvalidInput;
    }
  } else {
    std::cout << r.out << std::flush;
  }
  std::cerr << r.err;
  return r.exit_code;
}

void add_graph_spec(CLI::App* cmd, mixext::cli::GraphSpec& spec) {
  cmd->add_option("--type", spec.type, "signed tuple, e.g. -7,1,3");
  cmd->add_option("--descriptor", spec.descriptor, "family descriptor, e.g. 'family=(p|-q|r) params=1,2,4'");
  cmd->add_option("--family", spec.family, "named graph: complete, bipartite, split, pineapple");
  cmd->add_option("--graph6", spec.graph6, "graph6 string");
  cmd->add_option("--p", spec.p, "first parameter of a named graph");
  cmd->add_option("--q", spec.q, "second parameter of a named graph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed extensions of paths: spectra, census and spectral determination"};
  app.require_subcommand(1);

  std::string out_path;
  std::size_t jobs = 1;
  bool include_cs_r1 = false;
  bool theorem1_bounds = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    cmd->add_flag("--include-cs-r1", include_cs_r1, "admit K_p + CS(q|1) as a boundary member");
    cmd->add_flag("--theorem1-bounds", theorem1_bounds, "restrict K_p + K(q|r) to q >= 2");
    cmd->add_option("--out", out_path, "write the main output to this file");
  };
  auto family_options = [&] {
    mixext::FamilyOptions f;
    f.include_cs_r1 = include_cs_r1;
    f.include_star_union = !theorem1_bounds;
    return f;
  };

  mixext::cli::GraphSpec build_spec;
  std::string build_format = "graph6";
  auto* build = app.add_subcommand("build", "construct a graph and print it with its signature");
  add_graph_spec(build, build_spec);
  build->add_option("--fmt,--format", build_format, "graph6 or adjacency");
  add_common(build);

  mixext::cli::GraphSpec poly_spec;
  auto* poly = app.add_subcommand("poly", "print the characteristic polynomial");
  add_graph_spec(poly, poly_spec);
  add_common(poly);

  mixext::cli::CensusRequest census_req;
  auto* census = app.add_subcommand("census", "enumerate the class up to a given order");
  census->add_option("--max-n", census_req.max_n, "largest order")->required();
  census->add_flag("--table2", census_req.table2, "report the unexplained pseudo-cospectral groups");
  census->add_option("--format,--fmt", census_req.format, "csv, json or graph6");
  add_common(census);

  mixext::cli::DsRequest ds_req;
  std::optional<std::string> ds_bipartite, ds_split;
  auto* ds = app.add_subcommand("ds", "decide spectral determination");
  ds->add_option("--type", ds_req.type, "signed tuple of a mixed extension of P3");
  ds->add_option("--descriptor", ds_req.descriptor, "family descriptor");
  ds->add_option("--bipartite", ds_bipartite, "complete bipartite K(p|q) as p,q");
  ds->add_option("--split", ds_split, "complete split CS(p|q) as p,q");
  add_common(ds);

  int max_param = 8;
  auto* vt1 = app.add_subcommand("verify-table1", "check every closed form against quotient and adjacency");
  vt1->add_option("--max-param", max_param, "bound on free parameters");
  add_common(vt1);

  mixext::cli::OracleRequest oracle_req;
  auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration of small graphs");
  oracle->add_option("--oracle-n", oracle_req.n, "graph order")->required();
  oracle->add_flag("--connected", oracle_req.connected_only, "connected graphs only");
  oracle->add_flag("--gpp", oracle_req.gpp_only, "class members only");
  oracle->add_flag("--stretch", oracle_req.options.allow_stretch, "allow order 8");
  oracle->add_flag("--compare-census", oracle_req.check_census, "compare class members with the census");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return mixext::cli::kExitInvalidInput;
  }

  CommandResult result;
  if (*build) {
    result = mixext::cli::cmd_build(build_spec, build_format, family_options());
  } else if (*poly) {
    result = mixext::cli::cmd_poly(poly_spec, family_options());
  } else if (*census) {
    census_req.jobs = jobs;
    census_req.families = family_options();
    result = mixext::cli::cmd_census(census_req);
  } else if (*ds) {
    ds_req.jobs = jobs;
    ds_req.families = family_options();
    result = mixext::cli::guarded([&] {
      ds_req.bipartite = parse_pair(ds_bipartite);
      ds_req.split = parse_pair(ds_split);
      return mixext::cli::cmd_ds(ds_req);
    });
  } else if (*vt1) {
    result = mixext::cli::cmd_verify_table1(max_param, jobs, family_options());
  } else if (*oracle) {
    oracle_req.options.jobs = jobs;
    oracle_req.families = family_options();
    result = mixext::cli::cmd_oracle(oracle_req);
  }
  return emit(result, out_path);
}
