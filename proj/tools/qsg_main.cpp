// Copyright 2026 The qsg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: reproducible spectrum sampling, moment tables with
// oracle cross-checks, limit-law tabulation, partition statistics and
// convergence sweeps. Every artifact embeds its full configuration and
// replays byte-identically from it.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsg/histogram.hpp"
#include "qsg/hypergraph.hpp"
#include "qsg/limit_laws.hpp"
#include "qsg/moment_oracle.hpp"
#include "qsg/partitions.hpp"
#include "qsg/sampler.hpp"

namespace {

using nlohmann::json;
using namespace qsg;

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct GraphOptions {
  std::string kind = "chain";
  int n = 0;
  int p = 0;
  std::vector<int> offsets;
  std::string graph_file;

  Hypergraph build() const {
    if (!graph_file.empty()) {
      std::ifstream in(graph_file);
      if (!in) throw std::runtime_error("cannot open graph file " + graph_file);
      return Hypergraph::read(in);
    }
    if (kind == "chain") return Hypergraph::cycle_chain(n);
    if (kind == "complete") return Hypergraph::complete_graph(n);
    if (kind == "star") return Hypergraph::star_graph(n);
    if (kind == "p-uniform") return Hypergraph::complete_p_uniform(n, p);
    if (kind == "circulant") {
      return Hypergraph::circulant(n, offsets.empty() ? std::vector<int>{1}
                                                      : offsets);
    }
    throw std::runtime_error("unknown graph kind " + kind);
  }

  json to_json() const {
    json j{{"kind", kind}, {"n", n}};
    if (p > 0) j["p"] = p;
    if (!offsets.empty()) j["offsets"] = offsets;
    if (!graph_file.empty()) j["file"] = graph_file;
    return j;
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--graph", kind, "chain|complete|star|p-uniform|circulant")
        ->default_val("chain");
    cmd->add_option("--n", n, "vertex count");
    cmd->add_option("--p", p, "hyperedge size for p-uniform");
    cmd->add_option("--offsets", offsets, "circulant offsets")->delimiter(',');
    cmd->add_option("--graph-file", graph_file,
                    "hypergraph text file (\"n <int>\" header, one edge per line)");
  }
};

struct LawOptions {
  std::string name = "gauss";
  double lambda = 1.0;

  std::optional<LimitLaw> build() const {
    if (name == "none") return std::nullopt;
    if (name == "gauss") return LimitLaw::gaussian();
    if (name == "semicircle") return LimitLaw::semicircle();
    if (name == "star") return LimitLaw::star();
    if (name == "q") return LimitLaw::q_interp(lambda);
    throw std::runtime_error("unknown law " + name);
  }

  void add_flags(CLI::App* cmd, const char* default_name = "gauss") {
    name = default_name;
    cmd->add_option("--law", name, "gauss|semicircle|q|star|none")
        ->default_val(default_name);
    cmd->add_option("--lambda", lambda, "lambda for the q-interpolating law")
        ->default_val("1.0");
  }
};

struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--out", path, "output path, - for stdout")
        ->default_val("-");
    cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
  }

  void write(const std::string& content) const {
    if (path == "-") {
      std::cout << content;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
  }
};

std::string csv_header(const std::string& command, const json& config) {
  std::string header = "# qsg " + command + "\n# config " + config.dump() + "\n";
  return header;
}

std::vector<int> parse_range(const std::string& text) {
  // "a:b:step" inclusive sweep, or a single integer.
  std::vector<int> values;
  const auto first_colon = text.find(':');
  if (first_colon == std::string::npos) {
    values.push_back(std::stoi(text));
    return values;
  }
  const auto second_colon = text.find(':', first_colon + 1);
  const int a = std::stoi(text.substr(0, first_colon));
  const int b = std::stoi(text.substr(
      first_colon + 1,
      second_colon == std::string::npos ? std::string::npos
                                        : second_colon - first_colon - 1));
  const int step =
      second_colon == std::string::npos
          ? 1
          : std::stoi(text.substr(second_colon + 1));
  if (step <= 0) throw std::runtime_error("range step must be positive");
  for (int v = a; v <= b; v += step) values.push_back(v);
  return values;
}

json histogram_to_json(const EmpiricalDOS& dos) {
  json j;
  j["bin_edges"] = dos.bin_edges();
  j["counts"] = dos.counts();
  j["below"] = dos.below();
  j["above"] = dos.above();
  j["n_samples"] = dos.n_samples();
  return j;
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(const GraphOptions& graph_opts, const LawOptions& law_opts,
                 const OutputOptions& out, const std::string& dist_name,
                 int samples, std::uint64_t seed, int bins,
                 const std::string& emit) {
  const auto graph = graph_opts.build();
  const auto law = law_opts.build();
  const auto dist = CouplingDistribution::parse(dist_name);

  if (emit == "terms") {
    // Coefficient audit: the drawn terms themselves, no diagonalisation.
    json cfg{{"command", "spectrum"},  {"graph", graph_opts.to_json()},
             {"dist", dist_name},      {"samples", samples},
             {"seed", seed},           {"emit", emit},
             {"format", out.format}};
    std::ostringstream body;
    json results = json::array();
    if (out.format == "csv") {
      body << csv_header("spectrum", cfg);
      body << "sample,term,coefficient,string\n";
    }
    for (int s = 0; s < samples; ++s) {
      const auto sample = HamiltonianSample::draw(graph, dist, seed, s);
      for (std::size_t t = 0; t < sample.terms().size(); ++t) {
        const auto& term = sample.terms()[t];
        if (out.format == "csv") {
          body << s << ',' << t << ',' << format_double(term.coefficient)
               << ',' << term.string.str() << '\n';
        } else {
          results.push_back({{"sample", s},
                             {"term", t},
                             {"coefficient", term.coefficient},
                             {"string", term.string.str()}});
        }
      }
    }
    if (out.format == "json") {
      json j{{"config", cfg}, {"results", results}};
      body << j.dump(2) << '\n';
    }
    out.write(body.str());
    return 0;
  }

  SamplingConfig config{graph,
                        dist,
                        seed,
                        samples,
                        4,
                        default_bin_edges(law ? *law : LimitLaw::gaussian(), bins),
                        0,
                        HamiltonianSample::kDefaultDenseSiteCap,
                        emit == "eigen"};
  const auto result = run_sampling(config);

  json cfg{{"command", "spectrum"},
           {"graph", graph_opts.to_json()},
           {"dist", dist_name},
           {"samples", samples},
           {"seed", seed},
           {"bins", bins},
           {"law", law_opts.name},
           {"emit", emit},
           {"format", out.format}};
  if (law_opts.name == "q") cfg["lambda"] = law_opts.lambda;

  const double ks = law ? ks_distance(result.dos, *law) : -1.0;

  std::ostringstream body;
  if (out.format == "csv") {
    body << csv_header("spectrum", cfg);
    if (law) body << "# ks_distance " << format_double(ks) << "\n";
    body << "# identity_violations " << result.identity_violations << "\n";
    if (emit == "eigen") {
      body << "sample,index,eigenvalue\n";
      for (std::size_t s = 0; s < result.eigenvalues.size(); ++s) {
        for (std::size_t i = 0; i < result.eigenvalues[s].size(); ++i) {
          body << s << ',' << i << ','
               << format_double(result.eigenvalues[s][i]) << '\n';
        }
      }
    } else {
      body << "bin_left,bin_right,count,density_estimate\n";
      for (int b = 0; b < result.dos.bin_count(); ++b) {
        body << format_double(result.dos.bin_edges()[b]) << ','
             << format_double(result.dos.bin_edges()[b + 1]) << ','
             << result.dos.counts()[b] << ','
             << format_double(result.dos.density_estimate(b)) << '\n';
      }
    }
  } else {
    json j{{"config", cfg}};
    j["results"]["histogram"] = histogram_to_json(result.dos);
    if (law) j["results"]["ks_distance"] = ks;
    j["results"]["identity_violations"] = result.identity_violations;
    if (emit == "eigen") j["results"]["eigenvalues"] = result.eigenvalues;
    body << j.dump(2) << '\n';
  }
  out.write(body.str());
  return result.identity_violations == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// moments

int run_moments(const GraphOptions& graph_opts, const LawOptions& law_opts,
                const OutputOptions& out, const std::string& dist_name,
                int samples, std::uint64_t seed, int k_max, bool oracle,
                double budget) {
  const auto graph = graph_opts.build();
  const auto dist = CouplingDistribution::parse(dist_name);
  const auto law = law_opts.build();

  json cfg{{"command", "moments"},
           {"graph", graph_opts.to_json()},
           {"dist", dist_name},
           {"k_max", k_max},
           {"law", law_opts.name},
           {"oracle", oracle},
           {"format", out.format}};
  if (law_opts.name == "q") cfg["lambda"] = law_opts.lambda;

  std::ostringstream body;
  json results = json::array();

  if (oracle) {
    cfg["budget"] = budget;
    OracleOptions options;
    options.budget = budget;
    if (out.format == "csv") {
      body << csv_header("moments", cfg);
      body << "k,total,D,A,B,limit_law_moment,abs_error\n";
    }
    for (int k = 0; k <= k_max; ++k) {
      const auto breakdown = expected_moment(graph, dist, k, options);
      const double reference = law ? law->moment(k) : 0.0;
      const double abs_error = law ? std::abs(breakdown.total - reference) : -1;
      if (out.format == "csv") {
        body << k << ',' << format_double(breakdown.total) << ','
             << format_double(breakdown.part_D) << ','
             << format_double(breakdown.part_A) << ','
             << format_double(breakdown.part_B) << ','
             << format_double(reference) << ',' << format_double(abs_error)
             << '\n';
      } else {
        results.push_back({{"k", k},
                           {"total", breakdown.total},
                           {"D", breakdown.part_D},
                           {"A", breakdown.part_A},
                           {"B", breakdown.part_B},
                           {"limit_law_moment", reference},
                           {"abs_error", abs_error}});
      }
    }
  } else {
    cfg["samples"] = samples;
    cfg["seed"] = seed;
    SamplingConfig config{graph,
                          dist,
                          seed,
                          samples,
                          k_max,
                          default_bin_edges(law ? *law : LimitLaw::gaussian(), 101),
                          0,
                          HamiltonianSample::kDefaultDenseSiteCap,
                          false};
    const auto result = run_sampling(config);
    if (out.format == "csv") {
      body << csv_header("moments", cfg);
      body << "k,mean,stderr\n";
    }
    for (int k = 0; k <= k_max; ++k) {
      if (out.format == "csv") {
        body << k << ',' << format_double(result.moments[k].mean) << ','
             << format_double(result.moments[k].std_error) << '\n';
      } else {
        results.push_back({{"k", k},
                           {"mean", result.moments[k].mean},
                           {"stderr", result.moments[k].std_error}});
      }
    }
  }

  if (out.format == "json") {
    json j{{"config", cfg}, {"results", results}};
    body << j.dump(2) << '\n';
  }
  out.write(body.str());
  return 0;
}

// ---------------------------------------------------------------------------
// laws

int run_laws(const LawOptions& law_opts, const OutputOptions& out, int k_max,
             const std::string& table, double grid_lo, double grid_hi,
             double grid_step) {
  const auto law = law_opts.build();
  if (!law) throw std::runtime_error("laws: --law none is not tabulatable");

  json cfg{{"command", "laws"},
           {"law", law_opts.name},
           {"k_max", k_max},
           {"table", table},
           {"format", out.format}};
  if (law_opts.name == "q") cfg["lambda"] = law_opts.lambda;

  std::ostringstream body;
  json results;
  if (table == "moments") {
    if (out.format == "csv") {
      body << csv_header("laws", cfg) << "k,moment\n";
    }
    for (int k = 0; k <= k_max; ++k) {
      if (out.format == "csv") {
        body << k << ',' << format_double(law->moment(k)) << '\n';
      } else {
        results["moments"].push_back({{"k", k}, {"moment", law->moment(k)}});
      }
    }
  } else {
    cfg["grid"] = {grid_lo, grid_hi, grid_step};
    if (out.format == "csv") {
      body << csv_header("laws", cfg) << "x,density,cdf\n";
    }
    for (double x = grid_lo; x <= grid_hi + 1e-12; x += grid_step) {
      if (out.format == "csv") {
        body << format_double(x) << ',' << format_double(law->density(x))
             << ',' << format_double(law->cdf(x)) << '\n';
      } else {
        results["density"].push_back(
            {{"x", x}, {"density", law->density(x)}, {"cdf", law->cdf(x)}});
      }
    }
  }
  if (out.format == "json") {
    json j{{"config", cfg}, {"results", results}};
    body << j.dump(2) << '\n';
  }
  out.write(body.str());
  return 0;
}

// ---------------------------------------------------------------------------
// partitions

int run_partitions(const OutputOptions& out, int k) {
  json cfg{{"command", "partitions"}, {"k", k}, {"format", out.format}};
  std::ostringstream body;
  json results = json::array();
  if (out.format == "csv") {
    body << csv_header("partitions", cfg);
    body << "k,partitions,noncrossing,crossing_histogram\n";
  }
  for (int kk = 2; kk <= k; kk += 2) {
    const auto histogram = crossing_histogram(kk);
    if (out.format == "csv") {
      body << kk << ',' << pair_partition_count(kk) << ','
           << count_noncrossing(kk) << ',';
      for (std::size_t i = 0; i < histogram.size(); ++i) {
        if (i > 0) body << ':';
        body << histogram[i];
      }
      body << '\n';
    } else {
      results.push_back({{"k", kk},
                         {"partitions", pair_partition_count(kk)},
                         {"noncrossing", count_noncrossing(kk)},
                         {"crossing_histogram", histogram}});
    }
  }
  if (out.format == "json") {
    json j{{"config", cfg}, {"results", results}};
    body << j.dump(2) << '\n';
  }
  out.write(body.str());
  return 0;
}

// ---------------------------------------------------------------------------
// convergence

int run_convergence(const OutputOptions& out, const std::string& family,
                    const std::string& range, const std::vector<int>& offsets,
                    int p, int k, const std::string& dist_name,
                    const LawOptions& law_opts, double budget) {
  const auto dist = CouplingDistribution::parse(dist_name);
  const auto law = law_opts.build();
  if (!law) throw std::runtime_error("convergence: a reference law is required");

  json cfg{{"command", "convergence"}, {"family", family}, {"n", range},
           {"k", k},  {"dist", dist_name},  {"law", law_opts.name},
           {"format", out.format}};
  if (!offsets.empty()) cfg["offsets"] = offsets;
  if (p > 0) cfg["p"] = p;

  OracleOptions options;
  options.budget = budget;

  std::ostringstream body;
  json results = json::array();
  if (out.format == "csv") {
    body << csv_header("convergence", cfg);
    body << "n,edges,degree_ratio,moment,limit_moment,abs_error\n";
  }
  for (int n : parse_range(range)) {
    GraphOptions gopts;
    gopts.kind = family == "circulant" ? "circulant" : family;
    gopts.n = n;
    gopts.p = p;
    gopts.offsets = offsets;
    const auto graph = gopts.build();
    const auto breakdown = expected_moment(graph, dist, k, options);
    const bool two_uniform = graph.uniform_edge_size() == 2;
    const double degree = two_uniform ? graph.max_vertex_degree()
                                      : graph.max_hyperedge_degree();
    const double ratio = degree / double(graph.edge_count());
    const double reference = law->moment(k);
    const double abs_error = std::abs(breakdown.total - reference);
    if (out.format == "csv") {
      body << n << ',' << graph.edge_count() << ',' << format_double(ratio)
           << ',' << format_double(breakdown.total) << ','
           << format_double(reference) << ',' << format_double(abs_error)
           << '\n';
    } else {
      results.push_back({{"n", n},
                         {"edges", graph.edge_count()},
                         {"degree_ratio", ratio},
                         {"moment", breakdown.total},
                         {"limit_moment", reference},
                         {"abs_error", abs_error}});
    }
  }
  if (out.format == "json") {
    json j{{"config", cfg}, {"results", results}};
    body << j.dump(2) << '\n';
  }
  out.write(body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum spin glass density-of-states toolkit"};
  app.require_subcommand(1);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "sample Hamiltonians, diagonalise, emit eigenvalues or histogram");
  GraphOptions spectrum_graph;
  LawOptions spectrum_law;
  OutputOptions spectrum_out;
  std::string spectrum_dist = "gauss", spectrum_emit = "hist";
  int spectrum_samples = 100, spectrum_bins = 101;
  std::uint64_t spectrum_seed = 1;
  spectrum_graph.add_flags(spectrum);
  spectrum_law.add_flags(spectrum);
  spectrum_out.add_flags(spectrum);
  spectrum->add_option("--dist", spectrum_dist, "gauss|rademacher|uniform|exp-shift")
      ->default_val("gauss");
  spectrum->add_option("--samples", spectrum_samples)->default_val("100");
  spectrum->add_option("--seed", spectrum_seed)->default_val("1");
  spectrum->add_option("--bins", spectrum_bins)->default_val("101");
  spectrum->add_option("--emit", spectrum_emit, "hist|eigen|terms")
      ->check(CLI::IsMember({"hist", "eigen", "terms"}))
      ->default_val("hist");

  // moments
  auto* moments = app.add_subcommand(
      "moments", "empirical or exact-oracle moment tables with law reference");
  GraphOptions moments_graph;
  LawOptions moments_law;
  OutputOptions moments_out;
  std::string moments_dist = "gauss";
  int moments_samples = 100, moments_kmax = 7;
  std::uint64_t moments_seed = 1;
  bool moments_oracle = false;
  double moments_budget = 1e8;
  moments_graph.add_flags(moments);
  moments_law.add_flags(moments);
  moments_out.add_flags(moments);
  moments->add_option("--dist", moments_dist)->default_val("gauss");
  moments->add_option("--samples", moments_samples)->default_val("100");
  moments->add_option("--seed", moments_seed)->default_val("1");
  moments->add_option("--k-max", moments_kmax)->default_val("7");
  moments->add_flag("--oracle", moments_oracle,
                    "exact expectation by tuple enumeration instead of sampling");
  moments->add_option("--budget", moments_budget,
                      "oracle enumeration budget (hard error beyond)")
      ->default_val("1e8");

  // laws
  auto* laws = app.add_subcommand("laws", "tabulate limit-law density/cdf/moments");
  LawOptions laws_law;
  OutputOptions laws_out;
  int laws_kmax = 8;
  std::string laws_table = "density";
  double laws_lo = -4.0, laws_hi = 4.0, laws_step = 0.1;
  laws_law.add_flags(laws, "q");
  laws_out.add_flags(laws);
  laws->add_option("--k-max", laws_kmax)->default_val("8");
  laws->add_option("--table", laws_table, "density|moments")
      ->check(CLI::IsMember({"density", "moments"}))
      ->default_val("density");
  laws->add_option("--grid-lo", laws_lo)->default_val("-4.0");
  laws->add_option("--grid-hi", laws_hi)->default_val("4.0");
  laws->add_option("--grid-step", laws_step)->default_val("0.1");

  // partitions
  auto* partitions = app.add_subcommand(
      "partitions", "pair partition counts and crossing statistics");
  OutputOptions partitions_out;
  int partitions_k = 8;
  partitions_out.add_flags(partitions);
  partitions->add_option("--k", partitions_k)->default_val("8");

  // convergence
  auto* convergence = app.add_subcommand(
      "convergence", "oracle moment error sweep across a graph family");
  OutputOptions convergence_out;
  LawOptions convergence_law;
  std::string convergence_family = "circulant", convergence_range = "6:12:2";
  std::string convergence_dist = "gauss";
  std::vector<int> convergence_offsets{1, 2};
  int convergence_p = 0, convergence_k = 4;
  double convergence_budget = 1e8;
  convergence_out.add_flags(convergence);
  convergence_law.add_flags(convergence);
  convergence->add_option("--family", convergence_family,
                          "chain|complete|star|p-uniform|circulant")
      ->default_val("circulant");
  convergence->add_option("--n", convergence_range, "sweep range a:b:step")
      ->default_val("6:12:2");
  convergence->add_option("--offsets", convergence_offsets)->delimiter(',');
  convergence->add_option("--p", convergence_p);
  convergence->add_option("--k", convergence_k)->default_val("4");
  convergence->add_option("--dist", convergence_dist)->default_val("gauss");
  convergence->add_option("--budget", convergence_budget)->default_val("1e8");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) {
      return run_spectrum(spectrum_graph, spectrum_law, spectrum_out,
                          spectrum_dist, spectrum_samples, spectrum_seed,
                          spectrum_bins, spectrum_emit);
    }
    if (moments->parsed()) {
      return run_moments(moments_graph, moments_law, moments_out, moments_dist,
                         moments_samples, moments_seed, moments_kmax,
                         moments_oracle, moments_budget);
    }
    if (laws->parsed()) {
      return run_laws(laws_law, laws_out, laws_kmax, laws_table, laws_lo,
                      laws_hi, laws_step);
    }
    if (partitions->parsed()) {
      return run_partitions(partitions_out, partitions_k);
    }
    if (convergence->parsed()) {
      return run_convergence(convergence_out, convergence_family,
                             convergence_range, convergence_offsets,
                             convergence_p, convergence_k, convergence_dist,
                             convergence_law, convergence_budget);
    }
  } catch (const std::exception& e) {
    nlohmann::json diagnostic{{"error", e.what()}};
    std::cerr << diagnostic.dump() << std::endl;
    return 1;
  }
  return 2;
}
