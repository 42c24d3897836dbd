// Command-line front end: every library operation as a subcommand, with
// mandatory seeds on anything stochastic. Exit codes: 0 success, 1 failed
// verification, 2 argument or input errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sortnet/exact.hpp"
#include "sortnet/export.hpp"
#include "sortnet/geometry.hpp"
#include "sortnet/montecarlo.hpp"
#include "sortnet/network.hpp"
#include "sortnet/rational.hpp"
#include "sortnet/svg.hpp"
#include "sortnet/tableau.hpp"
#include "sortnet/urn.hpp"

namespace {

using namespace sortnet;

std::string show(const Rational& q) { return to_string(q) + " = " + to_decimal(q); }

std::string show(const mc::Estimate& e) {
  std::ostringstream out;
  out.precision(8);
  out << e.mean << " +- " << e.stderr_of_mean << "  (n = " << e.count << ")";
  return out.str();
}

std::vector<int> parse_subset(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string field;
  while (std::getline(in, field, ','))
    out.push_back(std::stoi(field));
  return out;
}

void export_table(const ExactTable& table, const std::string& csv_path,
                  const std::string& json_path) {
  if (!csv_path.empty()) write_csv_file(table, csv_path);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write JSON file: " + json_path);
    out << to_json(table).dump(2) << '\n';
  }
}

void export_estimate(const mc::Estimate& e, const std::string& json_path) {
  if (json_path.empty()) return;
  std::ofstream out(json_path);
  if (!out) throw std::invalid_argument("cannot write JSON file: " + json_path);
  out << to_json(e).dump(2) << '\n';
}

int cmd_enumerate(int n, bool allow_large) {
  exact::for_each_network(
      n, [](const SortingNetwork& net) { std::cout << to_line(net) << '\n'; },
      allow_large);
  return 0;
}

int cmd_count(int n) {
  std::cout << exact::count_networks(n).get_str() << '\n';
  return 0;
}

int cmd_sample(int n, std::uint64_t seed, int count) {
  Rng rng(seed);
  for (int i = 0; i < count; ++i)
    std::cout << to_line(tableau::sample_uniform_network(n, rng)) << '\n';
  return 0;
}

int cmd_subnet(const std::string& input, const std::string& subset) {
  const auto labels = parse_subset(subset);
  for (const auto& net : read_network_file(input))
    std::cout << to_line(subnetwork(net, labels)) << '\n';
  return 0;
}

int cmd_pmf_first_swap(int n, const std::string& csv, const std::string& json) {
  ExactTable table;
  table.param_names = {"n", "k"};
  const auto pmf = exact::first_swap_pmf(n);
  for (int k = 1; k <= n - 1; ++k) {
    std::cout << "k=" << k << "  " << show(pmf[k - 1]) << '\n';
    table.add({n, k}, pmf[k - 1]);
  }
  export_table(table, csv, json);
  return 0;
}

int cmd_theorem1(int m, int j) {
  std::cout << show(exact::expected_swaps(m, j)) << '\n';
  return 0;
}

int cmd_verify_theorem1(int nmax) {
  bool all_ok = true;
  for (int n = 2; n <= nmax; ++n) {
    const auto brute = exact::expected_swaps_bruteforce_all(n);
    int cases = 0;
    for (const auto& [key, value] : brute) {
      const auto [m, j] = key;
      ++cases;
      if (value != exact::expected_swaps(m, j)) {
        all_ok = false;
        std::cout << "MISMATCH n=" << n << " m=" << m << " j=" << j
                  << "  brute=" << to_string(value)
                  << "  formula=" << to_string(exact::expected_swaps(m, j)) << '\n';
      }
    }
    std::cout << "n=" << n << ": " << cases
              << " (m,j) cases, brute force == closed form exactly\n";
  }
  std::cout << (all_ok ? "PASS" : "FAIL")
            << ": subnetwork swap expectation is n-independent\n";
  return all_ok ? 0 : 1;
}

int cmd_lemma6(int nmax, const std::string& csv, const std::string& json) {
  ExactTable table;
  table.param_names = {"n", "m", "j"};
  long long cases = 0;
  bool all_ok = true;
  for (int n = 2; n <= nmax; ++n)
    for (int m = 2; m <= n; ++m)
      for (int j = 1; j <= m - 1; ++j) {
        const auto check = exact::convolution_check(n, m, j);
        ++cases;
        table.add({n, m, j}, check.lhs);
        if (!check.equal) {
          all_ok = false;
          std::cout << "MISMATCH n=" << n << " m=" << m << " j=" << j
                    << "  lhs=" << to_string(check.lhs)
                    << "  rhs=" << to_string(check.rhs) << '\n';
        }
      }
  std::cout << (all_ok ? "PASS" : "FAIL") << ": convolution identity over "
            << cases << " (n,m,j) cases, n <= " << nmax << '\n';
  export_table(table, csv, json);
  return all_ok ? 0 : 1;
}

int cmd_corollary2_exact(int n) {
  const Rational p = exact::four_subnet_probability(n);
  std::cout << show(p) << '\n';
  const bool ok = p == make_rational(1, 4);
  std::cout << (ok ? "PASS" : "FAIL") << ": probability equals 1/4\n";
  return ok ? 0 : 1;
}

int cmd_corollary2_mc(int n, long long samples, std::uint64_t seed, int workers,
                      const std::string& json) {
  const auto est = mc::four_subnet_frequency(n, samples, seed, workers);
  std::cout << show(est) << '\n';
  std::cout << "target 0.25, distance = "
            << std::abs(est.mean - 0.25) / est.stderr_of_mean << " SE\n";
  export_estimate(est, json);
  return 0;
}

int cmd_urn_pmf(int n, const std::string& csv, const std::string& json) {
  ExactTable table;
  table.param_names = {"n", "k"};
  const auto pmf = urn::white_count_pmf(n);
  for (int k = 1; k <= n - 1; ++k) {
    std::cout << "k=" << k << "  " << show(pmf[k - 1]) << '\n';
    table.add({n, k}, pmf[k - 1]);
  }
  export_table(table, csv, json);
  return 0;
}

int cmd_urn_couple(int nmax, std::uint64_t seed, int paths, const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot write: " + out_path);
    out = &file;
  }
  Rng rng(seed);
  if (paths == 1) {
    *out << "n,s\n";
    const auto s = urn::coupled_first_swaps(nmax, rng);
    for (int n = 2; n <= nmax; ++n) *out << n << ',' << s[n - 2] << '\n';
  } else {
    *out << "path,n,s\n";
    for (int p = 1; p <= paths; ++p) {
      const auto s = urn::coupled_first_swaps(nmax, rng);
      for (int n = 2; n <= nmax; ++n) *out << p << ',' << n << ',' << s[n - 2] << '\n';
    }
  }
  return 0;
}

int cmd_exchangeability(int n) {
  const bool ok = urn::exchangeability_check(n);
  std::cout << (ok ? "PASS" : "FAIL")
            << ": sequence probability depends only on the color multiset (n=" << n
            << ")\n";
  return ok ? 0 : 1;
}

int cmd_geom_sample(int m, std::uint64_t seed, const std::string& out_path) {
  Rng rng(seed);
  const auto sample = geom::sample_archimedes(m, rng);
  if (sample.resamples)
    std::cerr << "note: " << sample.resamples << " degenerate draws discarded\n";
  if (out_path.empty()) {
    std::cout << to_csv(sample.points);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write: " + out_path);
    out << to_csv(sample.points);
  }
  return 0;
}

int cmd_geom_network(const std::string& points_path) {
  const auto ps = geom::point_set_from_csv_file(points_path);
  std::cout << to_line(geom::geometric_network(ps)) << '\n';
  return 0;
}

int cmd_geom_expect(int m, int j) {
  const double quad = geom::archimedes_expected_swaps(m, j);
  const double target = to_double(exact::expected_swaps(m, j));
  const double diff = std::abs(quad - target);
  std::cout.precision(15);
  std::cout << "quadrature = " << quad << '\n'
            << "closed form = " << show(exact::expected_swaps(m, j)) << '\n'
            << "|difference| = " << diff << '\n';
  const bool ok = diff <= 1e-8;
  std::cout << (ok ? "PASS" : "FAIL") << ": agreement within 1e-8\n";
  return ok ? 0 : 1;
}

int cmd_beta(int j, int m) {
  const auto eval = geom::beta_integral(j, m);
  const double rel = std::abs(eval.quadrature - eval.gamma_form) /
                     std::abs(eval.gamma_form);
  std::cout.precision(15);
  std::cout << "quadrature = " << eval.quadrature << '\n'
            << "gamma form = " << eval.gamma_form << '\n'
            << "relative difference = " << rel << '\n';
  const bool ok = rel <= 1e-10;
  std::cout << (ok ? "PASS" : "FAIL") << ": agreement within 1e-10 relative\n";
  return ok ? 0 : 1;
}

int cmd_mc_subnet(int n, int m, int j, long long samples, std::uint64_t seed,
                  int workers, const std::string& json) {
  const auto est = mc::subnet_swap_expectation(n, m, j, samples, seed, workers);
  const double target = to_double(exact::expected_swaps(m, j));
  std::cout << show(est) << '\n';
  std::cout << "target " << show(exact::expected_swaps(m, j)) << ", distance = "
            << std::abs(est.mean - target) / est.stderr_of_mean << " SE\n";
  export_estimate(est, json);
  return 0;
}

int cmd_swap_law(int n, int m, int j, const std::string& csv, const std::string& json) {
  ExactTable table;
  table.param_names = {"n", "m", "j", "count"};
  const auto law = exact::swap_count_law(n, m, j);
  for (const auto& [count, mass] : law) {
    std::cout << "count=" << count << "  " << show(mass) << '\n';
    table.add({n, m, j, count}, mass);
  }
  std::cout << "mean = " << show(exact::law_mean(law)) << '\n';
  export_table(table, csv, json);
  return 0;
}

int cmd_stationarity(int n, int m) {
  const auto [first, second] = exact::first_and_second_swap_laws(n, m);
  std::cout << "law of s_1:";
  for (const auto& p : first) std::cout << "  " << to_string(p);
  std::cout << "\nlaw of s_2:";
  for (const auto& p : second) std::cout << "  " << to_string(p);
  std::cout << '\n'
            << (first == second ? "laws are identical\n" : "laws differ\n");
  return 0;
}

int cmd_subnet_law_m4(int n, long long samples, std::uint64_t seed, int workers,
                      int bootstrap, const std::string& json) {
  const auto uniform = mc::subnet_law_m4(n, samples, seed, workers);
  const auto geometric = mc::geometric_law_m4(samples, seed + 1, workers);
  const auto tv = mc::tv_distance_report(uniform, geometric, bootstrap, seed + 2);
  const auto nets = exact::enumerate_networks(4);
  const auto fu = uniform.frequencies();
  const auto fg = geometric.frequencies();
  std::cout << "network            subnet    geometric\n";
  for (size_t i = 0; i < nets.size(); ++i) {
    std::ostringstream w;
    for (int s : nets[i].swaps) w << s;
    std::cout << w.str() << "             " << fu[i] << "    " << fg[i] << '\n';
  }
  std::cout << "TV distance = " << tv.tv << " (bootstrap spread " << tv.bootstrap_stderr
            << ", " << tv.rounds << " rounds; descriptive only)\n";
  if (!json.empty()) {
    std::ofstream out(json);
    if (!out) throw std::invalid_argument("cannot write JSON file: " + json);
    out << nlohmann::json{{"n", n},
                          {"samples", samples},
                          {"subnet_frequencies", fu},
                          {"geometric_frequencies", fg},
                          {"tv_distance", tv.tv},
                          {"tv_bootstrap_stderr", tv.bootstrap_stderr}}
               .dump(2)
        << '\n';
  }
  return 0;
}

int cmd_geom_stationarity(int m, long long samples, std::uint64_t seed, int workers) {
  const auto [first, second] =
      geom::first_and_second_swap_frequencies(m, samples, seed, workers);
  std::cout << "first swap frequencies: ";
  for (double f : first) std::cout << f << ' ';
  std::cout << "\nsecond swap frequencies:";
  for (double f : second) std::cout << ' ' << f;
  std::cout << "\n(report only; stationarity is expected to fail here)\n";
  return 0;
}

int cmd_diagram(const std::string& input, const std::string& out_path) {
  const auto nets = read_network_file(input);
  if (nets.empty()) throw std::invalid_argument("no networks in " + input);
  if (nets.size() > 1)
    std::cerr << "note: " << nets.size() << " networks in file, drawing the first\n";
  write_wiring_diagram_file(nets.front(), out_path);
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

int cmd_run_config(const std::string& config_path, const std::string& log_path) {
  const auto config = mc::load_config_file(config_path);
  const auto record = mc::run_experiment(config);
  if (log_path.empty()) {
    std::cout << record.dump() << '\n';
  } else {
    std::ofstream out(log_path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot append to log: " + log_path);
    out << record.dump() << '\n';
    std::cout << "appended result to " << log_path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random sorting networks: exact laws, samplers, and Monte Carlo checks"};
  app.require_subcommand(1);

  int rc = 0;
  // Shared option storage; each subcommand binds the fields it uses.
  int n = 0, m = 0, j = 0, count = 1, workers = 1, paths = 1, bootstrap = 100;
  int nmax = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  bool allow_large = false, mc_mode = false;
  std::string input, output, subset, csv_path, json_path;

  auto* enumerate = app.add_subcommand("enumerate", "list every n-particle network");
  enumerate->add_option("n", n, "particle count (2..7)")->required();
  enumerate->add_flag("--allow-large", allow_large, "permit the 1.1e9-network n=7 run");
  enumerate->callback([&] { rc = cmd_enumerate(n, allow_large); });

  auto* cnt = app.add_subcommand("count", "number of n-particle networks (hook formula)");
  cnt->add_option("n", n, "particle count")->required();
  cnt->callback([&] { rc = cmd_count(n); });

  auto* sample = app.add_subcommand("sample", "uniform random networks");
  sample->add_option("n", n, "particle count")->required();
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--count", count, "how many networks");
  sample->callback([&] { rc = cmd_sample(n, seed, count); });

  auto* subnet = app.add_subcommand("subnet", "restrict networks to a particle subset");
  subnet->add_option("--input", input, "network file, one per line")->required();
  subnet->add_option("--subset", subset, "comma-separated particle labels")->required();
  subnet->callback([&] { rc = cmd_subnet(input, subset); });

  auto* pmf = app.add_subcommand("pmf-first-swap", "exact first-swap location pmf p_n");
  pmf->add_option("n", n, "particle count")->required();
  pmf->add_option("--csv", csv_path, "export CSV");
  pmf->add_option("--json", json_path, "export JSON");
  pmf->callback([&] { rc = cmd_pmf_first_swap(n, csv_path, json_path); });

  auto* thm = app.add_subcommand("theorem1", "exact expected swaps at a subnetwork location");
  thm->add_option("m", m, "subnetwork size")->required();
  thm->add_option("j", j, "location")->required();
  thm->callback([&] { rc = cmd_theorem1(m, j); });

  auto* vthm = app.add_subcommand("verify-theorem1",
                                  "brute force == closed form for all m <= n <= nmax");
  nmax = 6;
  vthm->add_option("--nmax", nmax, "largest n (<= 6)")->check(CLI::Range(2, 6));
  vthm->callback([&] { rc = cmd_verify_theorem1(nmax); });

  auto* lem = app.add_subcommand("lemma6", "verify the hypergeometric convolution identity");
  auto* lem_nmax = lem->add_option("--nmax", nmax, "largest n (default 40)");
  lem->add_option("--csv", csv_path, "export CSV");
  lem->add_option("--json", json_path, "export JSON");
  lem->callback([&] { rc = cmd_lemma6(lem_nmax->count() ? nmax : 40, csv_path, json_path); });

  auto* cor = app.add_subcommand("corollary2",
                                 "probability of the four distinguished 4-subnetworks");
  int cor_mc_n = 0;
  auto* cor_n = cor->add_option("n", n, "exact mode: 4 <= n <= 6");
  auto* cor_mc = cor->add_option("--mc", cor_mc_n, "Monte Carlo mode: any n >= 4");
  cor->add_option("--samples", samples, "sample count (MC mode)");
  auto* cor_seed = cor->add_option("--seed", seed, "RNG seed (MC mode)");
  cor->add_option("--workers", workers, "worker threads");
  cor->add_option("--json", json_path, "export estimate JSON");
  cor->callback([&] {
    if (cor_mc->count()) {
      if (!samples || !cor_seed->count())
        throw CLI::ValidationError("corollary2", "--mc needs --samples and --seed");
      rc = cmd_corollary2_mc(cor_mc_n, samples, seed, workers, json_path);
    } else if (cor_n->count()) {
      rc = cmd_corollary2_exact(n);
    } else {
      throw CLI::ValidationError("corollary2", "give n (exact) or --mc n (Monte Carlo)");
    }
  });

  auto* upmf = app.add_subcommand("urn-pmf", "white-count pmf of the fractional urn");
  upmf->add_option("n", n, "particle count")->required();
  upmf->add_option("--csv", csv_path, "export CSV");
  upmf->add_option("--json", json_path, "export JSON");
  upmf->callback([&] { rc = cmd_urn_pmf(n, csv_path, json_path); });

  auto* couple = app.add_subcommand("urn-couple",
                                    "coupled first-swap path s(2..nmax) from one urn run");
  couple->add_option("--nmax", nmax, "largest n")->required();
  couple->add_option("--seed", seed, "RNG seed")->required();
  couple->add_option("--paths", paths, "independent paths");
  couple->add_option("--out", output, "CSV output file (default stdout)");
  couple->callback([&] { rc = cmd_urn_couple(nmax, seed, paths, output); });

  auto* exch = app.add_subcommand("exchangeability", "exact exchangeability check");
  exch->add_option("n", n, "particle count (n-2 <= 12)")->required();
  exch->callback([&] { rc = cmd_exchangeability(n); });

  auto* gsample = app.add_subcommand("geom-sample", "Archimedes-distributed points");
  gsample->add_option("m", m, "point count")->required();
  gsample->add_option("--seed", seed, "RNG seed")->required();
  gsample->add_option("--out", output, "CSV output file (default stdout)");
  gsample->callback([&] { rc = cmd_geom_sample(m, seed, output); });

  auto* gnet = app.add_subcommand("geom-network", "geometric network of a point set");
  gnet->add_option("--points", input, "CSV point file (x,y per row)")->required();
  gnet->callback([&] { rc = cmd_geom_network(input); });

  auto* gexp = app.add_subcommand("geom-expect",
                                  "quadrature of the geometric swap expectation");
  gexp->add_option("m", m, "point count")->required();
  gexp->add_option("j", j, "location")->required();
  gexp->callback([&] { rc = cmd_geom_expect(m, j); });

  auto* beta = app.add_subcommand("beta", "dual evaluation of the half-integer Beta integral");
  beta->add_option("j", j, "first exponent index")->required();
  beta->add_option("m", m, "second exponent index")->required();
  beta->callback([&] { rc = cmd_beta(j, m); });

  auto* mcsub = app.add_subcommand("mc-subnet", "Monte Carlo subnetwork swap expectation");
  mcsub->add_option("n", n, "host size")->required();
  mcsub->add_option("m", m, "subnetwork size")->required();
  mcsub->add_option("j", j, "location")->required();
  mcsub->add_option("--samples", samples, "sample count")->required();
  mcsub->add_option("--seed", seed, "RNG seed")->required();
  mcsub->add_option("--workers", workers, "worker threads");
  mcsub->add_option("--json", json_path, "export estimate JSON");
  mcsub->callback([&] { rc = cmd_mc_subnet(n, m, j, samples, seed, workers, json_path); });

  auto* slaw = app.add_subcommand("swap-law", "exact law of the location-j swap count");
  slaw->add_option("n", n, "host size (<= 6)")->required();
  slaw->add_option("m", m, "subnetwork size")->required();
  slaw->add_option("j", j, "location")->required();
  slaw->add_option("--csv", csv_path, "export CSV");
  slaw->add_option("--json", json_path, "export JSON");
  slaw->callback([&] { rc = cmd_swap_law(n, m, j, csv_path, json_path); });

  auto* stat = app.add_subcommand("stationarity",
                                  "exact laws of the subnetwork's first and second swaps");
  stat->add_option("n", n, "host size (<= 6)")->required();
  stat->add_option("m", m, "subnetwork size (>= 3)")->required();
  stat->callback([&] { rc = cmd_stationarity(n, m); });

  auto* law4 = app.add_subcommand("subnet-law-m4",
                                  "empirical law of the 4-subnetwork vs the geometric law");
  law4->add_option("n", n, "host size")->required();
  law4->add_option("--samples", samples, "sample count")->required();
  law4->add_option("--seed", seed, "RNG seed")->required();
  law4->add_option("--workers", workers, "worker threads");
  law4->add_option("--bootstrap", bootstrap, "bootstrap rounds");
  law4->add_option("--json", json_path, "export JSON report");
  law4->callback([&] {
    rc = cmd_subnet_law_m4(n, samples, seed, workers, bootstrap, json_path);
  });

  auto* gstat = app.add_subcommand("geom-stationarity",
                                   "first vs second swap frequencies of the geometric network");
  gstat->add_option("m", m, "point count (>= 3)")->required();
  gstat->add_option("--samples", samples, "sample count")->required();
  gstat->add_option("--seed", seed, "RNG seed")->required();
  gstat->add_option("--workers", workers, "worker threads");
  gstat->callback([&] { rc = cmd_geom_stationarity(m, samples, seed, workers); });

  auto* diag = app.add_subcommand("diagram", "SVG wiring diagram of a network");
  diag->add_option("--input", input, "network file")->required();
  diag->add_option("--out", output, "SVG output path")->required();
  diag->callback([&] { rc = cmd_diagram(input, output); });

  auto* runcfg = app.add_subcommand("run-config", "run an experiment from a JSON spec");
  runcfg->add_option("config", input, "JSON config file")->required();
  runcfg->add_option("--log", output, "JSON-lines results log to append to");
  runcfg->callback([&] { rc = cmd_run_config(input, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; any parse problem is 2
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
