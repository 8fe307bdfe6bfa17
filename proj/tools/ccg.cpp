// ccg — commuting graphs of matrix rings over p-adic and prime fields.
//
// Subcommands: classify, explain, table, ff-diameter, witness,
// reduce-chain, dist2. Machine output goes to stdout, diagnostics to
// stderr. Exit codes: 0 success, 1 domain/usage error, 2 budget refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ccg/classifier.hpp"
#include "ccg/graph_engine.hpp"
#include "ccg/io_json.hpp"
#include "ccg/local_fields.hpp"
#include "ccg/version.hpp"
#include "ccg/witness.hpp"

namespace {

int default_threads() {
  if (const char* env = std::getenv("CCG_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ccg::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  ccg::Json j;
  in >> j;
  return j;
}

std::string verdict_human(const ccg::DiameterVerdict& v) {
  std::ostringstream os;
  os << "Gamma(Q_" << v.p << "," << v.n << "): ";
  if (!v.connected) {
    os << "disconnected";
    if (v.nonclique_note) os << " (" << *v.nonclique_note << ")";
  } else if (v.exact()) {
    os << "connected, diameter = " << v.bounds.lo;
  } else {
    os << "connected, diameter in [" << v.bounds.lo << ", " << v.bounds.hi << "]";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting graphs of matrix rings over Q_p and F_p"};
  app.set_version_flag("--version", std::string("ccg ") + ccg::kVersion + "\n" + ccg::kGlyphConventions);
  app.require_subcommand(1);

  // classify
  std::uint64_t p = 2;
  int n = 2;
  bool as_json = false, explain_trace = false;
  auto* classify = app.add_subcommand("classify", "connectivity and diameter bounds for Gamma(Q_p,n)");
  classify->add_option("-p", p, "prime p")->required();
  classify->add_option("-n", n, "matrix size n >= 2")->required();
  classify->add_flag("--json", as_json, "emit JSON");
  classify->add_flag("--explain", explain_trace, "print the rule trace");

  // explain
  auto* explain = app.add_subcommand("explain", "evidence lines for the local-field predicates at (p,n)");
  explain->add_option("-p", p, "prime p")->required();
  explain->add_option("-n", n, "matrix size n >= 2")->required();

  // table
  std::string ns_csv, ps_csv, format = "markdown";
  auto* table = app.add_subcommand("table", "render the verdict grid (defaults reproduce the known-results table)");
  table->add_option("--n", ns_csv, "comma-separated n values");
  table->add_option("--p", ps_csv, "comma-separated primes");
  table->add_option("--format", format, "markdown | tex | json")->check(CLI::IsMember({"markdown", "tex", "json"}));

  // ff-diameter
  int threads = default_threads();
  bool timing = false;
  auto* ffd = app.add_subcommand("ff-diameter", "exact component/diameter structure of Gamma(F_p,n) by brute force");
  ffd->add_option("-p", p, "prime p")->required();
  ffd->add_option("-n", n, "matrix size n >= 2")->required();
  ffd->add_option("--threads", threads, "worker threads (default: CCG_THREADS or hardware)");
  ffd->add_flag("--json", as_json, "emit JSON");
  ffd->add_flag("--timing", timing, "include wall time in JSON output");

  // witness
  std::uint64_t characteristic = 3, trials = 1000, seed = 1, budget = 512;
  int q = 7;
  auto* witness = app.add_subcommand("witness", "build and verify the twist matrix U, the block matrix S and the probes");
  witness->add_option("--char", characteristic, "field characteristic (0 for Q)");
  witness->add_option("--q", q, "prime degree q");
  witness->add_option("--trials", trials, "probe trials");
  witness->add_option("--seed", seed, "RNG seed");
  witness->add_option("--budget", budget, "U-search candidate budget");
  witness->add_flag("--json", as_json, "emit JSON (includes U, S, A1)");

  // reduce-chain
  std::string chain_path;
  auto* reduce = app.add_subcommand("reduce-chain", "reduce a commuting chain over Q to one over F_p");
  reduce->add_option("chain", chain_path, "chain JSON file")->required();
  reduce->add_option("-p", p, "prime p")->required();

  // dist2
  std::string file_a, file_b;
  auto* dist2 = app.add_subcommand("dist2", "decide d(A,B) <= 2 via the joint-commutant oracle");
  dist2->add_option("A", file_a, "matrix JSON file")->required();
  dist2->add_option("B", file_b, "matrix JSON file")->required();
  dist2->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      auto v = ccg::classify(p, n);
      if (as_json) {
        std::cout << ccg::verdict_to_json(v).dump(2) << "\n";
      } else {
        std::cout << verdict_human(v) << "\n";
        if (explain_trace)
          for (const auto& t : v.trace) {
            std::cout << "  " << t.rule << ": " << t.citation << " [" << t.detail << "]";
            if (!t.disconnects) std::cout << " -> [" << t.contribution.lo << "," << t.contribution.hi << "]";
            std::cout << "\n";
          }
      }
      return 0;
    }

    if (*explain) {
      std::uint64_t un = static_cast<std::uint64_t>(n);
      std::cout << "primitive degree-" << n << " extension of Q_" << p
                << (ccg::primitive_extension_exists(p, un) ? " exists" : " does not exist")
                << " (n " << (ccg::is_prime_u64(un) ? "prime" : ccg::is_power_of(p, un) ? "is a power of p" : "is neither prime nor a power of p")
                << ")\n";
      std::cout << "Gamma(Q_" << p << "," << n << ") is " << (ccg::is_connected(p, un) ? "connected" : "disconnected")
                << "\n";
      std::cout << "small-prime-factor criterion: " << (ccg::small_prime_factor_criterion(p, un) ? "holds" : "fails")
                << " (largest prime factor " << ccg::largest_prime_factor(un) << ")\n";
      for (const auto& [pq, e] : ccg::factorize_u64(un)) {
        (void)e;
        if (pq == p || pq * pq >= un) continue;
        auto ca = ccg::condition_a(p, un, pq);
        auto cb = ccg::condition_b(p, pq);
        auto cc = ccg::condition_c(p, un);
        std::cout << "candidate q = " << pq << ":\n";
        for (const auto* c : {&ca, &cb, &cc}) {
          std::cout << "  condition (" << c->tag << ") " << (c->holds ? "holds" : "fails") << ":";
          for (const auto& line : c->evidence) std::cout << " " << line << ";";
          std::cout << "\n";
        }
      }
      if (p == 2 && n % 2 == 0 && ccg::is_prime_u64(un / 2) && un / 2 >= 7) {
        std::cout << "n = 2q with q = " << un / 2 << " >= 7 prime: diameter 6 instance over Q_2\n";
        std::cout << "  ramified quadratic extensions of the unramified degree-q field: "
                  << ccg::count_ramified_quadratic(static_cast<unsigned>(un / 2)) << "\n";
        if (n == 14)
          std::cout << "  concrete realization: Galois closure of the field defined by the degree-14 polynomial ["
                    << ccg::q2_14_polynomial_provenance() << "] with group C2 wr C7\n";
      }
      for (const auto& t : ccg::classify(p, n).trace) {
        std::cout << "rule " << t.rule << ": " << t.citation << " [" << t.detail << "]";
        if (!t.disconnects) std::cout << " -> [" << t.contribution.lo << "," << t.contribution.hi << "]";
        std::cout << "\n";
      }
      return 0;
    }

    if (*table) {
      auto parse_csv = [](const std::string& csv) {
        std::vector<std::uint64_t> out;
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
        return out;
      };
      std::vector<int> ns(ccg::table1_default_ns());
      std::vector<std::uint64_t> ps(ccg::table1_default_ps());
      if (!ns_csv.empty()) {
        ns.clear();
        for (auto v : parse_csv(ns_csv)) ns.push_back(static_cast<int>(v));
      }
      if (!ps_csv.empty()) ps = parse_csv(ps_csv);
      ccg::TableFormat fmt = format == "tex"    ? ccg::TableFormat::kTex
                             : format == "json" ? ccg::TableFormat::kJson
                                                : ccg::TableFormat::kMarkdown;
      std::cout << ccg::render_table(ns, ps, fmt);
      return 0;
    }

    if (*ffd) {
      ccg::GraphBudget budget_cfg;
      budget_cfg.threads = threads;
      auto s = ccg::ff_graph_summary(p, n, budget_cfg);
      if (as_json) {
        std::cout << ccg::summary_to_json(s, timing).dump(2) << "\n";
      } else {
        std::cout << "Gamma(F_" << p << "," << n << "): " << s.vertex_count << " vertices, " << s.class_count
                  << " commutant classes, " << s.component_count << " component(s)\n";
        if (s.connected)
          std::cout << "connected, diameter " << s.diameter << "\n";
        else
          std::cout << "disconnected" << (s.all_components_cliques ? ", every component a clique" : "") << "\n";
        for (std::size_t i = 0; i < s.components.size(); ++i)
          std::cout << "  component " << i << ": " << s.components[i].vertices << " vertices, "
                    << s.components[i].classes << " classes, diameter " << s.components[i].diameter
                    << (s.components[i].clique ? " (clique)" : "") << "\n";
        std::cerr << "wall time: " << s.wall_time_seconds << " s\n";
      }
      return 0;
    }

    if (*witness) {
      auto emit = [&](const auto& run) {
        const ccg::WitnessRunReport& r = run.report;
        if (as_json) {
          std::cout << ccg::witness_run_to_json(run, true).dump(2) << "\n";
          return r.u_found ? 0 : 1;
        }
        std::cout << "field " << r.field << ", q = " << r.q << ", modulus " << r.modulus << "\n";
        std::cout << "twist space dimension " << r.twist_dimension << "\n";
        if (!r.u_found) {
          std::cout << "U: not found within budget (" << r.search.most_frequent_failure() << ")\n";
          return 1;
        }
        std::cout << "U found after " << r.search.candidates << " candidate(s); U^q scalar: "
                  << (r.checks.qth_power_scalar ? "yes" : "no") << ", U(I+U) invertible: "
                  << (r.checks.shifted_product_invertible ? "yes" : "no") << ", direct-sum rank "
                  << r.direct_sum_rank_value << ", twist relation on K-basis: "
                  << (r.twist_relation_on_basis ? "yes" : "no") << "\n";
        std::cout << "S invertible: " << (r.s_invertible ? "yes" : "no") << "\n";
        std::cout << "probe: " << r.probe.failures << " commuting pair(s) in " << r.probe.trials
                  << " trials (seed " << r.probe.seed << "); equal-pair probe: " << r.probe_equal_pair.failures
                  << "/" << r.probe_equal_pair.trials << "\n";
        std::cout << "ambient generator degree " << r.ambient_degree << "; joint commutant dim "
                  << r.distance.joint_commutant_dim << " (distance <= 2: "
                  << (r.distance.within_distance_2 ? "yes" : "no") << ")\n";
        return 0;
      };
      return characteristic == 0 ? emit(ccg::witness_run_q(q, trials, seed, budget))
                                 : emit(ccg::witness_run_fp(characteristic, q, trials, seed, budget));
    }

    if (*reduce) {
      auto any = ccg::chain_from_json(load_json(chain_path));
      if (!std::holds_alternative<ccg::CommutingChain<ccg::RationalField>>(any))
        throw std::invalid_argument("reduce-chain expects a chain over Q");
      const auto& chain = std::get<ccg::CommutingChain<ccg::RationalField>>(any);
      auto check = ccg::verify_chain(chain);
      if (!check) throw std::domain_error("input is not a commuting chain: " + check.reason + " at index " +
                                          std::to_string(check.first_failure));
      auto reduced = ccg::reduce_chain(chain, p);
      std::cout << ccg::chain_to_json(reduced).dump(2) << "\n";
      return 0;
    }

    if (*dist2) {
      auto a = ccg::matrix_from_json(load_json(file_a));
      auto b = ccg::matrix_from_json(load_json(file_b));
      bool result = false;
      std::size_t joint_dim = 0;
      auto run = [&](const auto& ma, const auto& mb) {
        if (ma.is_scalar() || mb.is_scalar()) throw std::domain_error("dist2: scalar matrices are not vertices");
        joint_dim = ccg::joint_commutant_basis(ma, mb).dimension();
        result = joint_dim >= 2;
      };
      if (std::holds_alternative<ccg::Matrix<ccg::RationalField>>(a)) {
        if (!std::holds_alternative<ccg::Matrix<ccg::RationalField>>(b))
          throw std::invalid_argument("dist2: matrices live over different fields");
        run(std::get<ccg::Matrix<ccg::RationalField>>(a), std::get<ccg::Matrix<ccg::RationalField>>(b));
      } else {
        if (!std::holds_alternative<ccg::Matrix<ccg::PrimeField>>(b))
          throw std::invalid_argument("dist2: matrices live over different fields");
        run(std::get<ccg::Matrix<ccg::PrimeField>>(a), std::get<ccg::Matrix<ccg::PrimeField>>(b));
      }
      if (as_json) {
        ccg::Json j;
        j["distance_at_most_2"] = result;
        j["joint_commutant_dimension"] = joint_dim;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (result ? "true" : "false") << "\n";
      }
      return 0;
    }
  } catch (const ccg::BudgetExceeded& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
