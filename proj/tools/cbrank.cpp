// cbrank: Schubert products, conformal-blocks ranks and theorem sweeps.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or input error,
// 3 internal inconsistency (negative structure constant), 4 I/O failure.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qschubert/conformal_blocks.hpp"
#include "qschubert/report.hpp"
#include "qschubert/sweep.hpp"
#include "qschubert/text.hpp"

namespace {

using namespace qschubert;

enum ExitCode : int { kOk = 0, kVerifyFail = 1, kUsage = 2, kInconsistent = 3, kIoError = 4 };

GrassmannianContext parse_grassmannian(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected --gr k,N, got '" + s + "'");
  return GrassmannianContext(detail::parse_int(std::string_view(s).substr(0, comma), s),
                             detail::parse_int(std::string_view(s).substr(comma + 1), s));
}

std::vector<Partition> parse_factors(const std::vector<std::string>& texts, const GrassmannianContext& ctx) {
  std::vector<Partition> factors;
  for (const auto& t : texts) {
    Partition p = parse_partition(t);
    if (!fits_in_box(p, ctx))
      throw std::invalid_argument(format_partition(p) + " does not fit the " + to_string(ctx) + " box");
    factors.push_back(std::move(p));
  }
  return factors;
}

int cmd_product(const std::string& gr, const std::vector<std::string>& texts, int power, bool quantum) {
  const GrassmannianContext ctx = parse_grassmannian(gr);
  if (texts.empty()) throw std::invalid_argument("at least one factor is required");
  const std::vector<Partition> factors = parse_factors(texts, ctx);
  if (power < 0) throw std::invalid_argument("--power must be nonnegative");
  if (quantum) {
    QuantumElement x = QuantumElement::unit(ctx);
    for (const auto& f : factors) x = qmul(x, QuantumElement::schubert_class(ctx, f));
    x = qpower(x, power);
    for (const auto& [key, coeff] : x.terms().sorted())
      std::cout << coeff << "*q^" << key.q_degree << '*' << format_partition(key.shape) << '\n';
  } else {
    CohomologyElement x = CohomologyElement::unit(ctx);
    for (const auto& f : factors) x = giambelli_mul(x, CohomologyElement::schubert_class(ctx, f));
    x = qschubert::power(x, power);
    for (const auto& [shape, coeff] : x.terms().sorted()) std::cout << coeff << '*' << format_partition(shape) << '\n';
  }
  return kOk;
}

int cmd_rank(int n, int level, const std::vector<std::string>& texts, int count, bool early_exit) {
  RankQuery q{n, level, {}};
  for (const auto& t : texts) q.weights.push_back(parse_weight(t, n));
  if (count >= 0) {
    if (q.weights.size() != 1) throw std::invalid_argument("--count needs exactly one --weight");
    q.weights.assign(static_cast<std::size_t>(count), q.weights.front());
  } else if (q.weights.size() == 1) {
    q.weights.assign(static_cast<std::size_t>(n), q.weights.front());
  }
  const RankResult r = rank(q, {early_exit});
  std::cout << rank_result_json(q, r).dump() << '\n';
  return kOk;
}

std::string default_checkpoint(const SweepConfig& c) {
  const char* dir = std::getenv("QSCHUBERT_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream name;
  name << dir << "/verify-n" << c.n_range.lo << '-' << c.n_range.hi << "-l" << c.level_range.lo << '-'
       << c.level_range.hi << (c.early_exit ? "-early" : "-full") << ".json";
  return name.str();
}

int cmd_verify(SweepConfig config, const std::string& n_text, const std::string& level_text, bool quiet) {
  config.n_range = parse_range(n_text);
  config.level_range = parse_range(level_text);
  if (config.checkpoint_path.empty()) config.checkpoint_path = default_checkpoint(config);
  const SweepOutcome outcome = run_sweep(config, quiet ? nullptr : &std::cerr);
  if (config.output_path.empty()) std::cout << outcome.report.dump(2) << '\n';
  if (!quiet)
    std::cerr << "verdict " << (outcome.pass ? "PASS" : "FAIL") << " (" << outcome.cells_computed << " computed, "
              << outcome.cells_resumed << " resumed)\n";
  return outcome.pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus on Grassmannians and sl_n conformal-blocks ranks"};
  app.require_subcommand(1);

  std::string gr;
  int power = 1;
  auto* product = app.add_subcommand("product", "classical product of Schubert classes in H*(Gr(k,N))");
  auto* qproduct = app.add_subcommand("qproduct", "quantum product of Schubert classes in QH*(Gr(k,N))");
  for (auto* sub : {product, qproduct}) {
    sub->add_option("--gr", gr, "Grassmannian as k,N")->required();
    // Factors are taken from the leftover arguments: a vector option would
    // split "[2,1]" into two values.
    sub->allow_extras();
    sub->footer("Factors: one or more partitions such as \"[2,1]\".");
    sub->add_option("--power", power, "raise the product to this power");
  }

  int n = 0, level = 0, count = -1;
  std::vector<std::string> weights;
  bool rank_early_exit = false;
  auto* rank_cmd = app.add_subcommand("rank", "rank of V(sl_n, weights, level) by Witten's dictionary");
  rank_cmd->add_option("--n", n, "sl_n")->required();
  rank_cmd->add_option("--level", level, "level")->required();
  rank_cmd->add_option("--weight", weights, "weight: (c1,...), w_i, a*w_i+b*w_j or [partition]")->required();
  rank_cmd->add_option("--count", count, "number of copies of a single weight (default n)");
  rank_cmd->add_flag("--early-exit", rank_early_exit, "stop once the rank is known to exceed 1");

  SweepConfig config;
  std::string n_text, level_text;
  bool no_early_exit = false, quiet = false;
  auto* verify = app.add_subcommand("verify", "check rank == 1 <=> weight in Lambda over an (n, level) grid");
  verify->add_option("--n", n_text, "n or range a..b")->required();
  verify->add_option("--level", level_text, "level or range a..b")->required();
  verify->add_option("-j,--jobs", config.parallelism, "worker threads per cell");
  verify->add_flag("--early-exit", config.early_exit, "stop rank computations once the rank exceeds 1 (default)");
  verify->add_flag("--no-early-exit", no_early_exit, "compute every rank exactly");
  verify->add_option("-o,--output", config.output_path, "JSON report path (default stdout)");
  verify->add_option("--checkpoint", config.checkpoint_path,
                     "checkpoint file; finished cells are reused (default $QSCHUBERT_CACHE_DIR/...)");
  verify->add_option("--csv", config.csv_path, "also write the records as CSV");
  verify->add_flag("-q,--quiet", quiet, "no progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (product->parsed()) return cmd_product(gr, product->remaining(), power, false);
    if (qproduct->parsed()) return cmd_product(gr, qproduct->remaining(), power, true);
    if (rank_cmd->parsed()) return cmd_rank(n, level, weights, count, rank_early_exit);
    if (verify->parsed()) {
      if (no_early_exit) config.early_exit = false;
      return cmd_verify(config, n_text, level_text, quiet);
    }
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
