// chargelat command-line driver.
// Exit status: 0 success, 1 mathematical violation found, 2 usage/input/I-O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chargelat/chargelat.hpp"

using namespace chargelat;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

Partition read_partition(const std::string& path) {
  auto result = partition_from_json(read_json(path));
  if (auto* violations = std::get_if<std::vector<MeltingViolation>>(&result)) {
    std::ostringstream os;
    os << path << ": not a partition (" << violations->size() << " melting-rule violations; run validate)";
    throw InputError(os.str());
  }
  return std::get<Partition>(std::move(result));
}

ChargeModel model_for(const Partition& p, const std::string& rule) {
  if (rule == "auto") return ChargeModel::for_dimension(p.dim());
  for (ChargeRule r : {ChargeRule::Young2D, ChargeRule::Plane3D, ChargeRule::Solid4D, ChargeRule::OddGeneral,
                       ChargeRule::EvenGeneral}) {
    if (rule == rule_name(r)) return ChargeModel::with_rule(p.dim(), r);
  }
  throw InputError("unknown rule '" + rule + "'");
}

int cmd_validate(const std::string& input, const std::string& output) {
  auto result = partition_from_json(read_json(input));
  json out;
  int status = kOk;
  if (const auto* p = std::get_if<Partition>(&result)) {
    out = {{"valid", true}, {"n", p->dim()}, {"boxes", p->size()}};
  } else {
    json list = json::array();
    for (const auto& v : std::get<std::vector<MeltingViolation>>(result)) {
      list.push_back({{"box", to_json(v.box)}, {"missing_axis", v.axis + 1}});
    }
    out = {{"valid", false}, {"violations", list}};
    status = kViolation;
  }
  write_text(output, dump(out));
  return status;
}

int cmd_charge(const std::string& input, const std::string& output, const std::string& rule) {
  const Partition p = read_partition(input);
  write_text(output, dump(to_json(build_ledger(p, model_for(p, rule)))));
  return kOk;
}

int cmd_verify_properties(const std::string& input, const std::string& output, const std::string& rule) {
  const Partition p = read_partition(input);
  const auto report = verify_properties(p, model_for(p, rule));
  write_text(output, dump(to_json(report)));
  std::cerr << "simple_poles=" << report.simple_poles << " bijection=" << report.bijection << '\n';
  return report.ok() ? kOk : kViolation;
}

int cmd_oracle_check(const std::string& input, std::uint64_t seed, const std::string& weights_out,
                     const std::string& output, const std::string& rule) {
  const Partition p = read_partition(input);
  const auto model = model_for(p, rule);
  const auto w = generic_weights(p.dim(), seed);
  if (!weights_out.empty()) write_text(weights_out, dump(to_json(w)));
  const auto ledger = build_ledger(p, model);
  const auto oracle = rational_oracle_ledger(p, w, model);
  const bool equal = ledger == oracle;
  json out = {{"equal", equal}, {"certified_bound", w.certified_bound()}};
  if (!equal) out["oracle"] = to_json(oracle);
  out["ledger"] = to_json(ledger);
  write_text(output, dump(out));
  return equal ? kOk : kViolation;
}

int cmd_count_downsets(int d, unsigned jobs, const std::string& format, const std::string& output) {
  const auto count = count_downsets(d, jobs);
  if (format == "json") {
    write_text(output, dump(json{{"d", d}, {"count", count}}));
  } else {
    write_text(output, "d,count\n" + std::to_string(d) + "," + std::to_string(count) + "\n");
  }
  return kOk;
}

int cmd_verify_lemma(std::size_t n, int d, unsigned jobs, const std::string& output, const std::string& dump_path) {
  const auto report = verify_lemma(n, d, jobs);
  write_text(output, scatter_csv(report));
  if (!dump_path.empty()) {
    json list = json::array();
    for (const auto& v : report.violations) {
      list.push_back({{"partition", to_json(HypercubeConfig::at_origin(n, d, v.mask).to_partition())},
                      {"omega", v.omega},
                      {"member", v.member}});
    }
    write_text(dump_path, dump(list));
  }
  std::cerr << "configs=" << report.total_configs << " members=" << report.members
            << " violations=" << report.violations.size() << " claim_mismatches=" << report.claim_mismatches << '\n';
  std::cerr << (report.holds() ? "PASS" : "FAIL") << '\n';
  return report.holds() ? kOk : kViolation;
}

int cmd_sample(std::size_t n, int d, std::uint64_t per_n, std::uint64_t seed, const std::string& method,
               unsigned jobs, const std::string& output) {
  const auto report = run_mc_experiment(n, d, per_n, seed, parse_method(method), jobs);
  write_text(output, histogram_csv(report.histogram));
  std::cerr << "samples=" << report.total_samples << " above_bound=" << report.above_bound
            << " boundary_failures=" << report.boundary_failures << " lemma_violations=" << report.lemma_violations
            << '\n';
  std::cerr << (report.pass() ? "PASS" : "FAIL") << '\n';
  return report.pass() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charge functions of n-dimensional partitions"};
  app.require_subcommand(1);

  std::string input, output, rule = "auto", weights_out, dump_path, method = "sequential", format = "csv";
  std::size_t n = 0;
  int d = 0;
  std::uint64_t seed = 0, per_n = 0;
  unsigned jobs = 1;

  auto* validate = app.add_subcommand("validate", "check the melting rule");
  validate->add_option("--input", input, "partition JSON")->required();
  validate->add_option("--output", output, "report path (default stdout)");

  auto* charge = app.add_subcommand("charge", "pole-order ledger of psi(u)");
  charge->add_option("--input", input, "partition JSON")->required();
  charge->add_option("--output", output, "ledger JSON path (default stdout)");
  charge->add_option("--rule", rule, "auto|young2d|plane3d|solid4d|odd|even");

  auto* props = app.add_subcommand("verify-properties", "simple poles and boundary bijection");
  props->add_option("--input", input, "partition JSON")->required();
  props->add_option("--output", output, "report JSON path (default stdout)");
  props->add_option("--rule", rule, "auto|young2d|plane3d|solid4d|odd|even");

  auto* oracle = app.add_subcommand("oracle-check", "compare the ledger with exact rational roots");
  oracle->add_option("--input", input, "partition JSON")->required();
  oracle->add_option("--seed", seed, "weight seed")->required();
  oracle->add_option("--weights-out", weights_out, "write the drawn weights as JSON");
  oracle->add_option("--output", output, "report JSON path (default stdout)");
  oracle->add_option("--rule", rule, "auto|young2d|plane3d|solid4d|odd|even");

  auto* count = app.add_subcommand("count-downsets", "number of partitions inside HC^(d)");
  count->add_option("--d", d, "cube dimension, 1..6")->required();
  count->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  count->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--out", output, "output path (default stdout)");

  auto* lemma = app.add_subcommand("verify-lemma", "exhaustive hypercube check");
  lemma->add_option("--n", n, "even dimension >= 4")->required();
  lemma->add_option("--d", d, "cube dimension, 1..min(n, 6)")->required();
  lemma->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  lemma->add_option("--out", output, "CSV path (default stdout)");
  lemma->add_option("--dump-violations", dump_path, "JSON list of violating partitions");

  auto* sample = app.add_subcommand("sample", "Monte Carlo hypercube check");
  sample->add_option("--n", n, "even dimension >= 4")->required();
  sample->add_option("--d", d, "cube dimension, 1..min(n, 10)")->required();
  sample->add_option("--per-n", per_n, "samples per box count")->required();
  sample->add_option("--seed", seed, "random seed")->required();
  sample->add_option("--method", method, "sequential|chain")->check(CLI::IsMember({"sequential", "chain"}));
  sample->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sample->add_option("--out", output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(input, output);
    if (*charge) return cmd_charge(input, output, rule);
    if (*props) return cmd_verify_properties(input, output, rule);
    if (*oracle) return cmd_oracle_check(input, seed, weights_out, output, rule);
    if (*count) return cmd_count_downsets(d, jobs, format, output);
    if (*lemma) return cmd_verify_lemma(n, d, jobs, output, dump_path);
    if (*sample) return cmd_sample(n, d, per_n, seed, method, jobs, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
