// Command-line front end: sizing, hash contest, filter comparison, URL
// dedup, the URL gateway, classifier training, key generation and snapshot
// tooling.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 corrupt input data.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sabf/bench.hpp"
#include "sabf/counting_bloom.hpp"
#include "sabf/cuckoo_filter.hpp"
#include "sabf/filter2d.hpp"
#include "sabf/kirsch_bloom.hpp"
#include "sabf/report.hpp"
#include "sabf/sizing.hpp"
#include "sabf/url/csv_ingest.hpp"
#include "sabf/url/experiments.hpp"
#include "sabf/url/gateway.hpp"
#include "sabf/url/linear_classifier.hpp"
#include "sabf/url/prediction_classifier.hpp"
#include "sabf/workload.hpp"

namespace {

using namespace sabf;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCorrupt = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_sizing(std::uint64_t n, double epsilon) {
  if (n == 0) throw UsageError("--n must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("--epsilon must lie strictly between 0 and 1");
}

HashFunctionId hash_flag(const std::string& name) {
  auto fn = parse_hash_name(name);
  if (!fn) throw UsageError("unknown hash function '" + name + "'");
  return *fn;
}

std::vector<WorkloadKind> workload_flags(const std::vector<std::string>& names) {
  std::vector<WorkloadKind> out;
  for (const auto& n : names) {
    auto kind = parse_workload(n);
    if (!kind) throw UsageError("unknown workload '" + n + "'");
    out.push_back(*kind);
  }
  return out;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_lines(in);
}

void emit_report(const std::string& path, const std::vector<MetricsReport>& rows) {
  std::cout << format_table(rows);
  if (!path.empty()) write_report(path, rows);
}

void print_config(std::ostream& os, const Filter2DConfig& c) {
  os << std::fixed << std::setprecision(4) << "n            " << c.n << '\n'
     << "epsilon      " << std::defaultfloat << std::setprecision(6) << c.epsilon << '\n'
     << "m_bits       " << c.m << '\n'
     << "m_MiB        " << std::fixed << std::setprecision(4) << static_cast<double>(c.m) / 8.0 / kMiB << '\n'
     << "lambda       " << c.lambda << '\n'
     << "hash_calls   " << c.hash_calls << '\n'
     << "rows         " << c.rows << '\n'
     << "cols         " << c.cols << '\n'
     << "beta         " << c.beta << '\n'
     << "hash         " << hash_name(c.hash_fn) << '\n'
     << "alloc_MiB    " << static_cast<double>(c.memory_bytes()) / kMiB << '\n';
}

// --- sizing ---------------------------------------------------------------

struct SizingArgs {
  std::uint64_t n = 10'000'000;
  double epsilon = 0.001;
  std::string hash = "MMurmur";
};

int run_sizing(const SizingArgs& a) {
  check_sizing(a.n, a.epsilon);
  print_config(std::cout, size_params(a.n, a.epsilon, hash_flag(a.hash)));
  std::cout << "kirsch_MiB   " << static_cast<double>(KirschBloom::memory_bytes_for(a.n, a.epsilon)) / kMiB << '\n'
            << "cbf_MiB      " << static_cast<double>(CountingBloom::memory_bytes_for(a.n, a.epsilon)) / kMiB << '\n'
            << "cuckoo_MiB   " << static_cast<double>(CuckooFilter::memory_bytes_for(a.n)) / kMiB << '\n';
  return kExitOk;
}

// --- hash-race / compare ----------------------------------------------------

struct BenchArgs {
  std::uint64_t n = 1'000'000;
  double epsilon = 0.001;
  std::size_t queries = 0;  // 0: same as n
  std::vector<std::string> workloads{"same", "mixed", "disjoint", "random"};
  std::vector<std::string> filters{"filter2d", "kirsch", "cbf", "cuckoo"};
  std::string hash = "MMurmur";
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::string report;
};

CompareOptions compare_options(const BenchArgs& a) {
  check_sizing(a.n, a.epsilon);
  CompareOptions o;
  o.n = a.n;
  o.epsilon = a.epsilon;
  o.queries = a.queries == 0 ? a.n : a.queries;
  if (o.queries % 2 != 0) throw UsageError("--queries must be even (mixed workload is half members)");
  o.workloads = workload_flags(a.workloads);
  o.seed = a.seed;
  o.jobs = a.jobs;
  return o;
}

int run_hash_race(const BenchArgs& a) {
  std::vector<FilterSpec> specs;
  for (auto fn : kAllHashFunctions) specs.push_back({FilterKind::Filter2D, fn});
  emit_report(a.report, compare_filters(specs, compare_options(a)));
  return kExitOk;
}

int run_compare(const BenchArgs& a) {
  std::vector<FilterSpec> specs;
  for (const auto& name : a.filters) {
    auto kind = parse_filter_kind(name);
    if (!kind) throw UsageError("unknown filter '" + name + "'");
    specs.push_back({*kind, hash_flag(a.hash)});
  }
  const auto options = compare_options(a);
  const auto rows = compare_filters(specs, options);
  std::cout << "memory for n=" << a.n << " epsilon=" << a.epsilon << '\n';
  for (const auto& r : rows)
    if (r.workload == "insert")
      std::cout << "  " << std::left << std::setw(24) << r.filter << std::fixed << std::setprecision(4)
                << static_cast<double>(r.memory_bytes) / kMiB << " MiB\n";
  std::cout << '\n';
  emit_report(a.report, rows);
  return kExitOk;
}

// --- dedup ------------------------------------------------------------------

struct DedupArgs {
  std::string input;
  std::string output;
  double epsilon = 0.001;
  std::uint64_t capacity = 0;
  std::string filter = "filter2d";
  std::string hash = "MMurmur";
  std::string report;
};

int run_dedup(const DedupArgs& a) {
  check_sizing(1, a.epsilon);
  url::DedupOptions o;
  o.epsilon = a.epsilon;
  if (a.capacity > 0) o.capacity = a.capacity;
  auto kind = parse_filter_kind(a.filter);
  if (!kind) throw UsageError("unknown filter '" + a.filter + "'");
  o.filter = {*kind, hash_flag(a.hash)};

  const auto urls = read_lines(a.input);
  const auto result = url::dedup(urls, o);

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw std::ios_base::failure("cannot write " + a.output);
  }
  std::ostream& out = a.output.empty() ? std::cout : file;
  for (const auto& u : result.unique) out << u << '\n';

  const auto& m = result.metrics;
  std::cerr << "dedup: " << urls.size() << " in, " << result.unique.size() << " out, " << result.suppressed_unique
            << " unique suppressed, fpp=" << m.fpp << ", accuracy=" << m.accuracy_pct << "%, "
            << static_cast<double>(m.memory_bytes) / 1024.0 << " KiB, " << m.elapsed_s << " s\n";
  if (!a.report.empty()) write_report(a.report, {m});
  return kExitOk;
}

// --- gateway ----------------------------------------------------------------

struct GatewayArgs {
  std::string mal_snapshot;
  std::string ben_snapshot;
  std::string state_dir;
  std::string save_dir;
  std::string predictions;
  std::string model;
  std::string dataset;
  std::string input;
  std::uint64_t capacity = 1'000'000;
  double epsilon = 0.001;
  std::string hash = "MMurmur";
};

int run_gateway(const GatewayArgs& a) {
  check_sizing(a.capacity, a.epsilon);
  if (a.predictions.empty() == a.model.empty()) throw UsageError("give exactly one of --predictions or --model");
  if (!a.model.empty() && a.dataset.empty()) throw UsageError("--model needs --dataset to supply URL features");
  if (!a.state_dir.empty() && (!a.mal_snapshot.empty() || !a.ben_snapshot.empty()))
    throw UsageError("--state-dir cannot be combined with --mal-snapshot/--ben-snapshot");

  std::shared_ptr<const url::Classifier> classifier;
  if (!a.predictions.empty()) {
    try {
      classifier = std::make_shared<url::PredictionClassifier>(url::PredictionClassifier::load(a.predictions));
    } catch (const std::invalid_argument& e) {
      throw DecodeError(e.what());
    }
  } else {
    try {
      classifier = std::make_shared<url::LinearClassifier>(url::LinearClassifier::load(a.model));
    } catch (const nlohmann::json::exception& e) {
      throw DecodeError(std::string("bad model file: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw DecodeError(std::string("bad model file: ") + e.what());
    }
  }

  url::GatewayConfig cfg{a.capacity, a.epsilon, hash_flag(a.hash)};
  auto fresh = [&] { return Filter2D(size_params(cfg.capacity, cfg.epsilon, cfg.hash_fn)); };
  std::unique_ptr<url::Gateway> gw;
  if (!a.state_dir.empty() && std::filesystem::exists(std::filesystem::path(a.state_dir) / "gateway.state")) {
    gw = std::make_unique<url::Gateway>(url::Gateway::load(a.state_dir, classifier));
  } else {
    auto mal = a.mal_snapshot.empty() ? fresh() : Filter2D::deserialize(url::read_file_bytes(a.mal_snapshot));
    auto ben = a.ben_snapshot.empty() ? fresh() : Filter2D::deserialize(url::read_file_bytes(a.ben_snapshot));
    gw = std::make_unique<url::Gateway>(std::move(mal), std::move(ben), classifier);
  }

  std::vector<url::UrlRecord> records;
  if (!a.dataset.empty()) {
    url::IngestOptions io;
    io.feature_count.reset();
    auto ingested = url::ingest_csv(std::filesystem::path(a.dataset), io);
    if (!ingested.has_url_column) throw UsageError("--dataset must carry a url column");
    records = std::move(ingested.records);
  } else {
    std::vector<std::string> urls;
    if (a.input.empty() || a.input == "-") {
      urls = read_lines(std::cin);
    } else {
      urls = read_lines(a.input);
    }
    for (auto& u : urls) records.push_back({std::move(u), {}, std::nullopt});
  }

  for (const auto& r : records) {
    const auto v = gw->check_url(r);
    std::cout << url::verdict_action(v) << '\t' << url::verdict_source(v) << '\t' << r.url << '\n';
  }
  const auto& c = gw->counters();
  std::cerr << "gateway: queries=" << c.queries << " malignant_hits=" << c.malignant_filter_hits
            << " benign_hits=" << c.benign_filter_hits << " classifier_invocations=" << c.classifier_invocations
            << '\n';

  const std::string save = a.save_dir.empty() ? a.state_dir : a.save_dir;
  if (!save.empty()) gw->save(save);
  return kExitOk;
}

// --- train ------------------------------------------------------------------

struct TrainArgs {
  std::string data;
  std::uint64_t seed = 42;
  std::size_t epochs = 300;
  double learning_rate = 0.5;
  bool any_feature_count = false;
  std::string model_out;
};

int run_train(const TrainArgs& a) {
  url::IngestOptions io;
  if (a.any_feature_count) io.feature_count.reset();
  const auto ingested = url::ingest_csv(std::filesystem::path(a.data), io);
  std::cout << "records " << ingested.records.size() << " (rejected " << ingested.rejected_rows << ", features "
            << ingested.feature_count << " padded to " << ingested.padded_length << ")\n";
  url::TrainResult result;
  try {
    result = url::train_baseline(ingested.records, {a.epochs, a.learning_rate, a.seed});
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
  const auto& r = result.report;
  std::cout << std::fixed << std::setprecision(4) << "split       train " << r.sizes.train << " / validation "
            << r.sizes.validation << " / test " << r.sizes.test << '\n'
            << "train       accuracy " << r.train.accuracy << "%  loss " << r.train.loss << '\n'
            << "validation  accuracy " << r.validation.accuracy << "%  loss " << r.validation.loss << '\n'
            << "test        accuracy " << r.test.accuracy << "%  loss " << r.test.loss << '\n';
  if (!a.model_out.empty()) result.model.save(a.model_out);
  return kExitOk;
}

// --- gen-data ---------------------------------------------------------------

struct GenArgs {
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::string kind;  // empty: plain corpus
  std::size_t inserted = 0;
  std::string output;
};

int run_gen_data(const GenArgs& a) {
  if (a.count == 0) throw UsageError("--count must be positive");
  KeyCorpus corpus;
  if (a.kind.empty()) {
    corpus = gen_keys(a.count, a.seed);
  } else {
    auto kind = parse_workload(a.kind);
    if (!kind) throw UsageError("unknown workload '" + a.kind + "'");
    if (*kind == WorkloadKind::Mixed && a.count % 2 != 0) throw UsageError("mixed workload needs an even --count");
    if (a.inserted == 0) throw UsageError("--kind needs --inserted (size of the inserted corpus)");
    const auto inserted = gen_keys(a.inserted, a.seed);
    corpus = build_workload(inserted, *kind, a.count, a.seed + 1);
  }
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw std::ios_base::failure("cannot write " + a.output);
  }
  std::ostream& out = a.output.empty() ? std::cout : file;
  for (const auto& k : corpus.keys) out << k << '\n';
  return kExitOk;
}

// --- snapshot ---------------------------------------------------------------

struct SnapshotArgs {
  std::string input;
  std::string file;
  std::uint64_t n = 0;
  double epsilon = 0.001;
  std::string hash = "MMurmur";
};

int run_snapshot_create(const SnapshotArgs& a) {
  const auto keys = read_lines(a.input);
  const std::uint64_t n = a.n == 0 ? std::max<std::uint64_t>(keys.size(), 1) : a.n;
  check_sizing(n, a.epsilon);
  Filter2D filter(size_params(n, a.epsilon, hash_flag(a.hash)));
  for (const auto& k : keys) filter.insert(k);
  url::write_file_bytes(a.file, filter.serialize());
  std::cout << "wrote " << a.file << " with " << filter.inserted_count() << " keys\n";
  return kExitOk;
}

int run_snapshot_inspect(const SnapshotArgs& a) {
  const auto filter = Filter2D::deserialize(url::read_file_bytes(a.file));
  std::cout << "checksum     ok\n";
  print_config(std::cout, filter.config());
  std::cout << "inserted     " << filter.inserted_count() << '\n'
            << "fill_ratio   " << std::setprecision(6) << filter.fill_ratio() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-adjusting two-dimensional Bloom filter toolkit"};
  app.require_subcommand(1);
  std::uint64_t global_seed = 42;

  SizingArgs sizing;
  auto* cmd_sizing = app.add_subcommand("sizing", "Print filter sizing for (n, epsilon)");
  cmd_sizing->add_option("--n", sizing.n, "Expected item count");
  cmd_sizing->add_option("--epsilon", sizing.epsilon, "Desired false positive probability");
  cmd_sizing->add_option("--hash", sizing.hash, "Hash function");

  BenchArgs race;
  auto* cmd_race = app.add_subcommand("hash-race", "Run every hash function through Filter2D over the workloads");
  BenchArgs cmp;
  auto* cmd_compare = app.add_subcommand("compare", "Compare Filter2D with the baseline filters");
  for (auto [cmd, args] : {std::pair{cmd_race, &race}, std::pair{cmd_compare, &cmp}}) {
    cmd->add_option("--n", args->n, "Inserted key count");
    cmd->add_option("--epsilon", args->epsilon, "Desired false positive probability");
    cmd->add_option("--queries", args->queries, "Queries per workload (default: n)");
    cmd->add_option("--workloads", args->workloads, "same, mixed, disjoint, random")->delimiter(',');
    cmd->add_option("--seed", global_seed, "Random seed");
    cmd->add_option("--jobs", args->jobs, "Filters benchmarked in parallel")->check(CLI::Range(1u, 256u));
    cmd->add_option("--report", args->report, "Write a JSON report here");
  }
  cmd_compare->add_option("--filters", cmp.filters, "filter2d, kirsch, cbf, cuckoo")->delimiter(',');
  cmd_compare->add_option("--hash", cmp.hash, "Hash function for Filter2D");

  DedupArgs dd;
  auto* cmd_dedup = app.add_subcommand("dedup", "Remove duplicate lines with a filter");
  cmd_dedup->add_option("--input", dd.input, "Newline-delimited URLs")->required();
  cmd_dedup->add_option("--output", dd.output, "Unique URLs (default: stdout)");
  cmd_dedup->add_option("--epsilon", dd.epsilon, "Desired false positive probability");
  cmd_dedup->add_option("--capacity", dd.capacity, "Filter capacity (default: input line count)");
  cmd_dedup->add_option("--filter", dd.filter, "filter2d, kirsch, cbf, cuckoo");
  cmd_dedup->add_option("--hash", dd.hash, "Hash function for Filter2D");
  cmd_dedup->add_option("--report", dd.report, "Write a JSON report here");

  GatewayArgs gw;
  auto* cmd_gateway = app.add_subcommand("gateway", "Classify URLs through the malignant/benign filter gate");
  cmd_gateway->add_option("--mal-snapshot", gw.mal_snapshot, "Malignant filter snapshot");
  cmd_gateway->add_option("--ben-snapshot", gw.ben_snapshot, "Benign filter snapshot");
  cmd_gateway->add_option("--state-dir", gw.state_dir, "Load (if present) and save gateway state here");
  cmd_gateway->add_option("--save-dir", gw.save_dir, "Save gateway state here after the run");
  cmd_gateway->add_option("--predictions", gw.predictions, "url,score file from an external model");
  cmd_gateway->add_option("--model", gw.model, "Linear model trained by the train command");
  cmd_gateway->add_option("--dataset", gw.dataset, "CSV with url and feature columns (with --model)");
  cmd_gateway->add_option("--input", gw.input, "URL list (default: stdin)");
  cmd_gateway->add_option("--capacity", gw.capacity, "Capacity of freshly created filters");
  cmd_gateway->add_option("--epsilon", gw.epsilon, "False positive probability of fresh filters");
  cmd_gateway->add_option("--hash", gw.hash, "Hash function of fresh filters");

  TrainArgs tr;
  auto* cmd_train = app.add_subcommand("train", "Train the baseline logistic-regression URL classifier");
  cmd_train->add_option("--data", tr.data, "Labelled URL feature CSV")->required();
  cmd_train->add_option("--seed", global_seed, "Random seed");
  cmd_train->add_option("--epochs", tr.epochs, "Gradient descent epochs");
  cmd_train->add_option("--learning-rate", tr.learning_rate, "Step size");
  cmd_train->add_flag("--any-feature-count", tr.any_feature_count, "Accept any number of feature columns");
  cmd_train->add_option("--model-out", tr.model_out, "Save the trained model (JSON)");

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen-data", "Generate distinct random keys");
  cmd_gen->add_option("--count", gen.count, "Number of keys");
  cmd_gen->add_option("--seed", global_seed, "Random seed");
  cmd_gen->add_option("--kind", gen.kind, "Emit a same/mixed/disjoint/random workload instead");
  cmd_gen->add_option("--inserted", gen.inserted, "Inserted corpus size for --kind");
  cmd_gen->add_option("--output", gen.output, "Output file (default: stdout)");

  SnapshotArgs snap;
  auto* cmd_snapshot = app.add_subcommand("snapshot", "Create or inspect Filter2D snapshots");
  cmd_snapshot->require_subcommand(1);
  auto* cmd_snap_create = cmd_snapshot->add_subcommand("create", "Build a snapshot from a key list");
  cmd_snap_create->add_option("--input", snap.input, "Newline-delimited keys")->required();
  cmd_snap_create->add_option("--output", snap.file, "Snapshot file")->required();
  cmd_snap_create->add_option("--n", snap.n, "Capacity (default: key count)");
  cmd_snap_create->add_option("--epsilon", snap.epsilon, "Desired false positive probability");
  cmd_snap_create->add_option("--hash", snap.hash, "Hash function");
  auto* cmd_snap_inspect = cmd_snapshot->add_subcommand("inspect", "Verify a snapshot and print its config");
  cmd_snap_inspect->add_option("file", snap.file, "Snapshot file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  race.seed = cmp.seed = gen.seed = tr.seed = global_seed;
  try {
    if (*cmd_sizing) return run_sizing(sizing);
    if (*cmd_race) return run_hash_race(race);
    if (*cmd_compare) return run_compare(cmp);
    if (*cmd_dedup) return run_dedup(dd);
    if (*cmd_gateway) return run_gateway(gw);
    if (*cmd_train) return run_train(tr);
    if (*cmd_gen) return run_gen_data(gen);
    if (*cmd_snap_create) return run_snapshot_create(snap);
    if (*cmd_snap_inspect) return run_snapshot_inspect(snap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DecodeError& e) {
    std::cerr << "corrupt data: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const url::IngestError& e) {
    std::cerr << "corrupt data: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const url::ClassifierError& e) {
    std::cerr << "classifier error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
