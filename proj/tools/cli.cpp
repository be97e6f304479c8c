// Copyright (c) 2026, The asrkit Authors. All rights reserved.
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

#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "asrkit/aligner.hpp"
#include "asrkit/buckets.hpp"
#include "asrkit/error.hpp"
#include "asrkit/fixtures.hpp"
#include "asrkit/inventory.hpp"
#include "asrkit/logprob_io.hpp"
#include "asrkit/longform.hpp"
#include "asrkit/manifest.hpp"
#include "asrkit/mixer.hpp"
#include "asrkit/posenc.hpp"
#include "asrkit/sampler.hpp"
#include "asrkit/scheduler.hpp"
#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit::cli {
namespace {

using nlohmann::json;

enum class Format { kCsv, kJson };

struct Common {
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 0;

  Format fmt() const { return format == "csv" ? Format::kCsv : Format::kJson; }
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_format) {
  common.format = default_format;
  cmd->add_option("-o,--output", common.output, "Write the artifact to this file instead of stdout");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "structured-text"}))
      ->capture_default_str();
  cmd->add_option("--seed", common.seed, "Random seed (all randomness derives from it)")
      ->capture_default_str();
}

DataInventory resolve_inventory(const std::string& source) {
  if (source == "fixture") return fixtures::european_training_hours();
  return load_inventory_file(source);
}

// ---------------------------------------------------------------- inspect

struct InspectArgs {
  std::vector<std::string> manifests;
  std::string inventory;
  std::string rates;
  bool include_non_speech = false;
};

std::string run_inspect(const InspectArgs& a, const Common& c) {
  if (!a.rates.empty()) {
    std::map<std::string, double> rates;
    try {
      rates = json::parse(read_file(a.rates)).get<std::map<std::string, double>>();
    } catch (const json::exception& e) {
      throw ValidationError("rates file '" + a.rates + "': " + e.what());
    }
    const auto stats = compression_stats(rates);
    if (c.fmt() == Format::kJson) {
      return json{{"languages", rates.size()}, {"mean", stats.mean}, {"stddev", stats.stddev}}
                 .dump(2) +
             "\n";
    }
    return "languages,mean,stddev\n" + std::to_string(rates.size()) + "," +
           format_double(stats.mean) + "," + format_double(stats.stddev) + "\n";
  }

  DataInventory inventory;
  if (!a.inventory.empty()) {
    if (!a.manifests.empty()) throw ValidationError("inspect: use --manifest or --inventory, not both");
    inventory = resolve_inventory(a.inventory);
  } else {
    if (a.manifests.empty()) throw ValidationError("inspect: --manifest, --inventory or --rates is required");
    std::vector<ManifestEntry> entries;
    for (const auto& path : a.manifests) {
      auto part = load_manifest_file(path);
      entries.insert(entries.end(), part.begin(), part.end());
    }
    inventory = build_inventory(entries, {a.include_non_speech});
  }
  return c.fmt() == Format::kJson ? inventory_to_json(inventory) : inventory_to_csv(inventory);
}

// -------------------------------------------------------------------- mix

struct MixArgs {
  std::string inventory = "fixture";
  BalanceParams params;
};

std::string run_mix(const MixArgs& a, const Common& c) {
  const DataInventory inventory = resolve_inventory(a.inventory);
  const MixtureWeights weights = joint_weights(inventory, a.params);
  return c.fmt() == Format::kJson ? mixture_to_json(inventory, weights, a.params)
                                  : mixture_to_csv(inventory, weights);
}

// --------------------------------------------------------------- schedule

struct ScheduleArgs {
  std::string inventory = "fixture";
  BalanceParams params{0.2, 0.5};
  std::string family = "cosine";
  std::int64_t steps = 10000;
  std::int64_t every = 100;
  std::string grouping = "four";
  LrScheduleSpec lr;
};

std::string run_schedule(const ScheduleArgs& a, const Common& c) {
  if (a.every < 1) throw ValidationError("schedule: --every must be >= 1");
  const DataInventory inventory = resolve_inventory(a.inventory);
  const ScheduleFamily family = parse_schedule_family(a.family);

  std::vector<GroupSchedule> groups;
  if (a.grouping == "four") {
    groups = balancing_schedules(inventory, a.params, family, a.steps);
  } else {
    const auto mixture = joint_weights(inventory, a.params);
    GroupSchedule all{"all", {family, a.steps, {}, {}}};
    std::vector<std::string> names;
    for (const auto& [key, p] : mixture.language) {
      all.spec.start[key.str()] = p;
      names.push_back(key.str());
    }
    all.spec.target = target_uniform(names);
    groups.push_back(std::move(all));
  }

  std::vector<std::int64_t> steps;
  for (std::int64_t s = 0; s < a.steps; s += a.every) steps.push_back(s);
  steps.push_back(a.steps);

  std::ostringstream out;
  json rows = json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto flat = group_sampler_weights(groups, steps[i], groups.size());
    const double lr = lr_at(a.lr, steps[i]);
    if (c.fmt() == Format::kCsv) {
      if (i == 0) {
        out << "step,lr";
        for (const auto& w : flat) out << ',' << w.key;
        out << '\n';
      }
      out << steps[i] << ',' << format_double(lr);
      for (const auto& w : flat) out << ',' << format_double(w.weight);
      out << '\n';
    } else {
      json weights = json::object();
      for (const auto& w : flat) weights[w.key] = w.weight;
      rows.push_back({{"step", steps[i]}, {"lr", lr}, {"weights", weights}});
    }
  }
  if (c.fmt() == Format::kJson) {
    json doc = {{"family", a.family}, {"total_steps", a.steps}, {"rows", rows}};
    return doc.dump(2) + "\n";
  }
  return out.str();
}

// ----------------------------------------------------------------- sample

struct SampleArgs {
  std::string inventory = "fixture";
  BalanceParams params;
  std::size_t batch_size = 256;
  std::size_t batches = 1000;
  std::optional<std::size_t> n;
  bool summary_only = false;
};

std::string run_sample(const SampleArgs& a, const Common& c) {
  if (a.batch_size == 0) throw ValidationError("sample: --batch-size must be >= 1");
  const DataInventory inventory = resolve_inventory(a.inventory);
  const MixtureWeights weights = joint_weights(inventory, a.params);
  const std::size_t n = a.n.value_or(a.batches * a.batch_size);
  const auto draws = sample_keys(weights, c.seed, n);
  const auto reports = compose_batches(draws, a.batch_size);

  if (c.fmt() == Format::kJson) {
    json batches = json::array();
    if (!a.summary_only) {
      for (const auto& r : reports) {
        json counts = json::object();
        for (const auto& [key, count] : r.per_key_counts) counts[key.str()] = count;
        batches.push_back({{"batch_index", r.batch_index},
                           {"distinct_language_pairs", r.distinct_language_pairs},
                           {"per_key_counts", counts}});
      }
    }
    json doc = {{"seed", c.seed}, {"draws", n}, {"batch_size", a.batch_size}, {"batches", batches}};
    if (!reports.empty()) {
      const auto s = diversity_summary(reports);
      doc["summary"] = {{"min", s.min}, {"median", s.median}, {"max", s.max}};
    }
    return doc.dump(2) + "\n";
  }
  if (a.summary_only) return diversity_to_csv(diversity_summary(reports));
  return batches_to_csv(reports);
}

// ---------------------------------------------------------------- buckets

struct BucketArgs {
  std::vector<std::string> manifests;
  std::size_t duration_bins = 30;
  std::size_t token_bins = 1;
};

std::string run_buckets(const BucketArgs& a, const Common& c, std::ostream& err) {
  std::vector<ManifestEntry> entries;
  for (const auto& path : a.manifests) {
    auto part = load_manifest_file(path);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  const BucketSpec spec = estimate_buckets_2d(entries, a.duration_bins, a.token_bins);
  for (const auto& w : spec.warnings) err << "asrkit buckets: warning: " << w << '\n';
  if (c.fmt() == Format::kJson) return buckets_to_json(spec);
  std::ostringstream out;
  out << "duration_bin,duration_upper_edge,token_upper_edges\n";
  for (std::size_t b = 0; b < spec.duration_bins(); ++b) {
    out << b << ','
        << (b < spec.duration_edges.size() ? format_double(spec.duration_edges[b]) : "inf") << ',';
    const auto& tok = spec.token_edges[b];
    for (std::size_t i = 0; i < tok.size(); ++i) out << (i ? ";" : "") << tok[i];
    out << '\n';
  }
  return out.str();
}

// ------------------------------------------------------------------ align

struct AlignArgs {
  std::string logprobs;
  std::string request;
  std::string targets;
  std::string task = "asr";
  std::string batch;
  std::size_t threads = 1;
  bool skip_normalization_check = false;
  double tolerance = 1e-3;
};

std::vector<std::int64_t> parse_targets(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& field : split(text, ',')) {
    const std::string t = trim(field);
    if (t.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ValidationError("align: bad token id '" + t + "' in --targets");
    }
  }
  return out;
}

std::string alignment_to_csv(const AlignmentResult& r) {
  std::ostringstream out;
  out << "level,label,start_s,end_s\n";
  for (const auto& t : r.tokens) {
    out << "token," << t.token_id << ',' << format_double(t.start_s) << ','
        << format_double(t.end_s) << '\n';
  }
  for (const auto& w : r.words) {
    out << "word," << w.text << ',' << format_double(w.start_s) << ',' << format_double(w.end_s)
        << '\n';
  }
  for (const auto& s : r.segments) {
    out << "segment," << s.text << ',' << format_double(s.start_s) << ','
        << format_double(s.end_s) << '\n';
  }
  return out.str();
}

int run_align(const AlignArgs& a, const Common& c, std::string& artifact, std::ostream& err) {
  const LogProbLoadOptions load{!a.skip_normalization_check, a.tolerance};

  if (!a.batch.empty()) {
    json doc;
    try {
      doc = json::parse(read_file(a.batch));
    } catch (const json::exception& e) {
      throw ValidationError("align batch '" + a.batch + "': " + e.what());
    }
    if (!doc.is_array()) throw ValidationError("align batch: expected a JSON array");
    std::vector<BatchItem> items;
    for (const auto& item : doc) {
      if (!item.contains("logprobs") || !item.contains("request")) {
        throw ValidationError("align batch: each item needs 'logprobs' and 'request'");
      }
      items.push_back({load_logprobs_file(item["logprobs"].get<std::string>(), load),
                       parse_align_request(item["request"].dump())});
    }
    const auto outcomes = align_batch(items, a.threads);
    json results = json::array();
    int status = kExitOk;
    for (const auto& o : outcomes) {
      if (o.result) {
        results.push_back(json::parse(alignment_to_json(*o.result)));
      } else {
        err << "asrkit align: " << o.error << '\n';
        results.push_back({{"error", o.error}});
        const int code = o.error_kind == AlignErrorKind::kInfeasible ? kExitInfeasible
                                                                      : kExitValidation;
        status = std::max(status, code);
      }
    }
    artifact = results.dump(2) + "\n";
    return status;
  }

  if (a.logprobs.empty()) throw ValidationError("align: --logprobs or --batch is required");
  if (a.request.empty() == a.targets.empty()) {
    throw ValidationError("align: give exactly one of --request or --targets");
  }
  const LogProbMatrix lp = load_logprobs_file(a.logprobs, load);
  AlignRequest request;
  if (!a.request.empty()) {
    request = parse_align_request(read_file(a.request));
  } else {
    request.target = parse_targets(a.targets);
    request.task = parse_align_task(a.task);
  }
  const AlignmentResult result = align_request(lp, request);
  artifact = c.fmt() == Format::kJson ? alignment_to_json(result) : alignment_to_csv(result);
  return kExitOk;
}

// ------------------------------------------------------------------ chunk

struct ChunkArgs {
  double duration = 0.0;
  ChunkOptions options;
};

std::string run_chunk(const ChunkArgs& a, const Common& c) {
  const ChunkPlan plan = plan_chunks(a.duration, a.options);
  return c.fmt() == Format::kJson ? chunk_plan_to_json(plan) : chunk_plan_to_csv(plan);
}

// ------------------------------------------------------------------ merge

struct MergeArgs {
  std::vector<std::string> files;
  std::size_t window = kDefaultMergeWindow;
};

std::string run_merge(const MergeArgs& a) {
  std::vector<ChunkHypothesis<std::string>> hyps;
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    std::istringstream in(read_file(a.files[i]));
    ChunkHypothesis<std::string> h{i, {}};
    for (std::string token; in >> token;) h.tokens.push_back(token);
    hyps.push_back(std::move(h));
  }
  const auto merged = merge_all(std::move(hyps), a.window);
  std::string out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i) out += ' ';
    out += merged[i];
  }
  return out + "\n";
}

// ------------------------------------------------------------------ alibi

struct AlibiArgs {
  AlibiSpec spec;
  std::vector<double> slopes;
};

std::string run_alibi(AlibiArgs a, const Common& c) {
  if (!a.slopes.empty()) a.spec.slopes = a.slopes;
  const BiasGrid grid = symmetric_alibi_bias(a.spec);
  if (c.fmt() == Format::kCsv) return bias_grid_to_csv(grid);
  json heads = json::array();
  for (std::size_t h = 0; h < grid.heads(); ++h) {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.len(); ++i) {
      std::vector<double> row(grid.len());
      for (std::size_t j = 0; j < grid.len(); ++j) row[j] = grid.at(h, i, j);
      rows.push_back(row);
    }
    heads.push_back(rows);
  }
  json doc = {{"seq_len", grid.len()}, {"num_heads", grid.heads()},
              {"slope_scale", a.spec.slope_scale}, {"bias", heads}};
  return doc.dump(2) + "\n";
}

void emit(const std::string& artifact, const Common& c, std::ostream& out) {
  if (c.output.empty()) {
    out << artifact;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + c.output + "'");
  file << artifact;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"asrkit: multilingual speech data balancing, CTC alignment and long-form tools",
               "asrkit"};
  app.require_subcommand(1);

  InspectArgs inspect;
  auto* inspect_cmd = app.add_subcommand("inspect", "Aggregate manifests into an hours inventory");
  Common inspect_common;
  add_common(inspect_cmd, inspect_common, "json");
  inspect_cmd->add_option("--manifest", inspect.manifests, "Line-delimited JSON manifest (repeatable)");
  inspect_cmd->add_option("--inventory", inspect.inventory, "Re-render an inventory file or 'fixture'");
  inspect_cmd->add_option("--rates", inspect.rates,
                          "JSON map language -> chars-per-token; prints mean and std. dev.");
  inspect_cmd->add_flag("--include-non-speech", inspect.include_non_speech,
                        "Count entries with empty text");

  MixArgs mix;
  auto* mix_cmd = app.add_subcommand("mix", "Two-tier corpus/language sampling weights");
  Common mix_common;
  add_common(mix_cmd, mix_common, "csv");
  mix_cmd->add_option("--inventory", mix.inventory, "Inventory file (.json/.csv) or 'fixture'")
      ->capture_default_str();
  mix_cmd->add_option("--alpha", mix.params.alpha, "Corpus-level exponent in (0, 1]")->capture_default_str();
  mix_cmd->add_option("--beta", mix.params.beta, "Language-level exponent in (0, 1]")->capture_default_str();

  ScheduleArgs sched;
  auto* sched_cmd = app.add_subcommand("schedule", "Per-step sampling weights and learning rate");
  Common sched_common;
  add_common(sched_cmd, sched_common, "csv");
  sched_cmd->add_option("--inventory", sched.inventory, "Inventory file or 'fixture'")->capture_default_str();
  sched_cmd->add_option("--alpha", sched.params.alpha, "Corpus-level exponent for start weights")
      ->capture_default_str();
  sched_cmd->add_option("--beta", sched.params.beta, "Language-level exponent for start weights")
      ->capture_default_str();
  sched_cmd->add_option("--family", sched.family, "Interpolation family")
      ->check(CLI::IsMember({"cosine", "linear", "exponential"}))
      ->capture_default_str();
  sched_cmd->add_option("--steps", sched.steps, "Schedule horizon in steps")->capture_default_str();
  sched_cmd->add_option("--every", sched.every, "Emit one row every N steps")->capture_default_str();
  sched_cmd->add_option("--grouping", sched.grouping, "four: equal-mass task groups; none: one group")
      ->check(CLI::IsMember({"four", "none"}))
      ->capture_default_str();
  sched_cmd->add_option("--peak-lr", sched.lr.peak_lr, "Peak learning rate")->capture_default_str();
  sched_cmd->add_option("--min-lr", sched.lr.min_lr, "Learning-rate floor")->capture_default_str();
  sched_cmd->add_option("--warmup", sched.lr.warmup_steps, "Warmup steps")->capture_default_str();

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Simulate batches drawn from the mixture");
  Common sample_common;
  add_common(sample_cmd, sample_common, "csv");
  sample_cmd->add_option("--inventory", sample.inventory, "Inventory file or 'fixture'")->capture_default_str();
  sample_cmd->add_option("--alpha", sample.params.alpha, "Corpus-level exponent")->capture_default_str();
  sample_cmd->add_option("--beta", sample.params.beta, "Language-level exponent")->capture_default_str();
  sample_cmd->add_option("--batch-size", sample.batch_size, "Draws per batch")->capture_default_str();
  sample_cmd->add_option("--batches", sample.batches, "Number of batches when --n is not given")
      ->capture_default_str();
  sample_cmd->add_option("--n", sample.n, "Total number of draws");
  sample_cmd->add_flag("--summary-only", sample.summary_only, "Emit only min/median/max distinct pairs");

  BucketArgs buckets;
  auto* buckets_cmd = app.add_subcommand("buckets", "Estimate 2D duration/token buckets");
  Common buckets_common;
  add_common(buckets_cmd, buckets_common, "json");
  buckets_cmd->add_option("--manifest", buckets.manifests, "Manifest file (repeatable)")->required();
  buckets_cmd->add_option("--duration-bins", buckets.duration_bins, "Duration bins")->capture_default_str();
  buckets_cmd->add_option("--token-bins", buckets.token_bins, "Token bins per duration bin")
      ->capture_default_str();

  AlignArgs align;
  auto* align_cmd = app.add_subcommand("align", "CTC Viterbi forced alignment");
  Common align_common;
  add_common(align_cmd, align_common, "json");
  align_cmd->add_option("--logprobs", align.logprobs, "Log-prob matrix (.json or binary)");
  align_cmd->add_option("--request", align.request, "Alignment request JSON");
  align_cmd->add_option("--targets", align.targets, "Comma-separated token ids");
  align_cmd->add_option("--task", align.task, "Task used with --targets")
      ->check(CLI::IsMember({"asr", "ast"}))
      ->capture_default_str();
  align_cmd->add_option("--batch", align.batch, "JSON array of {logprobs, request} items");
  align_cmd->add_option("--threads", align.threads, "Worker threads for --batch (0 = all cores)")
      ->capture_default_str();
  align_cmd->add_flag("--skip-normalization-check", align.skip_normalization_check,
                      "Accept rows that are not log-distributions");
  align_cmd->add_option("--tolerance", align.tolerance, "Row logsumexp tolerance")->capture_default_str();

  ChunkArgs chunk;
  auto* chunk_cmd = app.add_subcommand("chunk", "Plan overlapping chunks for long audio");
  Common chunk_common;
  add_common(chunk_cmd, chunk_common, "csv");
  chunk_cmd->add_option("--duration", chunk.duration, "Audio duration in seconds")->required();
  chunk_cmd->add_option("--min-len", chunk.options.min_len_s, "Shortest chunk (s)")->capture_default_str();
  chunk_cmd->add_option("--max-len", chunk.options.max_len_s, "Longest chunk (s)")->capture_default_str();
  chunk_cmd->add_option("--overlap", chunk.options.overlap_s, "Overlap between chunks (s)")
      ->capture_default_str();
  chunk_cmd->add_option("--block-len", chunk.options.block_len_s, "Independent block length (s)")
      ->capture_default_str();
  chunk_cmd->add_option("--ticks-per-second", chunk.options.ticks_per_second,
                        "Chunk-length search grid resolution")
      ->capture_default_str();

  MergeArgs merge;
  auto* merge_cmd = app.add_subcommand("merge", "Merge per-chunk token files via windowed LCS");
  Common merge_common;
  add_common(merge_cmd, merge_common, "csv");
  merge_cmd->add_option("files", merge.files, "Whitespace-separated token files, in chunk order")
      ->required();
  merge_cmd->add_option("--window", merge.window, "Overlap window in tokens")->capture_default_str();

  AlibiArgs alibi;
  auto* alibi_cmd = app.add_subcommand("alibi", "Symmetric ALiBi bias grid");
  Common alibi_common;
  add_common(alibi_cmd, alibi_common, "csv");
  alibi_cmd->add_option("--seq-len", alibi.spec.seq_len, "Sequence length")->capture_default_str();
  alibi_cmd->add_option("--heads", alibi.spec.num_heads, "Number of heads")->capture_default_str();
  alibi_cmd->add_option("--scale", alibi.spec.slope_scale, "Slope scale")->capture_default_str();
  alibi_cmd->add_option("--slopes", alibi.slopes, "Explicit per-head slopes");

  std::vector<std::string> argv_storage{"asrkit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "asrkit: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string artifact;
    int status = kExitOk;
    const Common* common = nullptr;
    if (*inspect_cmd) {
      common = &inspect_common;
      artifact = run_inspect(inspect, *common);
    } else if (*mix_cmd) {
      common = &mix_common;
      artifact = run_mix(mix, *common);
    } else if (*sched_cmd) {
      common = &sched_common;
      artifact = run_schedule(sched, *common);
    } else if (*sample_cmd) {
      common = &sample_common;
      artifact = run_sample(sample, *common);
    } else if (*buckets_cmd) {
      common = &buckets_common;
      artifact = run_buckets(buckets, *common, err);
    } else if (*align_cmd) {
      common = &align_common;
      status = run_align(align, *common, artifact, err);
    } else if (*chunk_cmd) {
      common = &chunk_common;
      artifact = run_chunk(chunk, *common);
    } else if (*merge_cmd) {
      common = &merge_common;
      artifact = run_merge(merge);
    } else {
      common = &alibi_common;
      artifact = run_alibi(alibi, *common);
    }
    emit(artifact, *common, out);
    return status;
  } catch (const InfeasibleError& e) {
    err << "asrkit: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    err << "asrkit: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "asrkit: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace asrkit::cli
