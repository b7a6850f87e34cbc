#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanner/baswana_sen.hpp"
#include "spanner/berman.hpp"
#include "spanner/elkin_neiman.hpp"
#include "spanner/errors.hpp"
#include "spanner/greedy.hpp"
#include "spanner/io.hpp"
#include "spanner/kortsarz_peleg.hpp"
#include "spanner/metrics.hpp"
#include "spanner/rng.hpp"
#include "spanner/validate.hpp"

namespace spanner {

enum class AlgoId { addjs, bs, en, kp, bbmry };

inline const char* algo_name(AlgoId a) {
  switch (a) {
    case AlgoId::addjs: return "addjs";
    case AlgoId::bs: return "bs";
    case AlgoId::en: return "en";
    case AlgoId::kp: return "kp";
    case AlgoId::bbmry: return "bbmry";
  }
  return "?";
}

inline std::optional<AlgoId> parse_algo(std::string_view s) {
  if (s == "addjs") return AlgoId::addjs;
  if (s == "bs") return AlgoId::bs;
  if (s == "en") return AlgoId::en;
  if (s == "kp") return AlgoId::kp;
  if (s == "bbmry") return AlgoId::bbmry;
  return std::nullopt;
}

constexpr AlgoId kAllAlgos[] = {AlgoId::addjs, AlgoId::bs, AlgoId::en, AlgoId::kp,
                                AlgoId::bbmry};

// Reason the (algorithm, alpha, weighted) cell is off the compatibility table,
// or empty when it can run.
inline std::string incompatibility(AlgoId algo, double alpha, bool weighted) {
  bool integral = alpha == std::floor(alpha);
  bool odd = integral && int64_t(alpha) % 2 == 1;
  switch (algo) {
    case AlgoId::addjs:
    case AlgoId::bbmry:
      if (alpha < 1.0) return "stretch below 1";
      return {};
    case AlgoId::kp:
      if (alpha != 2.0) return "kp supports alpha=2 only";
      if (weighted) return "kp supports unweighted graphs only";
      return {};
    case AlgoId::bs:
      if (!odd || alpha < 1.0) return "bs needs odd integer alpha";
      return {};
    case AlgoId::en:
      if (!odd || alpha < 3.0) return "en needs odd integer alpha >= 3";
      if (weighted) return "en supports unweighted graphs only";
      return {};
  }
  return "unknown algorithm";
}

enum class Outcome { solved, timeout, failed };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::timeout: return "timeout";
    case Outcome::failed: return "failed";
  }
  return "?";
}

inline std::optional<Outcome> parse_outcome(std::string_view s) {
  if (s == "solved") return Outcome::solved;
  if (s == "timeout") return Outcome::timeout;
  if (s == "failed") return Outcome::failed;
  return std::nullopt;
}

struct RunRecord {
  std::string instance;
  std::string algorithm;
  double alpha = 0.0;
  bool weighted = false;
  uint64_t seed = 0;
  Outcome outcome = Outcome::failed;
  double wall_seconds = 0.0;
  std::optional<QualityReport> quality;  // present iff solved
  int32_t attempts = 1;                  // > 1 only for restarting algorithms
};

struct RunSpec {
  AlgoId algo = AlgoId::addjs;
  double alpha = 3.0;
  uint64_t seed = 0;
  double timelimit = 60.0;  // seconds; <= 0 means an already-expired deadline
  EdgeOrder order = EdgeOrder::input;
  double epsilon = 0.8;
  int32_t en_attempts = 200;
  int32_t bbmry_rounds = 200;
};

struct RunResult {
  RunRecord record;
  std::optional<Spanner> spanner;  // present iff solved
};

// One cell: seeded, deadline-guarded, validated. Incompatible configuration
// throws; timeouts and attempt exhaustion come back as outcomes. `base` may
// carry precomputed parent distances for the quality report.
inline RunResult run_one(const Graph& g, const std::string& instance_id, const RunSpec& spec,
                         const DistanceMatrix* base = nullptr) {
  std::string why = incompatibility(spec.algo, spec.alpha, g.weighted());
  if (!why.empty()) throw IncompatibleConfig(why);

  RunResult out;
  RunRecord& rec = out.record;
  rec.instance = instance_id;
  rec.algorithm = algo_name(spec.algo);
  rec.alpha = spec.alpha;
  rec.weighted = g.weighted();
  rec.seed = spec.seed;

  Deadline dl = spec.timelimit < 1e9 ? Deadline::after_seconds(spec.timelimit)
                                     : Deadline::never();
  auto started = std::chrono::steady_clock::now();
  std::optional<Spanner> h;
  try {
    switch (spec.algo) {
      case AlgoId::addjs:
        h = greedy_spanner(g, GreedyConfig{spec.alpha, spec.order, spec.seed}, dl);
        break;
      case AlgoId::bs:
        h = baswana_sen(g, BsConfig{int32_t(spec.alpha), spec.seed}, dl);
        break;
      case AlgoId::en: {
        EnResult r = elkin_neiman(
            g, EnConfig{int32_t(spec.alpha), spec.epsilon, spec.seed, spec.en_attempts}, dl);
        h = std::move(r.spanner);
        rec.attempts = r.attempts;
        break;
      }
      case AlgoId::kp:
        h = kortsarz_peleg(g, dl);
        break;
      case AlgoId::bbmry: {
        BermanConfig cfg;
        cfg.alpha = spec.alpha;
        cfg.seed = spec.seed;
        cfg.max_rounds = spec.bbmry_rounds;
        h = berman_spanner(g, cfg, dl);
        break;
      }
    }
    rec.outcome = Outcome::solved;
  } catch (const DeadlineExceeded&) {
    rec.outcome = Outcome::timeout;
  } catch (const AttemptsExhausted& e) {
    rec.outcome = Outcome::failed;
    rec.attempts = e.attempts;
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (rec.outcome == Outcome::solved) {
    if (!validate_spanner(g, *h, base).valid) {
      rec.outcome = Outcome::failed;  // never report an invalid spanner as solved
    } else {
      rec.quality = measure(g, *h, base);
      out.spanner = std::move(h);
    }
  }
  return out;
}

struct MatrixOptions {
  std::vector<AlgoId> algos{kAllAlgos, kAllAlgos + 5};
  std::vector<double> alphas{2, 3, 4, 5, 7};
  bool weighted_pass = true;    // run each weighted instance as-is
  bool unweighted_pass = true;  // and once with weights stripped
  double timelimit = 60.0;
  uint64_t base_seed = 0;
  EdgeOrder order = EdgeOrder::input;
  double epsilon = 0.8;
  int32_t en_attempts = 200;
  int32_t bbmry_rounds = 200;
};

struct SkippedCell {
  std::string instance;
  std::string algorithm;
  double alpha;
  bool weighted;
  std::string reason;
};

struct ErroredCell {
  std::string instance;
  std::string algorithm;
  double alpha;
  bool weighted;
  std::string message;
};

struct MatrixResult {
  std::vector<RunRecord> records;
  std::vector<SkippedCell> skipped;
  std::vector<ErroredCell> errors;
};

// Cell seeds depend only on the cell key, so any subset of the matrix
// reproduces the full run's records.
inline uint64_t cell_seed(uint64_t base, const std::string& instance, AlgoId algo, double alpha,
                          bool weighted) {
  std::string key = instance;
  key += '|';
  key += algo_name(algo);
  key += '|';
  key += format_number(alpha);
  key += weighted ? "|w" : "|u";
  return derive_seed(base, hash_str(key.c_str()));
}

// Full cartesian product, filtered by the compatibility table. Incompatible
// cells are skipped with a reason; unexpected per-cell failures land in
// `errors` and do not stop the sweep.
inline MatrixResult run_matrix(const std::vector<std::pair<std::string, Graph>>& corpus,
                               const MatrixOptions& opt,
                               const Deadline& deadline = Deadline::never()) {
  MatrixResult out;
  for (const auto& [id, g0] : corpus) {
    for (int pass = 0; pass < 2; ++pass) {
      bool want_weighted = pass == 0;
      if (want_weighted && (!opt.weighted_pass || !g0.weighted())) continue;
      if (!want_weighted && !opt.unweighted_pass) continue;
      const Graph g = want_weighted ? g0 : g0.without_weights();
      std::optional<DistanceMatrix> base;
      for (AlgoId algo : opt.algos) {
        for (double alpha : opt.alphas) {
          deadline.check();
          std::string why = incompatibility(algo, alpha, g.weighted());
          if (!why.empty()) {
            out.skipped.push_back({id, algo_name(algo), alpha, g.weighted(), why});
            continue;
          }
          RunSpec spec;
          spec.algo = algo;
          spec.alpha = alpha;
          spec.seed = cell_seed(opt.base_seed, id, algo, alpha, g.weighted());
          spec.timelimit = opt.timelimit;
          spec.order = opt.order;
          spec.epsilon = opt.epsilon;
          spec.en_attempts = opt.en_attempts;
          spec.bbmry_rounds = opt.bbmry_rounds;
          if (!base) base.emplace(apsp(g));
          try {
            out.records.push_back(run_one(g, id, spec, &*base).record);
          } catch (const std::exception& e) {
            out.errors.push_back({id, algo_name(algo), alpha, g.weighted(), e.what()});
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multi-run statistics over a randomized algorithm's spanner sizes.
// ---------------------------------------------------------------------------

struct MultiRunStats {
  std::vector<int64_t> samples;  // sizes of successful runs, in seed order
  int64_t failures = 0;
  double min = 0.0;
  double mean = 0.0;
  double stddev = 0.0;           // sample standard deviation
  double skewness = 0.0;         // population-moment convention
  double excess_kurtosis = 0.0;
  int64_t m1_count = 0;  // #{x < 1.25 min}
  int64_t m2_count = 0;  // #{x < min + 0.25 (mean - min)}
};

inline MultiRunStats compute_multi_stats(std::vector<int64_t> samples, int64_t failures) {
  MultiRunStats s;
  s.samples = std::move(samples);
  s.failures = failures;
  if (s.samples.empty()) return s;
  double n = double(s.samples.size());
  s.min = double(*std::min_element(s.samples.begin(), s.samples.end()));
  for (int64_t x : s.samples) s.mean += double(x);
  s.mean /= n;
  double m2 = 0, m3 = 0, m4 = 0, ss = 0;
  for (int64_t x : s.samples) {
    double d = double(x) - s.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
    ss += d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  s.stddev = s.samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  double t1 = 1.25 * s.min;
  double t2 = s.min + 0.25 * (s.mean - s.min);
  for (int64_t x : s.samples) {
    if (double(x) < t1) ++s.m1_count;
    if (double(x) < t2) ++s.m2_count;
  }
  return s;
}

struct MultiRunResult {
  MultiRunStats stats;
  Spanner best;  // smallest successful spanner
};

// `iterations` independent seeded executions; failed attempts are counted but
// excluded from the sample set. Throws when every run fails.
inline MultiRunResult multi_run(const Graph& g, AlgoId algo, double alpha, int32_t iterations,
                                uint64_t base_seed, const Deadline& deadline = Deadline::never(),
                                double epsilon = 0.8) {
  if (algo != AlgoId::bs && algo != AlgoId::en)
    throw IncompatibleConfig("multi-run targets the randomized algorithms (bs, en)");
  std::string why = incompatibility(algo, alpha, g.weighted());
  if (!why.empty()) throw IncompatibleConfig(why);
  if (iterations < 1) throw IncompatibleConfig("need at least one iteration");

  std::vector<int64_t> sizes;
  sizes.reserve(size_t(iterations));
  int64_t failures = 0;
  std::optional<Spanner> best;
  for (int32_t i = 0; i < iterations; ++i) {
    deadline.check();
    uint64_t seed = derive_seed(base_seed, uint64_t(i));
    std::optional<Spanner> h;
    if (algo == AlgoId::bs) {
      h = baswana_sen(g, BsConfig{int32_t(alpha), seed}, deadline);
    } else {
      try {
        // one attempt per iteration so failures are observable events
        h = elkin_neiman(g, EnConfig{int32_t(alpha), epsilon, seed, 1}, deadline).spanner;
      } catch (const AttemptsExhausted&) {
        ++failures;
        continue;
      }
    }
    sizes.push_back(h->size());
    if (!best || h->size() < best->size()) best = std::move(h);
  }
  if (!best) throw AttemptsExhausted(iterations);
  return {compute_multi_stats(std::move(sizes), failures), std::move(*best)};
}

// ---------------------------------------------------------------------------
// CSV / JSON emission. Fixed column order; numbers in shortest round-trip
// form so parse -> emit is byte-stable.
// ---------------------------------------------------------------------------

inline constexpr const char* kCsvHeader =
    "instance,algorithm,alpha,weighted,seed,outcome,wall_ms,size,sparseness,lightness,"
    "mean_degree,stretch_mean,stretch_max,hop_mean_diff,attempts";

inline std::string write_records_csv(const std::vector<RunRecord>& records,
                                     bool no_timing = false) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const RunRecord& r : records) {
    out += r.instance;
    out += ',';
    out += r.algorithm;
    out += ',';
    out += format_number(r.alpha);
    out += ',';
    out += r.weighted ? "1," : "0,";
    out += std::to_string(r.seed);
    out += ',';
    out += outcome_name(r.outcome);
    out += ',';
    out += no_timing ? "0" : std::to_string(int64_t(std::llround(r.wall_seconds * 1000.0)));
    if (r.quality) {
      const QualityReport& q = *r.quality;
      out += ',';
      out += std::to_string(q.size);
      out += ',';
      out += format_number(q.sparseness);
      out += ',';
      out += format_number(q.lightness);
      out += ',';
      out += format_number(q.mean_degree_spanner);
      out += ',';
      out += format_number(q.stretch_mean);
      out += ',';
      out += format_number(q.stretch_max);
      out += ',';
      out += format_number(q.hop_mean_diff);
    } else {
      out += ",,,,,,,";
    }
    out += ',';
    out += std::to_string(r.attempts);
    out += '\n';
  }
  return out;
}

// Accepts exactly what write_records_csv emits.
inline std::vector<RunRecord> read_records_csv(std::string_view text) {
  detail::LineReader lines{text};
  std::string_view line;
  if (!lines.next(line) || detail::trim(line) != kCsvHeader)
    throw ParseError("unexpected CSV header", 1);
  std::vector<RunRecord> out;
  while (lines.next(line)) {
    if (detail::trim(line).empty()) continue;
    std::vector<std::string_view> f;
    size_t start = 0;
    std::string_view l = line;
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    for (size_t i = 0; i <= l.size(); ++i) {
      if (i == l.size() || l[i] == ',') {
        f.push_back(l.substr(start, i - start));
        start = i + 1;
      }
    }
    if (f.size() != 15) throw ParseError("expected 15 fields", lines.line_no);
    RunRecord r;
    r.instance = std::string(f[0]);
    r.algorithm = std::string(f[1]);
    int64_t iv = 0;
    double dv = 0;
    if (!detail::parse_f64(f[2], r.alpha)) throw ParseError("bad alpha", lines.line_no);
    if (!detail::parse_i64(f[3], iv) || (iv != 0 && iv != 1))
      throw ParseError("bad weighted flag", lines.line_no);
    r.weighted = iv == 1;
    uint64_t seed = 0;
    auto [p, ec] = std::from_chars(f[4].data(), f[4].data() + f[4].size(), seed);
    if (ec != std::errc() || p != f[4].data() + f[4].size())
      throw ParseError("bad seed", lines.line_no);
    r.seed = seed;
    auto oc = parse_outcome(f[5]);
    if (!oc) throw ParseError("bad outcome", lines.line_no);
    r.outcome = *oc;
    if (!detail::parse_i64(f[6], iv)) throw ParseError("bad wall_ms", lines.line_no);
    r.wall_seconds = double(iv) / 1000.0;
    bool any_quality = false, all_quality = true;
    for (int i = 7; i <= 13; ++i) {
      if (f[size_t(i)].empty())
        all_quality = false;
      else
        any_quality = true;
    }
    if (any_quality != all_quality)
      throw ParseError("partial quality fields", lines.line_no);
    if (all_quality) {
      QualityReport q;
      if (!detail::parse_i64(f[7], iv)) throw ParseError("bad size", lines.line_no);
      q.size = int32_t(iv);
      auto grab = [&](std::string_view s, double& slot) {
        if (!detail::parse_f64(s, dv)) throw ParseError("bad quality field", lines.line_no);
        slot = dv;
      };
      grab(f[8], q.sparseness);
      grab(f[9], q.lightness);
      grab(f[10], q.mean_degree_spanner);
      grab(f[11], q.stretch_mean);
      grab(f[12], q.stretch_max);
      grab(f[13], q.hop_mean_diff);
      r.quality = q;
    }
    if (!detail::parse_i64(f[14], iv)) throw ParseError("bad attempts", lines.line_no);
    r.attempts = int32_t(iv);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace spanner
