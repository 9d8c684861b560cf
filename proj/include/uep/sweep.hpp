#pragma once

// Rate sweeps over one parameter, one row per point, for plotting.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "uep/bounds.hpp"
#include "uep/error.hpp"

namespace uep {

enum class SweepVariable { kN, kLog2B, kDA, kDB };

inline SweepVariable parse_sweep_variable(const std::string& s) {
  if (s == "n") return SweepVariable::kN;
  if (s == "log2B") return SweepVariable::kLog2B;
  if (s == "dA") return SweepVariable::kDA;
  if (s == "dB") return SweepVariable::kDB;
  fail(ErrorKind::kInvalidArgument, "unknown sweep variable '" + s + "' (use n, log2B, dA, dB)");
}

inline const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kN: return "n";
    case SweepVariable::kLog2B: return "log2B";
    case SweepVariable::kDA: return "dA";
    case SweepVariable::kDB: return "dB";
  }
  return "?";
}

struct SweepSpec {
  SweepVariable vary = SweepVariable::kDB;
  long start = 1;
  long stop = 1;
  long step = 1;
  unsigned n = 100;
  unsigned log2B = 0;
  unsigned dA = 2;
  unsigned dB = 1;
  PackingEstimate packing = PackingEstimate::kCertified;

  void validate() const {
    require(step > 0, "sweep: step must be positive");
    require(start <= stop, "sweep: empty range");
    require(start >= 0, "sweep: negative start");
  }

  std::vector<long> points() const {
    std::vector<long> out;
    for (long v = start; v <= stop; v += step) out.push_back(v);
    return out;
  }
};

/// Rates log2(size) / n; empty where the bound is infeasible at that point.
struct SweepRow {
  long value = 0;
  std::optional<double> cube, ball, enlarge, max_uep, ts, eep, hamming;
};

namespace detail {

template <class F>
std::optional<double> rate_or_empty(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInfeasible || e.kind() == ErrorKind::kInvalidArgument) return std::nullopt;
    throw;
  }
}

}  // namespace detail

inline SweepRow evaluate_sweep_point(const SweepSpec& spec, long value) {
  unsigned n = spec.n, log2B = spec.log2B, dA = spec.dA, dB = spec.dB;
  const auto v = static_cast<unsigned>(value);
  switch (spec.vary) {
    case SweepVariable::kN: n = v; break;
    case SweepVariable::kLog2B: log2B = v; break;
    case SweepVariable::kDA: dA = v; break;
    case SweepVariable::kDB: dB = v; break;
  }
  const TwoLevelParams p{n, pow2(log2B), dA, dB};
  SweepRow row;
  row.value = value;
  row.cube = detail::rate_or_empty([&] { return uep_cube_bound(p).log2_rate; });
  row.ball = detail::rate_or_empty([&] { return uep_ball_bound(p, spec.packing).log2_rate; });
  row.enlarge = detail::rate_or_empty([&] { return uep_enlargement_bound(p, spec.packing).log2_rate; });
  for (const auto& r : {row.cube, row.ball, row.enlarge})
    if (r && (!row.max_uep || *r > *row.max_uep)) row.max_uep = r;
  row.ts = detail::rate_or_empty([&] {
    const TsAllocation split = ts_allocation(p.n, p.B, p.dB, SplitRule::kNonStrict);
    return log2_of(ts_gv(split.nA, split.nB, p.dA, p.dB).first.guaranteed_size) / p.n;
  });
  row.eep = detail::rate_or_empty([&] { return eep_bound(p).log2_rate; });
  row.hamming = detail::rate_or_empty([&] { return hamming_converse(p).log2_rate; });
  return row;
}

/// Points are evaluated concurrently; rows come back in sweep order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto pts = spec.points();
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows;
  rows.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); i += workers) {
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t j = i; j < std::min(pts.size(), i + workers); ++j)
      batch.push_back(std::async(std::launch::async, [&spec, v = pts[j]] { return evaluate_sweep_point(spec, v); }));
    for (auto& f : batch) rows.push_back(f.get());
  }
  return rows;
}

inline std::string format_real(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

inline void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  out << to_string(spec.vary) << ",A1_rate,A2_rate,A3_rate,max_uep_rate,ts_rate,eep_rate,hamming_rate\n";
  const auto cell = [](const std::optional<double>& x) { return x ? format_real(*x) : std::string(); };
  for (const auto& r : rows)
    out << r.value << ',' << cell(r.cube) << ',' << cell(r.ball) << ',' << cell(r.enlarge) << ','
        << cell(r.max_uep) << ',' << cell(r.ts) << ',' << cell(r.eep) << ',' << cell(r.hamming) << '\n';
}

}  // namespace uep
