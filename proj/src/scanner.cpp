#include "partlab/scanner.hpp"

#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

namespace partlab {

const char* to_string(ScanProperty::Kind kind) {
  switch (kind) {
    case ScanProperty::Kind::Bo: return "bessenrodt-ono";
    case ScanProperty::Kind::LogConcave: return "log-concave";
    case ScanProperty::Kind::LogConcaveStrengthened: return "log-concave-strengthened";
    case ScanProperty::Kind::Envelope: return "envelope";
    case ScanProperty::Kind::QuasiPolynomialMatch: return "quasipolynomial-match";
  }
  return "?";
}

namespace {

// Split [lo, hi] into contiguous chunks, run work(chunk_index, chunk_lo,
// chunk_hi) concurrently, and rethrow the first chunk failure.  Callers size
// their result buckets by the returned chunk list so merging stays in
// ascending order no matter how the threads interleave.
std::vector<std::pair<std::size_t, std::size_t>> make_chunks(std::size_t lo,
                                                             std::size_t hi) {
  const std::size_t span = hi - lo + 1;
  std::size_t n_chunks = std::thread::hardware_concurrency();
  if (n_chunks == 0) n_chunks = 4;
  const std::size_t min_per_chunk = 64;
  if (n_chunks > span / min_per_chunk) n_chunks = span / min_per_chunk;
  if (n_chunks < 2) return {{lo, hi}};

  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  std::size_t base = span / n_chunks, extra = span % n_chunks;
  std::size_t start = lo;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    std::size_t len = base + (c < extra ? 1 : 0);
    chunks.emplace_back(start, start + len - 1);
    start += len;
  }
  return chunks;
}

template <typename Work>
void run_chunked(const std::vector<std::pair<std::size_t, std::size_t>>& chunks,
                 Work&& work) {
  if (chunks.size() == 1) {
    work(0, chunks[0].first, chunks[0].second);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks.size());
  std::vector<std::thread> pool;
  pool.reserve(chunks.size());
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    pool.emplace_back([&, c] {
      try {
        work(c, chunks[c].first, chunks[c].second);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

// minimal_start for point scans: lo when clean, last violation + 1
// otherwise, absent when the horizon itself violates.
std::optional<Int> point_minimal_start(const std::vector<PointViolation>& violations,
                                       std::size_t lo, std::size_t hi) {
  if (violations.empty()) return Int(lo);
  const Int& last = violations.back().n;
  if (last == static_cast<unsigned long>(hi)) return std::nullopt;
  return Int(last + 1);
}

}  // namespace

ScanReport scan_bo(const PartitionTable& table, std::size_t max) {
  if (max < 2) throw std::invalid_argument("scan_bo: max must be >= 2");
  if (table.n_max() < 2 * max)
    throw std::invalid_argument("scan_bo: table too short, need 2*max");

  ScanReport report{table.system,
                    ScanProperty{ScanProperty::Kind::Bo, {}, {}, {}},
                    Int(1),
                    Int(max),
                    {},
                    {},
                    {}};

  auto chunks = make_chunks(1, max);
  std::vector<std::vector<PairViolation>> buckets(chunks.size());
  run_chunked(chunks, [&](std::size_t c, std::size_t a_lo, std::size_t a_hi) {
    for (std::size_t a = a_lo; a <= a_hi; ++a) {
      const Int& pa = table.at(a);
      for (std::size_t b = 1; b <= a; ++b) {
        Int lhs = pa * table.at(b);
        const Int& rhs = table.at(a + b);
        if (!(lhs > rhs))
          buckets[c].push_back(PairViolation{Int(a), Int(b), lhs, rhs});
      }
    }
  });
  for (auto& bucket : buckets)
    for (auto& v : bucket) report.pair_violations.push_back(std::move(v));

  // A violating pair (a, b) with b <= a lies inside [N, max] exactly when
  // b >= N, so the minimal clean start is one past the largest violating b.
  Int worst_b(0);
  for (const auto& v : report.pair_violations)
    if (v.b > worst_b) worst_b = v.b;
  if (worst_b == 0)
    report.minimal_start = Int(1);
  else if (worst_b >= static_cast<unsigned long>(max))
    report.minimal_start = std::nullopt;
  else
    report.minimal_start = Int(worst_b + 1);
  return report;
}

ScanReport scan_bo(const PartSystem& system, std::size_t max) {
  if (max < 2) throw std::invalid_argument("scan_bo: max must be >= 2");
  return scan_bo(count_table(system, 2 * max), max);
}

ScanReport scan_logconcavity(const PartitionTable& table, std::size_t lo,
                             std::size_t hi, std::optional<Rat> u,
                             std::optional<long> e) {
  if (lo < 1 || lo >= hi)
    throw std::invalid_argument("scan_logconcavity: need 1 <= lo < hi");
  if (table.n_max() < hi + 1)
    throw std::invalid_argument("scan_logconcavity: table too short, need hi+1");

  const bool strengthened = u.has_value() || e.has_value();
  Rat uu = u.value_or(Rat(1));
  long ee = e.value_or(1);
  if (strengthened) {
    if (uu <= 0) throw std::invalid_argument("scan_logconcavity: u must be > 0");
    if (ee < 1) throw std::invalid_argument("scan_logconcavity: e must be >= 1");
  }

  ScanProperty prop{strengthened ? ScanProperty::Kind::LogConcaveStrengthened
                                 : ScanProperty::Kind::LogConcave,
                    {},
                    {},
                    {}};
  if (strengthened) {
    prop.u = uu;
    prop.e = ee;
  }
  ScanReport report{table.system, prop, Int(lo), Int(hi), {}, {}, {}};

  const Int P = uu.get_num();
  const Int Q = uu.get_den();
  auto chunks = make_chunks(lo, hi);
  std::vector<std::vector<PointViolation>> buckets(chunks.size());
  run_chunked(chunks, [&](std::size_t c, std::size_t n_lo, std::size_t n_hi) {
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      const Int& pn = table.at(n);
      Int outer = table.at(n + 1) * table.at(n - 1);
      Int lhs = pn * pn;
      Int rhs;
      if (strengthened) {
        // p^2 (P n^2)^e > (P n^2 + Q)^e p+ p-  with u = P/Q.
        Int pn2 = P * Int(n) * Int(n);
        lhs *= int_pow(pn2, static_cast<unsigned long>(ee));
        Int bumped = pn2 + Q;
        rhs = outer * int_pow(bumped, static_cast<unsigned long>(ee));
      } else {
        rhs = outer;
      }
      if (!(lhs > rhs))
        buckets[c].push_back(PointViolation{Int(n), Rat(lhs), Rat(rhs)});
    }
  });
  for (auto& bucket : buckets)
    for (auto& v : bucket) report.point_violations.push_back(std::move(v));
  report.minimal_start = point_minimal_start(report.point_violations, lo, hi);
  return report;
}

ScanReport scan_logconcavity(const PartSystem& system, std::size_t lo, std::size_t hi,
                             std::optional<Rat> u, std::optional<long> e) {
  if (lo < 1 || lo >= hi)
    throw std::invalid_argument("scan_logconcavity: need 1 <= lo < hi");
  return scan_logconcavity(count_table(system, hi + 1), lo, hi, std::move(u),
                           std::move(e));
}

ScanReport verify_envelope(const BoundEnvelope& env, std::size_t lo, std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("verify_envelope: need lo <= hi");
  if (env.valid_from > static_cast<unsigned long>(lo))
    throw std::invalid_argument("verify_envelope: lo is below the envelope's valid_from");

  PartitionTable table = count_table(env.system, hi);
  ScanReport report{env.system,
                    ScanProperty{ScanProperty::Kind::Envelope, {}, {}, env.kind},
                    Int(lo),
                    Int(hi),
                    {},
                    {},
                    {}};

  auto chunks = make_chunks(lo, hi);
  std::vector<std::vector<PointViolation>> buckets(chunks.size());
  run_chunked(chunks, [&](std::size_t c, std::size_t n_lo, std::size_t n_hi) {
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      Rat center = env.main(Int(n));
      Rat width = env.err_coeff * rat_pow(Rat(Int(n)), env.err_degree);
      Rat low = center - width;
      Rat high = center + width;
      Rat p(table.at(n));
      if (!(low < p && p < high))
        buckets[c].push_back(PointViolation{Int(n), low, high});
    }
  });
  for (auto& bucket : buckets)
    for (auto& v : bucket) report.point_violations.push_back(std::move(v));
  report.minimal_start = point_minimal_start(report.point_violations, lo, hi);
  return report;
}

ScanReport verify_quasipolynomial(const QuasiPolynomial& qp, std::size_t lo,
                                  std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("verify_quasipolynomial: need lo <= hi");
  PartitionTable table = count_table(qp.system(), hi);
  ScanReport report{qp.system(),
                    ScanProperty{ScanProperty::Kind::QuasiPolynomialMatch, {}, {}, {}},
                    Int(lo),
                    Int(hi),
                    {},
                    {},
                    {}};

  auto chunks = make_chunks(lo, hi);
  std::vector<std::vector<PointViolation>> buckets(chunks.size());
  run_chunked(chunks, [&](std::size_t c, std::size_t n_lo, std::size_t n_hi) {
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      Int predicted = qp.evaluate(Int(n));
      const Int& counted = table.at(n);
      if (predicted != counted)
        buckets[c].push_back(PointViolation{Int(n), Rat(predicted), Rat(counted)});
    }
  });
  for (auto& bucket : buckets)
    for (auto& v : bucket) report.point_violations.push_back(std::move(v));
  report.minimal_start = point_minimal_start(report.point_violations, lo, hi);
  return report;
}

std::optional<Int> minimal_logconcave_start(const PartSystem& system,
                                            std::size_t horizon) {
  if (horizon < 3)
    throw std::invalid_argument("minimal_logconcave_start: horizon must be >= 3");
  ScanReport report = scan_logconcavity(system, 2, horizon);
  if (!report.minimal_start) return std::nullopt;
  // A violation inside the last lcm-length window means the defect is still
  // recurring at the edge of what we can see (the quasi-polynomial period is
  // the natural recurrence scale), so no start gets certified.  Without this
  // guard a periodic violator whose last hit precedes the horizon by a
  // residue-sized gap would be reported as eventually log-concave.
  if (!report.point_violations.empty()) {
    Int window_lo = Int(horizon) - system.lcm() + 1;
    if (*report.minimal_start > window_lo) return std::nullopt;
  }
  return report.minimal_start;
}

}  // namespace partlab
