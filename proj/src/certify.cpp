#include "nlrunge/certify.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>

#include <nlohmann/json.hpp>

namespace nlrunge {

namespace {

using json = nlohmann::ordered_json;

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::vector<ExceptionRecord> scan_chunk(long lo, long hi, unsigned long q,
                                        long r, long s) {
  std::vector<ExceptionRecord> found;
  for (long x = lo; x <= hi; ++x) {
    if (x >= -1 && x <= 1) continue;
    BigInt bx(x);
    auto yr = perfect_power_root(repunit(bx, r), q);
    if (!yr) continue;
    auto ys = perfect_power_root(repunit(bx, s), q);
    if (!ys) continue;
    found.push_back({bx, *yr, *ys});
  }
  return found;
}

}  // namespace

NonexistenceCertificate certify_thm2(unsigned long q, long r, long s,
                                     const CertifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  RungeParams params = derive_params_thm2(q, r, s);
  BoundPair bounds = bound_thm2(params);
  const BoundValue& bv = opts.bound_kind == BoundKind::Internal
                             ? bounds.internal_bound
                             : bounds.theorem_bound;
  BigInt B = bv.largest_integer_below();
  if (B > opts.budget) throw budget_exceeded_error(B);

  NonexistenceCertificate cert;
  cert.q = q;
  cert.r = r;
  cert.s = s;
  cert.bound_kind = opts.bound_kind == BoundKind::Internal ? "internal" : "theorem";
  cert.bound_decimal = bv.decimal();
  cert.search_min = -B;
  cert.search_max = B;
  cert.timestamp = utc_now();
  cert.command = opts.command;

  long b = B.get_si();
  unsigned workers = std::max(1u, opts.workers);
  long span = 2 * b + 1;
  long chunk = std::max<long>(1, span / (4 * static_cast<long>(workers)));
  std::vector<std::pair<long, long>> ranges;
  for (long lo = -b; lo <= b; lo += chunk)
    ranges.emplace_back(lo, std::min(b, lo + chunk - 1));
  cert.chunks = static_cast<unsigned>(ranges.size());

  std::vector<ExceptionRecord> all;
  if (workers == 1) {
    for (auto [lo, hi] : ranges) {
      auto part = scan_chunk(lo, hi, q, r, s);
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<ExceptionRecord>>> futs;
    for (auto [lo, hi] : ranges)
      futs.push_back(std::async(std::launch::async, scan_chunk, lo, hi, q, r, s));
    for (auto& f : futs) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  std::sort(all.begin(), all.end(),
            [](const ExceptionRecord& a, const ExceptionRecord& b) { return a.x < b.x; });
  cert.exceptions = std::move(all);
  cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return cert;
}

std::vector<SolutionRecord> search_nl(long x_max, unsigned long n_max,
                                      unsigned long q_max) {
  std::vector<SolutionRecord> out;
  for (long x = -x_max; x <= x_max; ++x) {
    if (x >= -1 && x <= 1) continue;
    BigInt bx(x);
    BigInt rep = bx + 1;  // repunit(x, 2), extended by Horner below
    for (unsigned long n = 3; n <= n_max; ++n) {
      rep = rep * bx + 1;
      for (unsigned long q = 2; q <= q_max; ++q) {
        auto y = perfect_power_root(rep, q);
        if (!y || abs(*y) <= 1) continue;
        SolutionRecord rec;
        rec.x = bx;
        rec.n = n;
        rec.q = q;
        rec.y = *y;
        BigInt check;
        mpz_pow_ui(check.get_mpz_t(), y->get_mpz_t(), q);
        if (check != rep)
          throw internal_inconsistency_error("search_nl: extracted root fails re-verification");
        NLCandidate cand{bx, n, q, *y};
        auto filt = filter_proposition1(cand);
        rec.matches_known = filt.known;
        rec.proposition1_violations = filt.violations;
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

void verify_known_solutions() {
  struct Known { long x; unsigned long n, q; long y; };
  static const Known known[] = {{3, 5, 2, 11}, {7, 4, 2, 20}, {18, 3, 3, 7}, {-19, 3, 3, 7}};
  for (const auto& k : known) {
    BigInt rep = repunit(BigInt(k.x), k.n);
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(k.y), k.q);
    if (rep != pow)
      throw internal_inconsistency_error("known solution fails: x=" + std::to_string(k.x));
    auto root = perfect_power_root(rep, k.q);
    if (!root || abs(*root) != k.y)
      throw internal_inconsistency_error("root extraction fails on known solution");
  }
  if (repunit(BigInt(18), 3) != repunit(BigInt(-19), 3))
    throw internal_inconsistency_error("the two n = 3 solutions must share the value 343");
}

std::string certificate_to_json(const NonexistenceCertificate& cert) {
  json j;
  j["schema_version"] = cert.schema_version;
  j["variant"] = cert.variant;
  j["q"] = cert.q;
  j["r"] = cert.r;
  j["s"] = cert.s;
  j["bound_kind"] = cert.bound_kind;
  j["bound_decimal"] = cert.bound_decimal;
  j["search_min"] = cert.search_min.get_si();
  j["search_max"] = cert.search_max.get_si();
  j["exceptions"] = json::array();
  for (const auto& e : cert.exceptions)
    j["exceptions"].push_back({{"x", e.x.get_si()},
                               {"y_r", e.y_r.get_str()},
                               {"y_s", e.y_s.get_str()}});
  j["chunks"] = cert.chunks;
  j["elapsed_ms"] = cert.elapsed_ms;
  j["engine_version"] = cert.engine_version;
  j["timestamp"] = cert.timestamp;
  j["command"] = cert.command;
  return j.dump(2);
}

std::string solutions_to_json(const std::vector<SolutionRecord>& sols) {
  json arr = json::array();
  for (const auto& s : sols) {
    json j;
    j["x"] = s.x.get_si();
    j["n"] = s.n;
    j["q"] = s.q;
    j["y"] = s.y.get_str();
    j["matches_known"] = s.matches_known;
    j["proposition1_violations"] = s.proposition1_violations;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace nlrunge
