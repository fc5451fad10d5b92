#ifndef NLRUNGE_CERTIFY_HPP
#define NLRUNGE_CERTIFY_HPP

#include <string>
#include <vector>

#include "nlrunge/bounds.hpp"
#include "nlrunge/descent.hpp"
#include "nlrunge/exact.hpp"

namespace nlrunge {

inline constexpr const char* kEngineVersion = "nlrunge 1.0.0";
inline constexpr int kCertificateSchemaVersion = 1;

/// Thrown when a search bound exceeds the configured budget; carries the
/// exact bound so the refusal is never a silent truncation.
struct budget_exceeded_error : std::runtime_error {
  explicit budget_exceeded_error(const BigInt& bound)
      : std::runtime_error("search bound " + bound.get_str() +
                           " exceeds the configured budget"),
        bound(bound) {}
  BigInt bound;
};

enum class BoundKind { Internal, Theorem };

struct CertifyOptions {
  BoundKind bound_kind = BoundKind::Theorem;
  BigInt budget = 1000000000;  // refuse searches beyond this |x|
  unsigned workers = 1;
  std::string command;  // recorded verbatim in the certificate
};

struct ExceptionRecord {
  BigInt x;
  BigInt y_r;  // q-th root of repunit(x, r)
  BigInt y_s;  // q-th root of repunit(x, s)
};

struct NonexistenceCertificate {
  int schema_version = kCertificateSchemaVersion;
  std::string variant = "thm2";
  unsigned long q = 0;
  long r = 0, s = 0;
  std::string bound_kind;
  std::string bound_decimal;
  BigInt search_min, search_max;
  std::vector<ExceptionRecord> exceptions;
  unsigned chunks = 0;
  long elapsed_ms = 0;
  std::string engine_version = kEngineVersion;
  std::string timestamp;
  std::string command;
};

/// Exhaustive check of the simultaneous system over 1 < |x| <= B, where B is
/// the largest integer below the chosen Theorem-2 bound.
NonexistenceCertificate certify_thm2(unsigned long q, long r, long s,
                                     const CertifyOptions& opts = {});

struct SolutionRecord {
  BigInt x;
  unsigned long n = 0, q = 0;
  BigInt y;
  bool matches_known = false;
  std::vector<std::string> proposition1_violations;
};

/// All solutions of the repunit-power equation in the box
/// 1 < |x| <= x_max, 2 < n <= n_max, 2 <= q <= q_max, each verified exactly.
std::vector<SolutionRecord> search_nl(long x_max, unsigned long n_max,
                                      unsigned long q_max);

/// Self-test on the four known solutions; throws on any failure.
void verify_known_solutions();

std::string certificate_to_json(const NonexistenceCertificate& cert);
std::string solutions_to_json(const std::vector<SolutionRecord>& sols);

}  // namespace nlrunge

#endif
