#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/hilbert.hpp"
#include "detgb/polynomial.hpp"

namespace detgb {

/// Parsed instance file: a p x q polynomial matrix, or a critical-point
/// system g, f_1, ..., f_p.
struct Instance {
  enum class Kind { Matrix, System };

  Kind kind = Kind::Matrix;
  PrimeField field;
  int nvars = 0;
  int p = 0;
  /// Columns of the matrix; unused for systems.
  int q = 0;
  /// Entry degree for matrices, common degree of g and F for systems.
  int d0 = 0;
  PolyMatrix matrix;
  Polynomial g;
  std::vector<Polynomial> F;
};

/// Lines: `prime P`, `nvars N`, then `matrix P Q degree D0` followed by the
/// P*Q entries row-major, or `system P degree D0` followed by g, f_1..f_p.
/// Blank lines and lines starting with '#' are ignored.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);
std::string format_instance(const Instance& inst);

Instance generate_minors_instance(int n, int p, int q, int d0, std::uint32_t prime, std::uint64_t seed);
Instance generate_crit_instance(int n, int p, int d0, std::uint32_t prime, std::uint64_t seed);

/// Degree bound used when none is given on the command line.
int default_degree_bound(const Instance& inst);

struct VerifyRow {
  int d = 0;
  BigInt rank;
  BigInt rank_derived;
  BigInt rank_paper;
  BigInt h_measured;
  BigInt h_derived;
  BigInt h_paper;
};

struct VerifyReport {
  Instance::Kind kind = Instance::Kind::Matrix;
  int degree_bound = 0;
  std::vector<VerifyRow> rows;
  bool derived_ok = false;
  bool paper_ok = false;

  /// "match"/"mismatch" for matrices; "derived", "paper-literal",
  /// "ambiguous" or "none" for critical-point systems.
  std::string verdict() const;
  bool mismatch() const;
  std::string to_string() const;
};

/// Per-degree Macaulay ranks and syzygy-term layer sizes against the
/// closed-form predictions of both entry-degree conventions.
VerifyReport verify_instance(const Instance& inst, int D);

/// Exit codes: 0 success, 2 parse/shape/IO error, 3 invariant violation,
/// 4 verification mismatch.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detgb
