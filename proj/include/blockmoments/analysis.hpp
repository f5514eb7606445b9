#ifndef BLOCKMOMENTS_ANALYSIS_HPP
#define BLOCKMOMENTS_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "blockmoments/bigint.hpp"
#include "blockmoments/closedform.hpp"
#include "blockmoments/presentation.hpp"

namespace blockmoments {

enum class MomentMethod {
  closed,       // closed-form expression only
  dp,           // state-table oracle
  binomial,     // collected-expansion oracle
  enumeration,  // brute force, capped ("enum" on the CLI)
  all,          // closed + exact (dp) + agreement
};

std::string to_string(MomentMethod method);
std::optional<MomentMethod> parse_method(const std::string& token);

/// One row of a moment series: the m-th moment of x + x^-1 for a generator
/// of the given order. Single-method runs populate only their own column.
struct MomentRecord {
  unsigned m = 0;
  Order order = Order::infinite();
  std::optional<BigInt> closed_value;
  std::optional<BigInt> exact_value;
  std::optional<bool> agree;  // present iff both columns are
  std::optional<ClosedFormCase> form;
  bool order_one_warning = false;
};

/// A single record; `all` computes the exact column by dp and sets `agree`.
MomentRecord moment_record(const Order& order, unsigned m,
                           MomentMethod method);

/// Records for m = 0..max_m. The exact column of `all` is computed by dp.
/// The moment depends only on (m, order), so any two generators of equal
/// order produce identical series.
std::vector<MomentRecord> moment_series(const Order& order, unsigned max_m,
                                        MomentMethod method);

/// Where the closed forms match the definitional trace, and where they
/// don't.
struct AuditReport {
  Order order = Order::infinite();
  unsigned max_m = 0;
  std::vector<MomentRecord> records;  // m = 0..max_m, method all
  std::optional<unsigned> first_disagreement;
  unsigned agree_count = 0;
  unsigned disagree_count = 0;
};

AuditReport audit(const Order& order, unsigned max_m);

enum class CompareMode {
  theorem,  // equal finite orders, or both infinite
  oracle,   // compare exact moments for m = 1..max_m
};

std::string to_string(CompareMode mode);

struct DistributionComparison {
  Order left = Order::infinite();
  Order right = Order::infinite();
  CompareMode mode = CompareMode::theorem;
  std::optional<unsigned> max_m;  // resolved bound, oracle mode only
  bool identically_distributed = false;
  std::optional<unsigned> witness;  // minimal m where exact moments differ
};

/// Theorem mode applies the identical-distribution criterion directly: true
/// iff both orders are finite and equal, or both are infinite (the mixed
/// case is reported as not identical; no claim covers it). Oracle mode
/// compares exact_moment_dp for m = 1..max_m and reports the first
/// difference as witness; when max_m is unset it defaults to twice the
/// largest finite order involved, or 20 when both are infinite. Throws
/// std::invalid_argument for an explicit max_m of 0 in oracle mode.
DistributionComparison compare_distributions(
    const Order& left, const Order& right, CompareMode mode,
    std::optional<unsigned> max_m = std::nullopt);

}  // namespace blockmoments

#endif  // BLOCKMOMENTS_ANALYSIS_HPP
