#include "blockmoments/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "blockmoments/oracle.hpp"

namespace blockmoments {

std::string to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::closed: return "closed";
    case MomentMethod::dp: return "dp";
    case MomentMethod::binomial: return "binomial";
    case MomentMethod::enumeration: return "enum";
    case MomentMethod::all: return "all";
  }
  return "unknown";
}

std::optional<MomentMethod> parse_method(const std::string& token) {
  if (token == "closed") return MomentMethod::closed;
  if (token == "dp") return MomentMethod::dp;
  if (token == "binomial") return MomentMethod::binomial;
  if (token == "enum") return MomentMethod::enumeration;
  if (token == "all") return MomentMethod::all;
  return std::nullopt;
}

std::string to_string(CompareMode mode) {
  return mode == CompareMode::theorem ? "theorem" : "oracle";
}

MomentRecord moment_record(const Order& order, unsigned m,
                           MomentMethod method) {
  MomentRecord rec;
  rec.m = m;
  rec.order = order;
  switch (method) {
    case MomentMethod::closed: {
      const ClosedMoment closed = closed_moment(m, order);
      rec.closed_value = closed.value;
      rec.form = closed.form;
      rec.order_one_warning = closed.order_one_warning;
      break;
    }
    case MomentMethod::dp:
      rec.exact_value = exact_moment_dp(m, order);
      break;
    case MomentMethod::binomial:
      rec.exact_value = exact_moment_binomial(m, order);
      break;
    case MomentMethod::enumeration:
      rec.exact_value = exact_moment_enum(m, order);
      break;
    case MomentMethod::all: {
      const ClosedMoment closed = closed_moment(m, order);
      rec.closed_value = closed.value;
      rec.form = closed.form;
      rec.order_one_warning = closed.order_one_warning;
      rec.exact_value = exact_moment_dp(m, order);
      rec.agree = (*rec.closed_value == *rec.exact_value);
      break;
    }
  }
  return rec;
}

std::vector<MomentRecord> moment_series(const Order& order, unsigned max_m,
                                        MomentMethod method) {
  std::vector<MomentRecord> records;
  records.reserve(max_m + 1);
  for (unsigned m = 0; m <= max_m; ++m) {
    records.push_back(moment_record(order, m, method));
  }
  return records;
}

AuditReport audit(const Order& order, unsigned max_m) {
  AuditReport report;
  report.order = order;
  report.max_m = max_m;
  report.records = moment_series(order, max_m, MomentMethod::all);
  for (const MomentRecord& rec : report.records) {
    if (*rec.agree) {
      ++report.agree_count;
    } else {
      ++report.disagree_count;
      if (!report.first_disagreement) report.first_disagreement = rec.m;
    }
  }
  return report;
}

DistributionComparison compare_distributions(const Order& left,
                                             const Order& right,
                                             CompareMode mode,
                                             std::optional<unsigned> max_m) {
  DistributionComparison cmp;
  cmp.left = left;
  cmp.right = right;
  cmp.mode = mode;
  if (mode == CompareMode::theorem) {
    cmp.identically_distributed =
        (left.is_finite() == right.is_finite()) &&
        (!left.is_finite() || left.value() == right.value());
    return cmp;
  }
  unsigned bound;
  if (max_m) {
    if (*max_m == 0) throw std::invalid_argument("max_m must be >= 1");
    bound = *max_m;
  } else if (left.is_finite() || right.is_finite()) {
    unsigned largest = 0;
    if (left.is_finite()) largest = std::max(largest, left.value());
    if (right.is_finite()) largest = std::max(largest, right.value());
    bound = 2 * largest;
  } else {
    bound = 20;
  }
  cmp.max_m = bound;
  cmp.identically_distributed = true;
  for (unsigned m = 1; m <= bound; ++m) {
    if (exact_moment_dp(m, left) != exact_moment_dp(m, right)) {
      cmp.identically_distributed = false;
      cmp.witness = m;
      break;
    }
  }
  return cmp;
}

}  // namespace blockmoments
