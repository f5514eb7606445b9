// Acceptance gate: one wall-clocked pass/fail line per criterion.
// Criterion 10 drives the installed CLI binary; point BLOCKMOMENTS_CLI at it
// (ctest does this automatically).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "blockmoments/analysis.hpp"
#include "blockmoments/closedform.hpp"
#include "blockmoments/formal.hpp"
#include "blockmoments/oracle.hpp"
#include "blockmoments/presentation.hpp"

using namespace blockmoments;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    if (ok) detail = message;
    ok = false;
  }
};

template <typename A, typename B>
std::string mismatch(const std::string& where, const A& left, const B& right) {
  std::ostringstream s;
  s << where << ": " << left << " != " << right;
  return s.str();
}

Outcome free_generator_moments() {
  Outcome out;
  for (unsigned m = 0; m <= 30; ++m) {
    const BigInt expected = m % 2 == 0 ? binomial(m, m / 2) : BigInt(0);
    const BigInt dp = exact_moment_dp(m, Order::infinite());
    if (dp != expected) {
      out.fail(mismatch("dp m=" + std::to_string(m), dp, expected));
    }
    const BigInt closed = closed_moment(m, Order::infinite()).value;
    if (closed != expected) {
      out.fail(mismatch("closed m=" + std::to_string(m), closed, expected));
    }
  }
  return out;
}

Outcome at_order_moments() {
  Outcome out;
  const auto expected = [](unsigned n) {
    return n % 2 == 0 ? BigInt(2) + binomial(n, n / 2) : BigInt(2);
  };
  for (unsigned n = 1; n <= 20; ++n) {
    const BigInt want = expected(n);
    const BigInt via_enum = exact_moment_enum(n, Order::finite(n));
    if (via_enum != want) {
      out.fail(mismatch("enum n=" + std::to_string(n), via_enum, want));
    }
    if (closed_moment(n, Order::finite(n)).value != want) {
      out.fail("closed disagrees at n=" + std::to_string(n));
    }
  }
  for (unsigned n = 21; n <= 40; ++n) {  // past the enumeration budget
    const BigInt want = expected(n);
    if (exact_moment_dp(n, Order::finite(n)) != want) {
      out.fail("dp disagrees at n=" + std::to_string(n));
    }
    if (closed_moment(n, Order::finite(n)).value != want) {
      out.fail("closed disagrees at n=" + std::to_string(n));
    }
  }
  return out;
}

Outcome below_order_agreement() {
  Outcome out;
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      const BigInt closed = closed_moment(m, Order::finite(n)).value;
      const BigInt exact = exact_moment_dp(m, Order::finite(n));
      if (closed != exact) {
        out.fail(mismatch("n=" + std::to_string(n) + " m=" + std::to_string(m),
                          closed, exact));
      }
    }
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::vector<Order> wide = {Order::infinite()};
  for (unsigned n = 1; n <= 16; ++n) wide.push_back(Order::finite(n));
  for (unsigned m = 0; m <= 200; ++m) {
    for (const Order& order : wide) {
      if (exact_moment_dp(m, order) != exact_moment_binomial(m, order)) {
        out.fail("dp vs binomial at m=" + std::to_string(m) + " order " +
                 to_string(order));
      }
    }
  }
  std::vector<Order> narrow = {Order::infinite()};
  for (unsigned n = 1; n <= 8; ++n) narrow.push_back(Order::finite(n));
  for (unsigned m = 0; m <= 20; ++m) {
    for (const Order& order : narrow) {
      if (exact_moment_dp(m, order) != exact_moment_enum(m, order)) {
        out.fail("dp vs enum at m=" + std::to_string(m) + " order " +
                 to_string(order));
      }
    }
  }
  return out;
}

Outcome block_set_census() {
  Outcome out;
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned k = 1; k <= 6 && k * n <= kEnumerationCap; ++k) {
      const SequenceClassification c = classify_sequences(k * n, n);
      const std::string at = " at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
      if (!c.k || *c.k != k || !c.count_Wj || !c.count_Wj_prime ||
          !c.count_Wj_minus_prime || !c.count_Wj_cap_S0) {
        out.fail("missing block census" + at);
        continue;
      }
      if (BigInt(*c.count_Wj) != BigInt(1) << k) {
        out.fail("|Wj| != 2^k" + at);
      }
      if (BigInt(*c.count_Wj_prime) != central_bracket(k)) {
        out.fail("|Wj'| != central bracket" + at);
      }
      if (k % 2 == 0) {
        // Wj' is exactly the zero-sum slice of Wj.
        if (*c.count_Wj_cap_S0 != *c.count_Wj_prime) {
          out.fail("|Wj ∩ S0| != |Wj'|" + at);
        }
      } else if (*c.count_Wj_cap_S0 != 0) {
        out.fail("odd k should make Wj ∩ S0 empty" + at);
      }
      if (*c.count_Wj_minus_prime + *c.count_Wj_prime != *c.count_Wj) {
        out.fail("census does not partition Wj" + at);
      }
    }
  }
  return out;
}

Outcome audit_goldens() {
  Outcome out;
  const struct {
    unsigned n, m;
    BigInt closed, exact;
  } golden[] = {
      {3, 6, 22, 22},
      {3, 4, 8, 6},
      {2, 3, 2, 0},
      {4, 8, 72, 128},
  };
  for (const auto& g : golden) {
    const Order order = Order::finite(g.n);
    const std::string at =
        " at n=" + std::to_string(g.n) + " m=" + std::to_string(g.m);
    if (closed_moment(g.m, order).value != g.closed) {
      out.fail("closed golden" + at);
    }
    if (exact_moment_dp(g.m, order) != g.exact) out.fail("dp golden" + at);
    if (exact_moment_enum(g.m, order) != g.exact) {
      out.fail("enumeration golden" + at);
    }
  }
  const AuditReport report = audit(Order::finite(3), 6);
  if (!report.first_disagreement || *report.first_disagreement != 4) {
    out.fail("audit(order 3, max_m 6) first disagreement is not 4");
  }
  return out;
}

Outcome identical_distribution() {
  Outcome out;
  for (unsigned n = 1; n <= 10; ++n) {
    if (!compare_distributions(Order::finite(n), Order::finite(n),
                               CompareMode::theorem)
             .identically_distributed) {
      out.fail("theorem mode rejects equal order " + std::to_string(n));
    }
    const auto oracle = compare_distributions(
        Order::finite(n), Order::finite(n), CompareMode::oracle);
    if (!oracle.identically_distributed || oracle.witness ||
        *oracle.max_m != 2 * n) {
      out.fail("oracle mode finds a witness for equal order " +
               std::to_string(n));
    }
  }
  if (!compare_distributions(Order::infinite(), Order::infinite(),
                             CompareMode::theorem)
           .identically_distributed ||
      !compare_distributions(Order::infinite(), Order::infinite(),
                             CompareMode::oracle)
           .identically_distributed) {
    out.fail("the two free cases should match");
  }
  for (unsigned n1 = 1; n1 <= 10; ++n1) {
    for (unsigned n2 = n1 + 1; n2 <= 10; ++n2) {
      const auto cmp = compare_distributions(
          Order::finite(n1), Order::finite(n2), CompareMode::oracle);
      if (cmp.identically_distributed || !cmp.witness || *cmp.witness > n2) {
        out.fail("no small witness for " + std::to_string(n1) + " vs " +
                 std::to_string(n2));
      }
    }
    const auto mixed = compare_distributions(Order::finite(n1),
                                             Order::infinite(),
                                             CompareMode::oracle);
    if (mixed.identically_distributed || !mixed.witness ||
        *mixed.witness > n1) {
      out.fail("no small witness for " + std::to_string(n1) + " vs inf");
    }
  }
  return out;
}

Outcome formal_coherence() {
  Outcome out;
  for (unsigned m = 0; m <= 20; ++m) {
    for (unsigned n = 1; n <= 10; ++n) {
      const BigInt via_formal =
          canonical_trace(reduce_mod_order(expand_block_power(m), n));
      if (via_formal != exact_moment_dp(m, Order::finite(n))) {
        out.fail("trace(reduce(expand)) != dp at m=" + std::to_string(m) +
                 " n=" + std::to_string(n));
      }
    }
  }
  return out;
}

Outcome parser_end_to_end() {
  Outcome out;
  const Presentation s3 = parse_presentation("<a, b | a^2, b^3, (ab)^2>");
  if (detect_power_order(s3, {"a"}).order != Order::finite(2)) {
    out.fail("S3: a should have order 2");
  }
  if (detect_power_order(s3, {"b"}).order != Order::finite(3)) {
    out.fail("S3: b should have order 3");
  }
  const Presentation conjugated = parse_presentation("<a, b | b a^2 b^-1>");
  if (detect_power_order(conjugated, {"a"}).order != Order::finite(2)) {
    out.fail("conjugated relator: a should have order 2");
  }

  const char* corpus[] = {
      "<a, b | a^2, b^3, (ab)^2>",
      "<a, b | b a^2 b^-1>",
      "<a | a^2>",
      "<a | a>",
      "<a | a^-6>",
      "<x |>",
      "<x, y | x y x^-1 y^-1>",
      "<a, b, c | a^2, b^2, c^2, (ab)^3, (bc)^3, (ac)^2>",
      "<r, s | r^7, s^2, s r s^-1 r>",
      "<g1, g2 | g1^4, g2^4, (g1 g2)^2>",
      "<a, b | (ab)^5>",
      "<a, b | a^3 b^-2>",
      "<a, b | abab>",
      "<u, v, w | u v w, w v u>",
      "<a | a^100>",
      "<t | t^12, t^8>",
      "<a, b | (a b^-1)^2, b^6>",
      "<p, q | p^2 q^2, (pq)^2>",
      "<a, b, ab | a b>",
      "<m, n | m n m n^-1, n^9>",
      "<a, b | ((ab)^2 a)^3>",
      "<z | z^-1>",
  };
  int count = 0;
  for (const char* text : corpus) {
    const Presentation p = parse_presentation(text);
    if (parse_presentation(serialize(p)) != p) {
      out.fail(std::string("round trip failed for ") + text);
    }
    ++count;
  }
  if (count < 20) out.fail("corpus too small");
  return out;
}

struct ShellResult {
  int code = -1;
  std::string out;
};

ShellResult shell(const std::string& command) {
  ShellResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  return result;
}

Outcome cli_contract() {
  Outcome out;
  const char* cli = std::getenv("BLOCKMOMENTS_CLI");
  if (cli == nullptr || *cli == '\0') {
    out.fail("BLOCKMOMENTS_CLI is not set");
    return out;
  }
  const std::string tool = std::string("'") + cli + "'";

  // Byte-identical repeats.
  const std::string audit_json = tool + " audit --order 3 --max-m 6";
  const std::string audit_csv = audit_json + " --format csv";
  const ShellResult json1 = shell(audit_json);
  const ShellResult json2 = shell(audit_json);
  const ShellResult csv1 = shell(audit_csv);
  const ShellResult csv2 = shell(audit_csv);
  if (json1.code != 0 || json1.out != json2.out) {
    out.fail("json audit runs are not byte-identical");
  }
  if (csv1.code != 0 || csv1.out != csv2.out) {
    out.fail("csv audit runs are not byte-identical");
  }

  // CSV / JSON cross-consistency on the golden audit, without a JSON
  // library: locate each record object by its unique "m" key and check the
  // csv cells against that slice.
  const auto record_block = [&](const std::string& m) {
    const std::string key = "\"m\": \"" + m + "\"";
    const auto begin = json1.out.find(key);
    if (begin == std::string::npos) return std::string();
    return json1.out.substr(begin, json1.out.find('}', begin) - begin);
  };
  std::istringstream rows(csv1.out);
  std::string line;
  if (!std::getline(rows, line) || line != "m,closed,exact,agree,case") {
    out.fail("unexpected csv header: " + line);
  }
  int row_count = 0;
  while (std::getline(rows, line)) {
    ++row_count;
    std::istringstream cells(line);
    std::string m, closed, exact, agree, label;
    std::getline(cells, m, ',');
    std::getline(cells, closed, ',');
    std::getline(cells, exact, ',');
    std::getline(cells, agree, ',');
    std::getline(cells, label, ',');
    const std::string record = record_block(m);
    if (record.empty() ||
        record.find("\"closed\": \"" + closed + "\"") == std::string::npos ||
        record.find("\"exact\": \"" + exact + "\"") == std::string::npos ||
        record.find("\"agree\": " + agree) == std::string::npos ||
        record.find("\"case\": \"" + label + "\"") == std::string::npos) {
      out.fail("csv row m=" + m + " does not match the json record");
    }
  }
  if (row_count != 7) out.fail("csv should carry 7 rows");
  if (json1.out.find("\"first_disagreement\": \"4\"") == std::string::npos) {
    out.fail("json audit lacks first_disagreement 4");
  }

  // Exit-code matrix.
  const struct {
    std::string args;
    int expected;
  } matrix[] = {
      {"moment --order 3 -m 6", 0},
      {"", 1},
      {"frobnicate", 1},
      {"moment -m 3", 1},
      {"moment --order 3 -m 3 --method bogus", 1},
      {"moment --order 3 --free -m 3", 1},
      {"parse --presentation-text '<a | a^'", 2},
      {"parse --presentation-text '<a | ax>'", 2},
      {"parse /nonexistent.grp", 2},
      {"moment --free -m 30 --method enum", 3},
      {"classify -m 30 --order 2", 3},
  };
  for (const auto& probe : matrix) {
    const ShellResult r = shell(tool + " " + probe.args);
    if (r.code != probe.expected) {
      out.fail("exit code for '" + probe.args + "': got " +
               std::to_string(r.code) + ", want " +
               std::to_string(probe.expected));
    }
  }
  return out;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  } criteria[] = {
      {"free-generator moments m <= 30", 1.0, free_generator_moments},
      {"at-order moments through n = 40", 5.0, at_order_moments},
      {"below-order closed/exact agreement", 1.0, below_order_agreement},
      {"triple-oracle equivalence", 30.0, oracle_equivalence},
      {"block-set census identities", 60.0, block_set_census},
      {"audit golden values", 1.0, audit_goldens},
      {"identical-distribution criteria", 5.0, identical_distribution},
      {"formal expansion coherence", 5.0, formal_coherence},
      {"parser end-to-end round trips", 1.0, parser_end_to_end},
      {"cli determinism and exit codes", 5.0, cli_contract},
  };

  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.budget_seconds) {
      outcome.fail("exceeded " + std::to_string(criterion.budget_seconds) +
                   " s budget");
    }
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %2d. %s (%.3f s)",
                  outcome.ok ? "PASS" : "FAIL", index, criterion.name,
                  elapsed);
    std::cout << line;
    if (!outcome.ok) std::cout << " — " << outcome.detail;
    std::cout << '\n';
    if (!outcome.ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
