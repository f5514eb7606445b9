#include "blockmoments/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockmoments/analysis.hpp"
#include "blockmoments/formal.hpp"
#include "blockmoments/oracle.hpp"
#include "blockmoments/presentation.hpp"

namespace blockmoments::cli {
namespace {

using nlohmann::ordered_json;

/// Error carrying an explicit process exit code.
class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitParse, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// One operator source: a presentation plus generator, a bare finite order,
/// or the free (infinite order) case. Exactly one must be chosen.
struct SourceOptions {
  std::string presentation_path;
  std::string presentation_text;
  std::string generator;
  std::uint64_t order_value = 1;
  bool free_flag = false;

  CLI::Option* path_opt = nullptr;
  CLI::Option* text_opt = nullptr;
  CLI::Option* generator_opt = nullptr;
  CLI::Option* order_opt = nullptr;
  CLI::Option* free_opt = nullptr;
  std::string prefix;
};

void add_source_options(CLI::App* cmd, SourceOptions& src,
                        const std::string& prefix) {
  src.prefix = prefix;
  src.path_opt =
      cmd->add_option("--" + prefix + "presentation", src.presentation_path,
                      "file with presentation text '<gens | relators>'");
  src.text_opt =
      cmd->add_option("--" + prefix + "presentation-text",
                      src.presentation_text, "presentation text inline");
  src.generator_opt =
      cmd->add_option("--" + prefix + "generator", src.generator,
                      "generator whose block operator is studied");
  src.order_opt = cmd->add_option("--" + prefix + "order", src.order_value,
                                  "generator order n >= 1, given directly");
  src.free_opt = cmd->add_flag("--" + prefix + "free", src.free_flag,
                               "free generator (infinite order)");
}

struct ResolvedSource {
  Order order = Order::infinite();
  ordered_json echo = ordered_json::object();
};

ResolvedSource resolve_source(const SourceOptions& src) {
  const bool has_presentation =
      src.path_opt->count() > 0 || src.text_opt->count() > 0;
  const int chosen = (has_presentation ? 1 : 0) +
                     (src.order_opt->count() > 0 ? 1 : 0) +
                     (src.free_opt->count() > 0 ? 1 : 0);
  const std::string p = "--" + src.prefix;
  if (chosen != 1) {
    throw CliError(kExitUsage, "specify exactly one of " + p +
                                   "presentation[-text], " + p + "order or " +
                                   p + "free");
  }
  ResolvedSource out;
  if (src.order_opt->count() > 0) {
    if (src.order_value == 0) {
      throw CliError(kExitUsage, p + "order must be >= 1");
    }
    out.order = Order::finite(static_cast<unsigned>(src.order_value));
    out.echo["order"] = to_string(out.order);
    return out;
  }
  if (src.free_opt->count() > 0) {
    out.echo["order"] = "inf";
    return out;
  }
  if (src.path_opt->count() > 0 && src.text_opt->count() > 0) {
    throw CliError(kExitUsage, "give " + p + "presentation or " + p +
                                   "presentation-text, not both");
  }
  if (src.generator_opt->count() == 0) {
    throw CliError(kExitUsage,
                   p + "generator is required with " + p + "presentation");
  }
  const std::string text = src.path_opt->count() > 0
                               ? read_file(src.presentation_path)
                               : src.presentation_text;
  const Presentation presentation = parse_presentation(text);
  if (!presentation.has_generator(src.generator)) {
    throw CliError(kExitParse,
                   "unknown generator '" + src.generator + "'");
  }
  const GeneratorSpec spec =
      detect_power_order(presentation, GeneratorSymbol{src.generator});
  out.order = spec.order;
  out.echo["presentation"] = serialize(presentation);
  out.echo["generator"] = src.generator;
  out.echo["order"] = to_string(out.order);
  return out;
}

void check_generator_use(const SourceOptions& src) {
  const bool has_presentation =
      src.path_opt->count() > 0 || src.text_opt->count() > 0;
  if (src.generator_opt->count() > 0 && !has_presentation) {
    throw CliError(kExitUsage, "--" + src.prefix + "generator requires --" +
                                   src.prefix + "presentation");
  }
}

ordered_json envelope(const std::string& command, ordered_json inputs,
                      ordered_json payload) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["payload"] = std::move(payload);
  return j;
}

void emit(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << "\n";
}

ordered_json record_json(const MomentRecord& rec) {
  ordered_json j;
  j["m"] = std::to_string(rec.m);
  j["order"] = to_string(rec.order);
  if (rec.closed_value) j["closed"] = rec.closed_value->str();
  if (rec.exact_value) j["exact"] = rec.exact_value->str();
  if (rec.agree) j["agree"] = *rec.agree;
  if (rec.form) {
    j["case"] = to_string(rec.form->label);
    if (rec.form->k1) j["k1"] = std::to_string(*rec.form->k1);
    if (rec.form->k2) j["k2"] = std::to_string(*rec.form->k2);
  }
  if (rec.order_one_warning) j["order_one_warning"] = true;
  return j;
}

void emit_records_csv(std::ostream& out,
                      const std::vector<MomentRecord>& records) {
  out << "m,closed,exact,agree,case\n";
  for (const MomentRecord& rec : records) {
    out << rec.m << ',';
    if (rec.closed_value) out << rec.closed_value->str();
    out << ',';
    if (rec.exact_value) out << rec.exact_value->str();
    out << ',';
    if (rec.agree) out << (*rec.agree ? "true" : "false");
    out << ',';
    if (rec.form) out << to_string(rec.form->label);
    out << '\n';
  }
}

ordered_json formal_sum_json(const FormalSum& a) {
  ordered_json obj = ordered_json::object();
  for (const auto& [exponent, value] : a.coefficients()) {
    obj[std::to_string(exponent)] = value.str();
  }
  return obj;
}

constexpr const char* kMethods[] = {"closed", "dp", "binomial",
                                    "enum",   "all", "formal"};

struct ParseConfig {
  std::string file;
  std::string text;
  CLI::Option* file_opt = nullptr;
  CLI::Option* text_opt = nullptr;
};

void run_parse(const ParseConfig& cfg, std::ostream& out) {
  const bool from_file = cfg.file_opt->count() > 0;
  if (from_file == (cfg.text_opt->count() > 0)) {
    throw CliError(kExitUsage,
                   "give exactly one of FILE or --presentation-text");
  }
  const std::string text = from_file ? read_file(cfg.file) : cfg.text;
  const Presentation presentation = parse_presentation(text);

  ordered_json inputs;
  if (from_file) {
    inputs["presentation_file"] = cfg.file;
  } else {
    inputs["presentation"] = cfg.text;
  }
  ordered_json payload;
  payload["generators"] = ordered_json::array();
  for (const auto& g : presentation.generators) {
    payload["generators"].push_back(g.name);
  }
  payload["relators"] = ordered_json::array();
  for (const Word& r : presentation.relators) {
    payload["relators"].push_back(word_text(r));
  }
  payload["canonical"] = serialize(presentation);
  ordered_json orders = ordered_json::object();
  for (const auto& g : presentation.generators) {
    orders[g.name] = to_string(detect_power_order(presentation, g).order);
  }
  payload["orders"] = std::move(orders);
  emit(out, envelope("parse", std::move(inputs), std::move(payload)));
}

struct MomentConfig {
  SourceOptions source;
  unsigned m = 0;
  std::string method = "all";
  std::string format = "json";
};

void run_moment(const MomentConfig& cfg, std::ostream& out) {
  check_generator_use(cfg.source);
  const ResolvedSource src = resolve_source(cfg.source);
  ordered_json inputs = src.echo;
  inputs["m"] = std::to_string(cfg.m);
  inputs["method"] = cfg.method;

  if (cfg.method == "formal") {
    if (cfg.format == "csv") {
      throw CliError(kExitUsage,
                     "csv output is not available for --method formal");
    }
    const FormalSum expanded = expand_block_power(cfg.m);
    const FormalSum element = src.order.is_finite()
                                  ? reduce_mod_order(expanded,
                                                     src.order.value())
                                  : expanded;
    ordered_json payload;
    payload["m"] = std::to_string(cfg.m);
    payload["order"] = to_string(src.order);
    payload["exact"] = canonical_trace(element).str();
    payload["formal_sum"] = formal_sum_json(element);
    emit(out, envelope("moment", std::move(inputs), std::move(payload)));
    return;
  }

  const MomentRecord rec =
      moment_record(src.order, cfg.m, *parse_method(cfg.method));
  if (cfg.format == "csv") {
    emit_records_csv(out, {rec});
    return;
  }
  emit(out, envelope("moment", std::move(inputs), record_json(rec)));
}

struct SeriesConfig {
  SourceOptions source;
  unsigned max_m = 0;
  std::string method = "all";
  std::string format = "json";
};

void run_series(const SeriesConfig& cfg, std::ostream& out) {
  check_generator_use(cfg.source);
  if (cfg.method == "formal") {
    throw CliError(kExitUsage,
                   "--method formal is only available for the moment command");
  }
  const ResolvedSource src = resolve_source(cfg.source);
  const std::vector<MomentRecord> records =
      moment_series(src.order, cfg.max_m, *parse_method(cfg.method));
  if (cfg.format == "csv") {
    emit_records_csv(out, records);
    return;
  }
  ordered_json inputs = src.echo;
  inputs["max_m"] = std::to_string(cfg.max_m);
  inputs["method"] = cfg.method;
  ordered_json payload;
  payload["records"] = ordered_json::array();
  for (const MomentRecord& rec : records) {
    payload["records"].push_back(record_json(rec));
  }
  emit(out, envelope("series", std::move(inputs), std::move(payload)));
}

struct AuditConfig {
  SourceOptions source;
  unsigned max_m = 0;
  std::string format = "json";
};

void run_audit(const AuditConfig& cfg, std::ostream& out) {
  check_generator_use(cfg.source);
  const ResolvedSource src = resolve_source(cfg.source);
  const AuditReport report = audit(src.order, cfg.max_m);
  if (cfg.format == "csv") {
    emit_records_csv(out, report.records);
    return;
  }
  ordered_json inputs = src.echo;
  inputs["max_m"] = std::to_string(cfg.max_m);
  ordered_json payload;
  payload["records"] = ordered_json::array();
  for (const MomentRecord& rec : report.records) {
    payload["records"].push_back(record_json(rec));
  }
  payload["first_disagreement"] =
      report.first_disagreement
          ? ordered_json(std::to_string(*report.first_disagreement))
          : ordered_json(nullptr);
  payload["agree_count"] = std::to_string(report.agree_count);
  payload["disagree_count"] = std::to_string(report.disagree_count);
  emit(out, envelope("audit", std::move(inputs), std::move(payload)));
}

struct CompareConfig {
  SourceOptions left;
  SourceOptions right;
  std::string mode = "theorem";
  unsigned max_m = 0;
  std::string format = "json";
  CLI::Option* max_m_opt = nullptr;
};

void run_compare(const CompareConfig& cfg, std::ostream& out) {
  check_generator_use(cfg.left);
  check_generator_use(cfg.right);
  const CompareMode mode =
      cfg.mode == "theorem" ? CompareMode::theorem : CompareMode::oracle;
  if (cfg.max_m_opt->count() > 0 && mode == CompareMode::theorem) {
    throw CliError(kExitUsage, "--max-m requires --mode oracle");
  }
  const ResolvedSource left = resolve_source(cfg.left);
  const ResolvedSource right = resolve_source(cfg.right);
  std::optional<unsigned> max_m;
  if (cfg.max_m_opt->count() > 0) max_m = cfg.max_m;
  const DistributionComparison cmp =
      compare_distributions(left.order, right.order, mode, max_m);

  if (cfg.format == "csv") {
    out << "left,right,mode,identical,witness\n";
    out << to_string(cmp.left) << ',' << to_string(cmp.right) << ','
        << to_string(cmp.mode) << ','
        << (cmp.identically_distributed ? "true" : "false") << ',';
    if (cmp.witness) out << *cmp.witness;
    out << '\n';
    return;
  }
  ordered_json inputs;
  inputs["left"] = left.echo;
  inputs["right"] = right.echo;
  inputs["mode"] = cfg.mode;
  if (max_m) inputs["max_m"] = std::to_string(*max_m);
  ordered_json payload;
  payload["left"] = to_string(cmp.left);
  payload["right"] = to_string(cmp.right);
  payload["mode"] = to_string(cmp.mode);
  if (cmp.max_m) payload["max_m"] = std::to_string(*cmp.max_m);
  payload["identical"] = cmp.identically_distributed;
  if (cmp.witness) payload["witness"] = std::to_string(*cmp.witness);
  emit(out, envelope("compare", std::move(inputs), std::move(payload)));
}

struct ClassifyConfig {
  unsigned m = 0;
  std::uint64_t order = 1;
  std::string format = "json";
};

void run_classify(const ClassifyConfig& cfg, std::ostream& out) {
  if (cfg.order == 0) throw CliError(kExitUsage, "--order must be >= 1");
  const SequenceClassification c =
      classify_sequences(cfg.m, static_cast<unsigned>(cfg.order));
  if (cfg.format == "csv") {
    out << "m,n,k,count_S0,count_Wj,count_Wj_prime,count_Wj_minus_prime,"
           "count_Wj_cap_S0\n";
    out << c.m << ',' << c.n << ',';
    if (c.k) out << *c.k;
    out << ',' << c.count_S0 << ',';
    if (c.count_Wj) out << *c.count_Wj;
    out << ',';
    if (c.count_Wj_prime) out << *c.count_Wj_prime;
    out << ',';
    if (c.count_Wj_minus_prime) out << *c.count_Wj_minus_prime;
    out << ',';
    if (c.count_Wj_cap_S0) out << *c.count_Wj_cap_S0;
    out << '\n';
    return;
  }
  ordered_json inputs;
  inputs["m"] = std::to_string(cfg.m);
  inputs["order"] = std::to_string(cfg.order);
  ordered_json payload;
  payload["m"] = std::to_string(c.m);
  payload["n"] = std::to_string(c.n);
  if (c.k) payload["k"] = std::to_string(*c.k);
  payload["count_S0"] = std::to_string(c.count_S0);
  if (c.count_Wj) payload["count_Wj"] = std::to_string(*c.count_Wj);
  if (c.count_Wj_prime) {
    payload["count_Wj_prime"] = std::to_string(*c.count_Wj_prime);
  }
  if (c.count_Wj_minus_prime) {
    payload["count_Wj_minus_prime"] = std::to_string(*c.count_Wj_minus_prime);
  }
  if (c.count_Wj_cap_S0) {
    payload["count_Wj_cap_S0"] = std::to_string(*c.count_Wj_cap_S0);
  }
  emit(out, envelope("classify", std::move(inputs), std::move(payload)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "moments of block operators x + x^-1 attached to group generators"};
  app.name("blockmoments");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str("json");
  };

  ParseConfig parse_cfg;
  auto* parse_cmd =
      app.add_subcommand("parse", "parse a presentation and detect orders");
  parse_cfg.file_opt = parse_cmd->add_option(
      "file", parse_cfg.file, "file with presentation text '<gens | relators>'");
  parse_cfg.text_opt = parse_cmd->add_option(
      "--presentation-text", parse_cfg.text, "presentation text inline");

  MomentConfig moment_cfg;
  auto* moment_cmd =
      app.add_subcommand("moment", "one moment of the block operator");
  add_source_options(moment_cmd, moment_cfg.source, "");
  moment_cmd->add_option("-m,--m", moment_cfg.m, "moment index m >= 0")
      ->required();
  moment_cmd->add_option("--method", moment_cfg.method, "computation method")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMethods),
                                                     std::end(kMethods))))
      ->default_str("all");
  add_format(moment_cmd, moment_cfg.format);

  SeriesConfig series_cfg;
  auto* series_cmd =
      app.add_subcommand("series", "moments for m = 0..max-m");
  add_source_options(series_cmd, series_cfg.source, "");
  series_cmd->add_option("--max-m", series_cfg.max_m, "largest moment index")
      ->required();
  series_cmd->add_option("--method", series_cfg.method, "computation method")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMethods),
                                                     std::end(kMethods))))
      ->default_str("all");
  add_format(series_cmd, series_cfg.format);

  AuditConfig audit_cfg;
  auto* audit_cmd = app.add_subcommand(
      "audit", "closed form vs exact trace for m = 0..max-m");
  add_source_options(audit_cmd, audit_cfg.source, "");
  audit_cmd->add_option("--max-m", audit_cfg.max_m, "largest moment index")
      ->required();
  add_format(audit_cmd, audit_cfg.format);

  CompareConfig compare_cfg;
  auto* compare_cmd = app.add_subcommand(
      "compare", "are two block operators identically distributed");
  add_source_options(compare_cmd, compare_cfg.left, "left-");
  add_source_options(compare_cmd, compare_cfg.right, "right-");
  compare_cmd->add_option("--mode", compare_cfg.mode, "comparison mode")
      ->check(CLI::IsMember({"theorem", "oracle"}))
      ->default_str("theorem");
  compare_cfg.max_m_opt = compare_cmd->add_option(
      "--max-m", compare_cfg.max_m, "oracle bound (default 2*max order)");
  add_format(compare_cmd, compare_cfg.format);

  ClassifyConfig classify_cfg;
  auto* classify_cmd = app.add_subcommand(
      "classify", "sign-sequence census at length m for order n");
  classify_cmd->add_option("-m,--m", classify_cfg.m, "sequence length m >= 1")
      ->required();
  classify_cmd->add_option("--order", classify_cfg.order, "finite order n >= 1")
      ->required();
  add_format(classify_cmd, classify_cfg.format);

  parse_cmd->callback([&] { run_parse(parse_cfg, out); });
  moment_cmd->callback([&] { run_moment(moment_cfg, out); });
  series_cmd->callback([&] { run_series(series_cfg, out); });
  audit_cmd->callback([&] { run_audit(audit_cfg, out); });
  compare_cmd->callback([&] { run_compare(compare_cfg, out); });
  classify_cmd->callback([&] { run_classify(classify_cfg, out); });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace blockmoments::cli
