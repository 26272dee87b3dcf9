#include "llperm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "llperm/bench.hpp"
#include "llperm/generator.hpp"
#include "llperm/metrics.hpp"
#include "llperm/ranking.hpp"
#include "llperm/verify.hpp"

namespace llperm::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Elements are always 0..k-1; tokens gives their printed form.
struct Tokens {
  std::vector<std::string> names;
  bool numeric = true;

  static Tokens from(std::optional<std::size_t> length, const std::vector<std::string>& items) {
    Tokens tokens;
    if (!items.empty()) {
      tokens.names = items;
      tokens.numeric = false;
    } else {
      for (std::size_t i = 0; i < length.value_or(0); ++i) tokens.names.push_back(std::to_string(i));
    }
    return tokens;
  }
};

void check_guard(std::size_t k, bool force, const char* command) {
  if (k > kDefaultGuard && !force) {
    throw UsageError(std::string(command) + ": length " + std::to_string(k) + " exceeds " +
                     std::to_string(kDefaultGuard) + "; pass --force to enumerate anyway");
  }
}

nlohmann::json rank_json(const RankIndex& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

void write_record(std::ostream& out, const Tokens& tokens, const std::vector<std::size_t>& perm,
                  bool json, const std::optional<RankIndex>& index,
                  std::optional<std::uint64_t> distance) {
  if (json) {
    nlohmann::json record;
    auto& array = record["perm"] = nlohmann::json::array();
    for (std::size_t v : perm) {
      if (tokens.numeric) {
        array.push_back(v);
      } else {
        array.push_back(tokens.names[v]);
      }
    }
    if (index) record["index"] = rank_json(*index);
    if (distance) record["distance"] = *distance;
    out << record.dump() << '\n';
    return;
  }
  if (index) out << index->str() << ": ";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out << ' ';
    out << tokens.names[perm[i]];
  }
  if (distance) out << "  d=" << *distance;
  out << '\n';
}

RankIndex parse_index(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      })) {
    throw UsageError("index must be a non-negative decimal integer, got '" + text + "'");
  }
  return RankIndex(text);
}

std::size_t require_length(std::optional<std::size_t> length, const std::vector<std::string>& items,
                           const char* command) {
  if (length && !items.empty()) throw UsageError(std::string(command) + ": give -k or --items, not both");
  if (!length && items.empty()) throw UsageError(std::string(command) + ": -k or --items is required");
  return length ? *length : items.size();
}

struct GenOptions {
  std::optional<std::size_t> length;
  std::vector<std::string> items;
  std::string format = "text";
  std::optional<std::uint64_t> limit;
  bool with_distances = false;
  bool with_index = false;
  bool force = false;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  const std::size_t k = require_length(opt.length, opt.items, "gen");
  check_guard(k, opt.force, "gen");
  const Tokens tokens = Tokens::from(opt.length, opt.items);
  const bool json = opt.format == "json";

  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(k));
  std::vector<std::size_t> previous;
  std::uint64_t index = 0;
  for (const auto& view : permutations(seq)) {
    if (opt.limit && index >= *opt.limit) break;
    auto current = view.to_vector();
    std::optional<std::uint64_t> distance;
    if (opt.with_distances && index > 0) distance = kendall_tau(previous, current);
    write_record(out, tokens, current, json,
                 opt.with_index ? std::optional<RankIndex>(index) : std::nullopt, distance);
    previous = std::move(current);
    ++index;
  }
  return kExitOk;
}

int cmd_unrank(std::optional<std::size_t> length, const std::vector<std::string>& items,
               const std::string& index_text, const std::string& format, std::ostream& out) {
  const std::size_t k = require_length(length, items, "unrank");
  const RankIndex index = parse_index(index_text);
  if (index >= factorial(k)) {
    throw UsageError("unrank: index " + index.str() + " out of range, must be below " +
                     std::to_string(k) + "! = " + factorial(k).str());
  }
  auto seq = SinglyLinkedSeq<std::size_t>::from_elements(identity_permutation(k));
  quick_perm(seq, index);
  const bool json = format == "json";
  write_record(out, Tokens::from(length, items), seq.to_vector(), json,
               json ? std::optional<RankIndex>(index) : std::nullopt, std::nullopt);
  return kExitOk;
}

int cmd_rank(const std::vector<std::string>& tokens, const std::vector<std::string>& reference,
             std::ostream& out) {
  std::vector<std::size_t> target;
  if (!reference.empty()) {
    std::map<std::string, std::size_t> position;
    for (const auto& token : reference) {
      if (!position.emplace(token, position.size()).second) {
        throw UsageError("rank: reference token '" + token + "' is repeated");
      }
    }
    for (const auto& token : tokens) {
      auto it = position.find(token);
      if (it == position.end()) throw UsageError("rank: token '" + token + "' not in reference");
      target.push_back(it->second);
    }
    if (target.size() != reference.size()) {
      throw UsageError("rank: expected " + std::to_string(reference.size()) + " tokens");
    }
  } else {
    for (const auto& token : tokens) {
      if (token.empty() || !std::all_of(token.begin(), token.end(),
                                        [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw UsageError("rank: '" + token + "' is not a non-negative integer; use --reference");
      }
      target.push_back(static_cast<std::size_t>(std::stoull(token)));
    }
  }
  if (!is_canonical_permutation(target)) {
    throw UsageError("rank: tokens are not a permutation of 0.." + std::to_string(target.size()) + "-1");
  }
  out << quick_index(target).str() << '\n';
  return kExitOk;
}

int cmd_stats(std::size_t max_k, std::size_t enumerate_up_to, bool force, std::ostream& out) {
  if (max_k < 1) throw UsageError("stats: --max-k must be at least 1");
  const std::size_t guard = force ? kEnumerationGuard : kDefaultGuard;
  if (std::min(enumerate_up_to, max_k) > guard) {
    throw UsageError("stats: enumeration above k = " + std::to_string(guard) +
                     (force ? " is not supported" : " needs --force"));
  }
  const double limit = average_distance_limit();
  out << std::left << std::setw(4) << "k" << std::setw(22) << "D_k(recurrence)" << std::setw(22)
      << "transitions" << std::setw(16) << "average" << std::setw(14) << "|avg-limit|"
      << std::setw(16) << "D_k(measured)" << "adjacent" << '\n';
  for (std::size_t k = 1; k <= max_k; ++k) {
    const RankIndex d = recurrence_distance(k);
    const RankIndex transitions = factorial(k) - 1;
    std::ostringstream average;
    std::ostringstream gap;
    if (k >= 2) {
      const double avg = recurrence_average(k);
      average << std::fixed << std::setprecision(9) << avg;
      gap << std::scientific << std::setprecision(3) << std::abs(avg - limit);
    } else {
      average << "-";
      gap << "-";
    }
    std::string measured = "-";
    std::string adjacent = "-";
    if (k <= enumerate_up_to) {
      const auto stats = measure_traversal(k, guard);
      measured = stats.cumulative.str();
      if (stats.transitions > 0) {
        std::ostringstream frac;
        frac << std::fixed << std::setprecision(6)
             << static_cast<double>(stats.adjacent_swaps()) / stats.transitions.convert_to<double>();
        adjacent = frac.str();
      }
    }
    out << std::left << std::setw(4) << k << std::setw(22) << d.str() << std::setw(22)
        << transitions.str() << std::setw(16) << average.str() << std::setw(14) << gap.str()
        << std::setw(16) << measured << adjacent << '\n';
  }
  out << "limit 7cosh(1)-4sinh(1)-5 = " << std::fixed << std::setprecision(9) << limit << '\n';
  return kExitOk;
}

int cmd_trace(std::size_t k, bool noops, bool force, std::ostream& out) {
  check_guard(k, force, "trace");
  for (const auto& move : noops ? schedule_stream(k) : move_stream(k)) {
    out << "i=" << move.index << " side=" << to_string(move.source) << " k=" << move.sublist << '\n';
  }
  return kExitOk;
}

int cmd_verify(std::size_t max_k, std::ostream& out, std::ostream& err) {
  if (max_k > kVerifyMaxLength) {
    throw UsageError("verify: --max-k must be at most " + std::to_string(kVerifyMaxLength));
  }
  const auto report = verify_up_to(max_k);
  for (const auto& length : report.lengths) {
    out << length.summary() << '\n';
    for (const auto& failure : length.failures) err << failure << '\n';
  }
  out << (report.ok() ? "verify: all checks passed" : "verify: FAILED") << '\n';
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(std::size_t k, bool baselines, std::ostream& out) {
  if (k > kBenchMaxLength) {
    throw UsageError("bench: -k must be at most " + std::to_string(kBenchMaxLength));
  }
  out << "k=" << k << '\n';
  for (const auto& result : run_bench(k, baselines)) {
    std::ostringstream checksum;
    checksum << std::hex << std::setw(16) << std::setfill('0') << result.checksum;
    out << std::left << std::setw(26) << result.strategy << " permutations=" << result.permutations
        << " time=" << std::fixed << std::setprecision(4) << result.seconds << "s"
        << " rate=" << std::scientific << std::setprecision(3) << result.per_second() << "/s"
        << " checksum=" << checksum.str() << '\n';
    out << std::defaultfloat;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-place permutation iteration on a singly linked list", "llperm"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Stream all permutations in generation order");
  gen_cmd->add_option("-k,--length", gen.length, "Permute 0..k-1");
  gen_cmd->add_option("--items", gen.items, "Comma-separated tokens to permute")->delimiter(',');
  gen_cmd->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  gen_cmd->add_option("--limit", gen.limit, "Stop after this many permutations");
  gen_cmd->add_flag("--with-distances", gen.with_distances,
                    "Annotate each transition with its Kendall tau distance");
  gen_cmd->add_flag("--with-index", gen.with_index, "Prefix each permutation with its index");
  gen_cmd->add_flag("--force", gen.force, "Allow lengths above the enumeration guard");

  std::optional<std::size_t> unrank_length;
  std::vector<std::string> unrank_items;
  std::string unrank_index;
  std::string unrank_format = "text";
  auto* unrank_cmd = app.add_subcommand("unrank", "Permutation at a given index");
  unrank_cmd->add_option("-k,--length", unrank_length, "Permute 0..k-1");
  unrank_cmd->add_option("--items", unrank_items, "Comma-separated tokens")->delimiter(',');
  unrank_cmd->add_option("-n,--index", unrank_index, "Decimal index, any size")->required();
  unrank_cmd->add_option("--format", unrank_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rank_tokens;
  std::vector<std::string> rank_reference;
  auto* rank_cmd = app.add_subcommand("rank", "Index of a permutation in generation order");
  rank_cmd->add_option("tokens", rank_tokens, "Permutation of 0..k-1 (or of --reference)")
      ->required();
  rank_cmd->add_option("--reference", rank_reference,
                       "Comma-separated base order; tokens map to their position in it")
      ->delimiter(',');

  std::size_t stats_max_k = 12;
  std::size_t stats_enumerate = 0;
  bool stats_force = false;
  auto* stats_cmd = app.add_subcommand("stats", "Transition distance statistics");
  stats_cmd->add_option("--max-k", stats_max_k, "Largest length in the table");
  stats_cmd->add_option("--enumerate-up-to", stats_enumerate,
                        "Also measure by enumeration up to this length");
  stats_cmd->add_flag("--force", stats_force, "Allow enumeration up to k = 13");

  std::size_t trace_k = 0;
  bool trace_noops = false;
  bool trace_force = false;
  auto* trace_cmd = app.add_subcommand("trace", "Print the move schedule");
  trace_cmd->add_option("-k,--length", trace_k, "List length")->required();
  trace_cmd->add_flag("--noops", trace_noops, "Also print the no-op record of each frame");
  trace_cmd->add_flag("--force", trace_force, "Allow lengths above the enumeration guard");

  std::size_t verify_max_k = 7;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check generator, oracle and ranking");
  verify_cmd->add_option("--max-k", verify_max_k, "Largest length to check (<= 9)");

  std::size_t bench_k = 10;
  bool bench_baselines = true;
  auto* bench_cmd = app.add_subcommand("bench", "Throughput against array-based baselines");
  bench_cmd->add_option("-k,--length", bench_k, "List length (<= 13)");
  bench_cmd->add_flag("--baselines,!--no-baselines", bench_baselines,
                      "Include Heap's and lexicographic generators");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (unrank_cmd->parsed()) {
      return cmd_unrank(unrank_length, unrank_items, unrank_index, unrank_format, out);
    }
    if (rank_cmd->parsed()) return cmd_rank(rank_tokens, rank_reference, out);
    if (stats_cmd->parsed()) return cmd_stats(stats_max_k, stats_enumerate, stats_force, out);
    if (trace_cmd->parsed()) return cmd_trace(trace_k, trace_noops, trace_force, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_max_k, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench_k, bench_baselines, out);
  } catch (const UsageError& e) {
    err << "llperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "llperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "llperm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace llperm::cli
