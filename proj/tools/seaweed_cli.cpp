// Command-line front end. Links only the C API of libseaweed.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical disagreement between
// independent computations (a bug signal, never a usage problem).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "seaweed.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

std::vector<int32_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<int32_t> out;
  std::string item;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty())
      throw CLI::ValidationError(std::string(what) + ": '" + item + "' is not an integer");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int report_failure(sw_status status) {
  std::fprintf(stderr, "error: %s: %s\n", sw_status_name(status), sw_last_error());
  return status == SW_ERROR_DISAGREEMENT ? kExitDisagreement : kExitUsage;
}

void print_and_free(char* text) {
  std::fputs(text, stdout);
  sw_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seaweed: index and coadjoint structure of seaweed subalgebras"};
  app.require_subcommand(1);
  app.fallthrough();

  sw_oracle_options opts;
  sw_oracle_options_init(&opts);
  std::string format = "text";

  app.add_option("--seed", opts.seed, "oracle seed (env SEAWEED_SEED overrides)");
  app.add_option("--trials", opts.trials, "oracle trials")->check(CLI::PositiveNumber);
  app.add_option("--coeff-bound", opts.coeff_bound, "oracle coefficient bound")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format: text|json")->check(CLI::IsMember({"text", "json"}));

  // index
  auto* index = app.add_subcommand("index", "index of a seaweed subalgebra");
  int gl_n = 0;
  std::string a_text, b_text, type_text, marked_text, lower_levi_text, method = "both";
  int rank = 0;
  index->add_option("--gl", gl_n, "degree n for a gl_n seaweed s(a|b)");
  index->add_option("--a", a_text, "composition a, e.g. 2,1,1");
  index->add_option("--b", b_text, "composition b");
  index->add_option("--type", type_text, "series A|B|C|D|E|F|G for a standard seaweed");
  index->add_option("--rank", rank, "rank of the simple algebra");
  index->add_option("--marked", marked_text, "marked simple roots of the upper parabolic (1-based)");
  index->add_option("--lower-levi", lower_levi_text, "Levi simple roots of the lower parabolic (default: all)");
  index->add_option("--method", method, "inductive|oracle|both")
      ->check(CLI::IsMember({"inductive", "oracle", "both"}));

  // cascade
  auto* cascade = app.add_subcommand("cascade", "Kostant cascade, Borel index, alpha expansion");
  std::string c_type;
  int c_rank = 0;
  bool c_dot = false;
  cascade->add_option("--type", c_type, "series A|B|C|D|E|F|G")->required();
  cascade->add_option("--rank", c_rank, "rank")->required();
  cascade->add_flag("--dot", c_dot, "emit the Hasse diagram as DOT");

  // counterexample
  auto* cx = app.add_subcommand("counterexample", "verify the no-generic-stabiliser minimal parabolic");
  std::string x_type;
  int x_rank = 0, x_samples = 0;
  cx->add_option("--type", x_type, "series B|D|E|F|G (theta must be fundamental)")->required();
  cx->add_option("--rank", x_rank, "rank")->required();
  cx->add_option("--samples", x_samples, "number of a-values to sample (default 8)");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "all composition pairs of gl_n: inductive vs oracle");
  int e_n = 0;
  bool e_entries = false;
  en->add_option("--gl", e_n, "degree n (1..8)")->required();
  en->add_flag("--entries", e_entries, "list every pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return kExitOk;
    }
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  }

  if (const char* env_seed = std::getenv("SEAWEED_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env_seed, &end, 10);
    if (end && *end == '\0') opts.seed = v;
  }

  try {
    if (index->parsed()) {
      const bool has_gl = gl_n > 0 || !a_text.empty() || !b_text.empty();
      const bool has_type = !type_text.empty();
      if (has_gl == has_type) {
        std::fprintf(stderr, "usage error: pass either --gl with --a/--b, or --type with --rank/--marked\n");
        return kExitUsage;
      }
      char* text = nullptr;
      int32_t agree = 1;
      sw_status st;
      if (has_gl) {
        if (a_text.empty() || b_text.empty()) {
          std::fprintf(stderr, "usage error: --gl needs both --a and --b\n");
          return kExitUsage;
        }
        const auto a = parse_int_list(a_text, "--a");
        const auto b = parse_int_list(b_text, "--b");
        if (gl_n > 0) {
          int32_t suma = 0, sumb = 0;
          for (int32_t v : a) suma += v;
          for (int32_t v : b) sumb += v;
          if (suma != gl_n || sumb != gl_n) {
            std::fprintf(stderr, "usage error: compositions must sum to %d (got %d and %d)\n", gl_n,
                         suma, sumb);
            return kExitUsage;
          }
        }
        st = sw_index_report_gl(a.data(), static_cast<int32_t>(a.size()), b.data(),
                                static_cast<int32_t>(b.size()), method.c_str(), &opts, format.c_str(),
                                &text, &agree);
      } else {
        std::vector<int32_t> marked, lower;
        if (!marked_text.empty()) marked = parse_int_list(marked_text, "--marked");
        if (!lower_levi_text.empty()) lower = parse_int_list(lower_levi_text, "--lower-levi");
        st = sw_index_report_standard(type_text[0], rank, marked.data(),
                                      static_cast<int32_t>(marked.size()),
                                      lower_levi_text.empty() ? nullptr : lower.data(),
                                      lower_levi_text.empty() ? -1 : static_cast<int32_t>(lower.size()),
                                      method.c_str(), &opts, format.c_str(), &text, &agree);
      }
      if (st != SW_OK && st != SW_ERROR_DISAGREEMENT) return report_failure(st);
      print_and_free(text);
      return agree ? kExitOk : kExitDisagreement;
    }

    if (cascade->parsed()) {
      char* text = nullptr;
      const sw_status st =
          sw_cascade_report(c_type[0], c_rank, c_dot ? "dot" : format.c_str(), &text);
      if (st != SW_OK) return report_failure(st);
      print_and_free(text);
      return kExitOk;
    }

    if (cx->parsed()) {
      char* text = nullptr;
      int32_t confirmed = 0;
      const sw_status st = sw_counterexample_report(x_type[0], x_rank, x_samples, &opts,
                                                    format.c_str(), &text, &confirmed);
      if (st != SW_OK && st != SW_ERROR_DISAGREEMENT) return report_failure(st);
      print_and_free(text);
      return confirmed ? kExitOk : kExitDisagreement;
    }

    if (en->parsed()) {
      char* text = nullptr;
      int32_t disagreements = 0;
      const sw_status st = sw_enumerate_gl(e_n, &opts, format.c_str(), e_entries ? 1 : 0, &text,
                                           &disagreements);
      if (st != SW_OK && st != SW_ERROR_DISAGREEMENT) return report_failure(st);
      print_and_free(text);
      return st == SW_OK ? kExitOk : kExitDisagreement;
    }
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
