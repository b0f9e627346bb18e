// cfded: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
// failure (golden checks, probe tolerance, or a violated internal invariant).

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cfded/cfded.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

struct Options {
  std::optional<std::string> z;
  std::optional<std::string> digits;
  std::string digit_kind = "regular";
  std::string kind = "both";
  std::optional<std::size_t> depth;
  std::string format = "text";
  unsigned precision = 5;
  std::string tolerance = "1e-6";
  std::optional<std::string> a;
  std::optional<std::string> b;
};

struct SurdDeleter {
  void operator()(cfded_surd* s) const { cfded_surd_free(s); }
};
struct DigitsDeleter {
  void operator()(cfded_digits* d) const { cfded_digits_free(d); }
};
using SurdPtr = std::unique_ptr<cfded_surd, SurdDeleter>;
using DigitsPtr = std::unique_ptr<cfded_digits, DigitsDeleter>;

struct Failure {
  cfded_status status;
  std::string message;
};

int exit_code_for(cfded_status status) {
  switch (status) {
    case CFDED_OK: return 0;
    case CFDED_ERR_VERIFICATION_FAILED:
    case CFDED_ERR_TOLERANCE_NOT_REACHED:
    case CFDED_ERR_INTERNAL: return kExitVerification;
    default: return kExitDomain;
  }
}

void check(cfded_status status) {
  if (status != CFDED_OK) throw Failure{status, cfded_last_error()};
}

cfded_format format_of(const Options& o) { return o.format == "json" ? CFDED_FORMAT_JSON : CFDED_FORMAT_TEXT; }

SurdPtr load_surd(const Options& o) {
  cfded_surd* raw = nullptr;
  check(cfded_surd_parse(o.z->c_str(), &raw));
  return SurdPtr(raw);
}

DigitsPtr load_digits(const Options& o) {
  cfded_digits* raw = nullptr;
  check(cfded_digits_parse(o.digits->c_str(), o.digit_kind == "negative" ? CFDED_NEGATIVE : CFDED_REGULAR, &raw));
  return DigitsPtr(raw);
}

// Prints the report even when the call signals a failure after writing it.
// `text` is taken by reference: it is read only after the call filled it.
void emit(cfded_status status, char*& text) {
  if (text) {
    std::fputs(text, stdout);
    std::size_t n = std::char_traits<char>::length(text);
    if (n == 0 || text[n - 1] != '\n') std::fputc('\n', stdout);
    cfded_string_free(text);
    text = nullptr;
  }
  check(status);
}

void cmd_expand(const Options& o) {
  char* out = nullptr;
  if (o.digits) {
    auto d = load_digits(o);
    emit(cfded_report_expand_digits(d.get(), format_of(o), &out), out);
    return;
  }
  const unsigned mask = o.kind == "regular" ? 1u : (o.kind == "negative" ? 2u : 3u);
  auto z = load_surd(o);
  emit(cfded_report_expand(z.get(), mask, o.depth.value_or(40), format_of(o), &out), out);
}

void cmd_convergents(const Options& o) {
  char* out = nullptr;
  if (o.digits) {
    auto d = load_digits(o);
    emit(cfded_report_convergents_digits(d.get(), o.depth.value_or(30), format_of(o), &out), out);
    return;
  }
  auto z = load_surd(o);
  emit(cfded_report_convergents(z.get(), o.depth.value_or(30), format_of(o), &out), out);
}

void cmd_dedekind(const Options& o) {
  char* out = nullptr;
  if (o.a) {
    emit(cfded_report_dedekind_pair(o.a->c_str(), o.b->c_str(), format_of(o), &out), out);
    return;
  }
  auto z = load_surd(o);
  emit(cfded_report_dedekind(z.get(), o.depth.value_or(30), format_of(o), &out), out);
}

void cmd_clusters(const Options& o) {
  char* out = nullptr;
  auto z = load_surd(o);
  emit(cfded_report_clusters(z.get(), o.precision, format_of(o), &out), out);
}

void cmd_probe(const Options& o) {
  char* out = nullptr;
  auto z = load_surd(o);
  emit(cfded_report_probe(z.get(), o.depth.value_or(6), o.tolerance.c_str(), o.precision, format_of(o), &out), out);
}

void cmd_verify(const Options& o) {
  char* out = nullptr;
  emit(cfded_report_verify(format_of(o), &out), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact continued fractions, Dedekind sums and their cluster points for quadratic irrationals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cfded_version()));

  Options o;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_z = [&](CLI::App* cmd) {
    return cmd->add_option("--z", o.z, "Quadratic irrational, e.g. \"1/sqrt(53)\"");
  };
  auto add_digits = [&](CLI::App* cmd, CLI::Option* z) {
    auto* digits = cmd->add_option("--digits", o.digits, "Finite digit list, e.g. \"2,1,2,1,1,4\" or \"3,2^7\"");
    cmd->add_option("--digit-kind", o.digit_kind, "Kind of the --digits list")
        ->check(CLI::IsMember({"regular", "negative"}));
    z->excludes(digits);
    digits->excludes(z);
    cmd->callback([&o, cmd] {
      if (!o.z && !o.digits) throw CLI::RequiredError(cmd->get_name() + ": --z or --digits");
    });
  };

  auto* expand = app.add_subcommand("expand", "Regular and negative expansions");
  {
    auto* z = add_z(expand);
    add_digits(expand, z);
    expand->add_option("--kind", o.kind, "Which expansion to show")
        ->check(CLI::IsMember({"regular", "negative", "both"}));
    expand->add_option("--depth", o.depth, "Digits to unroll (default 40)")->check(CLI::PositiveNumber);
    add_format(expand);
  }

  auto* conv = app.add_subcommand("convergents", "Convergents of both expansions and the convergent criterion");
  {
    auto* z = add_z(conv);
    add_digits(conv, z);
    conv->add_option("--depth", o.depth, "Highest convergent index (default 30)")->check(CLI::PositiveNumber);
    add_format(conv);
  }

  auto* ded = app.add_subcommand("dedekind", "Dedekind sums along convergents, or S(a, b) for one pair");
  {
    auto* z = add_z(ded);
    auto* a = ded->add_option("--a", o.a, "Numerator of a single pair");
    auto* b = ded->add_option("--b", o.b, "Denominator of a single pair");
    a->needs(b);
    b->needs(a);
    z->excludes(a);
    a->excludes(z);
    ded->add_option("--depth", o.depth, "Highest convergent index (default 30)")->check(CLI::PositiveNumber);
    add_format(ded);
    ded->callback([&o, ded] {
      if (!o.z && !o.a) throw CLI::RequiredError(ded->get_name() + ": --z or --a/--b");
    });
  }

  auto* clusters = app.add_subcommand("clusters", "Classification, cluster points and coincidences");
  {
    add_z(clusters)->required();
    clusters->add_option("--precision", o.precision, "Decimal digits in previews");
    add_format(clusters);
  }

  auto* probe = app.add_subcommand("probe", "Numerical convergence of each class to its cluster point");
  {
    add_z(probe)->required();
    probe->add_option("--depth", o.depth, "Periods per class (default 6)")->check(CLI::PositiveNumber);
    probe->add_option("--tolerance", o.tolerance, "Largest acceptable final gap");
    probe->add_option("--precision", o.precision, "Decimal digits in previews");
    add_format(probe);
  }

  auto* verify = app.add_subcommand("verify", "Run the built-in golden checks");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (expand->parsed()) cmd_expand(o);
    else if (conv->parsed()) cmd_convergents(o);
    else if (ded->parsed()) cmd_dedekind(o);
    else if (clusters->parsed()) cmd_clusters(o);
    else if (probe->parsed()) cmd_probe(o);
    else if (verify->parsed()) cmd_verify(o);
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "cfded: " << cfded_status_name(f.status) << ": " << f.message << '\n';
    return exit_code_for(f.status);
  }
  return 0;
}
