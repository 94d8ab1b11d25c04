#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobnorm/closure.hpp"
#include "frobnorm/error.hpp"
#include "frobnorm/families.hpp"
#include "frobnorm/problem.hpp"

namespace frobnorm::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct NormalizeArgs {
  std::string file;
  std::string conductor;
  bool json = false;
  bool trace = false;
  bool verify = false;
  std::size_t max_iter = 64;
};

struct BenchArgs {
  std::string family;
  std::string primes;
  std::string csv;
  double min_seconds = 0.2;
};

std::string grouped(const Polynomial& f) {
  return f.size() > 1 ? "(" + to_string(f) + ")" : to_string(f);
}

std::string fraction_text(const ClosureResult& leaf, const Polynomial& n) {
  if (leaf.presentation.reduce(n - leaf.denominator).is_zero()) return "1";
  return grouped(n) + " / " + grouped(leaf.denominator);
}

std::vector<std::string> basis_strings(const std::vector<Polynomial>& basis) {
  std::vector<std::string> out;
  for (const auto& g : basis) out.push_back(to_string(g));
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

int normalize(const NormalizeArgs& args, std::ostream& out, std::ostream& err) {
  std::ifstream in(args.file);
  if (!in) {
    err << "error: cannot read '" << args.file << "'\n";
    return kIo;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  ProblemFile problem = parse_input(buffer.str());

  ClosureOptions options;
  options.max_iterations = args.max_iter;
  options.conductor = problem.conductor;
  if (!args.conductor.empty())
    options.conductor = parse_polynomial(problem.ring, args.conductor);

  const auto calls_before = groebner_calls();
  const auto start = Clock::now();
  ClosureResult result = integral_closure(problem.presentation(), options);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const auto calls = groebner_calls() - calls_before;

  std::optional<VerificationReport> report;
  if (args.verify) report = verify_result(result);

  const auto leaves = result.leaves();
  if (args.json) {
    json doc;
    doc["components"] = json::array();
    for (const ClosureResult* leaf : leaves) {
      json c;
      c["denominator"] = to_string(leaf->denominator);
      c["numerators"] = basis_strings(leaf->numerators);
      json fractions = json::array();
      for (const auto& n : leaf->numerators) fractions.push_back(fraction_text(*leaf, n));
      c["fractions"] = fractions;
      c["iterations"] = leaf->iterations;
      c["is_normal"] = leaf->is_normal();
      if (leaves.size() > 1) c["relations"] = basis_strings(leaf->presentation.relations());
      if (args.trace) {
        json chain = json::array();
        for (const auto& basis : leaf->chain) chain.push_back(basis_strings(basis));
        c["trace"] = chain;
      }
      doc["components"].push_back(c);
    }
    doc["stats"] = {{"wall_seconds", seconds}, {"gb_calls", calls}};
    if (report) {
      json checks = json::array();
      for (const auto& ch : report->checks)
        checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
      doc["verify"] = {{"passed", report->passed()}, {"checks", checks}};
    }
    out << doc.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      const ClosureResult& leaf = *leaves[k];
      if (leaves.size() > 1) {
        out << "component " << k + 1 << " of " << leaves.size() << ": "
            << join(basis_strings(leaf.presentation.relations()), ", ") << '\n';
      }
      out << "denominator: " << to_string(leaf.denominator) << '\n';
      out << "iterations: " << leaf.iterations << '\n';
      if (args.trace)
        for (std::size_t e = 0; e < leaf.chain.size(); ++e)
          out << "U_" << e << ": (" << join(basis_strings(leaf.chain[e]), ", ") << ")\n";
      for (const auto& n : leaf.numerators) out << fraction_text(leaf, n) << '\n';
    }
    if (report)
      for (const auto& ch : report->checks)
        out << "verify " << ch.name << ": " << (ch.passed ? "ok" : "FAILED (" + ch.detail + ")")
            << '\n';
  }
  if (report && !report->passed()) {
    err << "error: verification failed\n";
    return kVerifyFailed;
  }
  return kOk;
}

std::vector<std::uint32_t> parse_primes(const std::string& list) {
  std::vector<std::uint32_t> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad prime '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty prime list");
  return out;
}

void bench_row(Family family, std::uint32_t p, double min_seconds, std::ostream& csv) {
  std::size_t iterations = 0, generators = 0;
  double per_run = 0;
  std::string status = "ok";
  try {
    Presentation pres = family_presentation(family, p);
    std::size_t runs = 0;
    double total = 0;
    do {
      const auto start = Clock::now();
      ClosureResult res = integral_closure(pres);
      total += std::chrono::duration<double>(Clock::now() - start).count();
      ++runs;
      iterations = generators = 0;
      for (const ClosureResult* leaf : res.leaves()) {
        iterations = std::max(iterations, leaf->iterations);
        generators += leaf->numerators.size();
      }
    } while (total < min_seconds);
    per_run = total / static_cast<double>(runs);
  } catch (const std::exception& e) {
    status = std::string("error: ") + e.what();
    for (char& c : status)
      if (c == ',' || c == '\n') c = ';';
  }
  std::ostringstream secs;
  secs << std::setprecision(6) << per_run;
  csv << family_name(family) << ',' << p << ',' << iterations << ',' << generators << ','
      << secs.str() << ',' << status << '\n';
}

int bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  Family family = parse_family(args.family);
  auto primes = parse_primes(args.primes);
  std::ofstream file;
  if (!args.csv.empty()) {
    file.open(args.csv, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << args.csv << "'\n";
      return kIo;
    }
  }
  std::ostream& csv = args.csv.empty() ? out : file;
  csv << "family,p,iterations,generator_count,wall_seconds,status\n";
  for (auto p : primes) {
    bench_row(family, p, args.min_seconds, csv);
    csv.flush();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral closure of affine rings over F_p by Frobenius preimages"};
  app.require_subcommand(1);

  NormalizeArgs norm;
  auto* normalize_cmd = app.add_subcommand("normalize", "Compute the integral closure of a ring");
  normalize_cmd->add_option("file", norm.file, "Problem file (p/vars/rels/conductor)")->required();
  normalize_cmd->add_option("--conductor", norm.conductor,
                            "Conductor element D; trusted, checked only for being a "
                            "nonzerodivisor");
  normalize_cmd->add_flag("--json", norm.json, "Emit JSON");
  normalize_cmd->add_flag("--trace", norm.trace, "Include the reduced basis of every U_e");
  normalize_cmd->add_flag("--verify", norm.verify, "Run the verification checks");
  normalize_cmd->add_option("--max-iter", norm.max_iter, "Iteration cap")
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time a built-in family over several primes");
  bench_cmd->add_option("--family", bench_args.family, "segre, quartic or quadratic-p")
      ->required();
  bench_cmd->add_option("--primes", bench_args.primes, "Comma-separated primes")->required();
  bench_cmd->add_option("--csv", bench_args.csv, "Write the table here instead of stdout");
  bench_cmd->add_option("--min-seconds", bench_args.min_seconds,
                        "Repeat each run until this much time has accumulated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*normalize_cmd) return normalize(norm, out, err);
    return bench(bench_args, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace frobnorm::cli
