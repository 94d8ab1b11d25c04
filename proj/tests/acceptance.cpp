// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "support.hpp"

#include "cli.hpp"
#include "frobnorm/closure.hpp"
#include "frobnorm/error.hpp"
#include "frobnorm/groebner.hpp"

using namespace frobnorm;
using testing::ideal;
using testing::poly;
using testing::polys;
using testing::same_fraction_module;
namespace sg = testing::segre;
namespace fs = std::filesystem;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitSegreP2 = 5;
constexpr double kLimitSegrePerPrime = 30;
constexpr double kLimitSmooth = 1;
constexpr double kLimitQuarticP2 = 120;
constexpr double kLimitQuarticP3 = 300;
constexpr double kLimitQuadraticP3 = 300;
// Monomials up to this degree are compared against the semigroup oracle.
constexpr int kOracleDegree = 8;

using Clock = std::chrono::steady_clock;

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

template <class F>
auto timed(double limit, const std::string& what, F&& f) {
  auto start = Clock::now();
  auto out = f();
  double s = seconds_since(start);
  expect(s < limit, what + " took " + std::to_string(s) + " s");
  return out;
}

Presentation presentation(std::uint32_t p, std::vector<std::string> vars, const char* rel) {
  auto R = PolyRing::make(p, std::move(vars));
  return Presentation(R, {poly(R, rel)});
}

Presentation segre(std::uint32_t p) { return presentation(p, {"x", "y", "u", "v"}, "x^2*v - y^2*u"); }

Presentation quartic(std::uint32_t p) {
  return presentation(p, {"u", "v", "x", "y", "z"}, "u^2*x^4 + u*v*y^4 + v^2*z^4");
}

Presentation quadratic(std::uint32_t p) {
  auto R = PolyRing::make(p, {"u", "v", "x", "y", "z"});
  const std::string e = std::to_string(p);
  return Presentation(R, {poly(R, "u^2*x^" + e + " + 2*u*v*y^" + e + " + v^2*z^" + e)});
}

Ideal with_p(const Presentation& pres, std::vector<Polynomial> gens) {
  return Ideal(pres.ring(), std::move(gens)) + pres.ideal();
}

void criterion1() {
  auto pres = segre(2);
  auto S = pres.ring();
  auto d = poly(S, "x^2");
  ClosureOptions opts;
  opts.conductor = d;
  auto res = timed(kLimitSegreP2, "closure", [&] { return integral_closure(pres, opts); });
  expect(ideal_equals(res.closure_ideal, ideal(S, {"x^2", "x*u*y"}) + pres.ideal()),
         "final module is not (x^2, xuy) + P");
  expect(res.iterations == 2 && res.chain.size() == 3, "expected U_0 > U_1 > U_2 = U_3");
  std::vector<Ideal> chain;
  for (const auto& basis : res.chain) chain.push_back(with_p(pres, basis));
  expect(!ideal_equals(chain[0], chain[1]), "U_0 = U_1");
  expect(!ideal_equals(chain[1], chain[2]), "U_1 = U_2");
  expect(chain[0].contains(chain[1]) && chain[1].contains(chain[2]), "chain not descending");
  ClosureState last{2, chain[2], pow(d, 1) * chain[2] + pres.ideal()};
  expect(ideal_equals(closure_step(pres, d, last).U, chain[2]), "U_3 differs from U_2");
  expect(ideal_equals(chain[1], ideal(S, {"x", "u*y"}) + pres.ideal()), "U_1 is not (x, uy) + P");
  const sg::Point dimg{2, 0, 0};
  for (std::size_t e = 0; e < chain.size(); ++e)
    expect(sg::agrees_on_monomials(S, chain[e], kOracleDegree,
                                   [&](const sg::Point& m) { return sg::in_chain(2, dimg, e, m); }),
           "U_" + std::to_string(e) + " disagrees with the semigroup oracle");
  expect(res.numerators.size() == 2, "expected two generators");
}

void criterion2() {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const std::string tag = "p=" + std::to_string(p) + ": ";
    auto pres = segre(p);
    auto res = timed(kLimitSegrePerPrime, tag + "closure", [&] { return integral_closure(pres); });
    expect(verify_result(res).passed(), tag + "verification failed");
    expect(res.denominator.size() == 1, tag + "conductor is not a monomial");
    const sg::Point dimg = sg::image(res.denominator.exponents(0));
    expect(sg::agrees_on_monomials(pres.ring(), res.closure_ideal, kOracleDegree,
                                   [&](const sg::Point& m) { return sg::in_closure(dimg, m); }),
           tag + "module differs from the saturation");
    expect(res.numerators.size() == 2, tag + "expected two generators");
  }
}

void criterion3() {
  auto R = PolyRing::make(3, {"x", "y"});
  Presentation pres(R, {poly(R, "x")});
  auto res = timed(kLimitSmooth, "closure", [&] { return integral_closure(pres); });
  expect(res.numerators == std::vector<Polynomial>{R->one()}, "numerators are not {1}");
  expect(res.denominator == R->one(), "denominator is not 1");
  expect(res.iterations == 0 && res.chain.size() == 1, "iterated beyond U_0");
}

void criterion4() {
  auto pres = quartic(2);
  auto S = pres.ring();
  auto res = timed(kLimitQuarticP2, "closure", [&] { return integral_closure(pres); });
  // sqrt(uv) = (u x^2 + v z^2) / y^2 in characteristic 2
  auto root = poly(S, "u*x^2 + v*z^2");
  expect(pres.is_zero(root * root - poly(S, "u*v*y^4")), "sqrt(uv) identity");
  // the five generators over the common denominator u y^3
  auto common = poly(S, "u*y^3");
  std::vector<Polynomial> cleared{
      poly(S, "u*y^3"),
      poly(S, "u*y") * root,
      poly(S, "u") * (poly(S, "u*x*y^2") + poly(S, "z") * root),
      poly(S, "u") * (poly(S, "v*z*y^2") + poly(S, "x") * root),
      poly(S, "u*x*z*y^2") + poly(S, "z^2") * root,
  };
  expect(same_fraction_module(pres.ideal(), res.denominator, res.closure_ideal, common,
                              Ideal(S, cleared)),
         "module differs from the five listed generators");
  for (std::size_t drop = 1; drop < cleared.size(); ++drop) {
    auto fewer = cleared;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    expect(!same_fraction_module(pres.ideal(), res.denominator, res.closure_ideal, common,
                                 Ideal(S, fewer)),
           "negative control: generator " + std::to_string(drop) + " is redundant");
  }
  expect(res.numerators.size() == 5, "expected five generators");
}

void criterion5() {
  auto pres = quartic(3);
  auto S = pres.ring();
  auto res = timed(kLimitQuarticP3, "closure", [&] { return integral_closure(pres); });
  // R + tR with t = u x^4 / v
  expect(same_fraction_module(pres.ideal(), res.denominator, res.closure_ideal, poly(S, "v"),
                              ideal(S, {"v", "u*x^4"})),
         "module differs from R + tR");
  expect(!same_fraction_module(pres.ideal(), res.denominator, res.closure_ideal, poly(S, "v"),
                               ideal(S, {"v"})),
         "negative control: R alone matches");
}

void criterion6() {
  auto pres = quadratic(3);
  auto S = pres.ring();
  auto res = timed(kLimitQuadraticP3, "closure", [&] { return integral_closure(pres); });
  expect(trim_generators(pres, res.closure_ideal).size() == 4, "expected p + 1 = 4 generators");

  // w = sqrt(y^2 - xz) = A / B, T = (u/v)^(1/3) = (-y + eps w) / x
  auto A = poly(S, "u*y^3 + v*z^3");
  auto B = poly(S, "u*y^2 - u*x*z");
  expect(pres.is_zero(A * A - poly(S, "y^2 - x*z") * B * B), "square root identity");
  auto x = poly(S, "x"), y = poly(S, "y"), v = poly(S, "v"), u = poly(S, "u");
  std::optional<Polynomial> top;  // x B T
  for (std::int64_t eps : {1, -1}) {
    auto cand = A * eps - y * B;
    if (pres.is_zero(v * pow(cand, 3) - u * pow(x * B, 3))) top = cand;
  }
  expect(top.has_value(), "no sign makes T^3 = u/v");
  // 1, w, v T, v T^2 over x^2 B^2
  auto common = x * x * B * B;
  std::vector<Polynomial> cleared{common, x * x * B * A, x * B * v * *top, v * *top * *top};
  expect(same_fraction_module(pres.ideal(), res.denominator, res.closure_ideal, common,
                              Ideal(S, cleared)),
         "module differs from the listed generators");
  for (std::size_t drop = 1; drop < cleared.size(); ++drop) {
    auto fewer = cleared;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    expect(!same_fraction_module(pres.ideal(), res.denominator, res.closure_ideal, common,
                                 Ideal(S, fewer)),
           "negative control: generator " + std::to_string(drop) + " is redundant");
  }

  // p = 5 is cheap enough here
  auto res5 = integral_closure(quadratic(5));
  expect(res5.numerators.size() == 6, "p=5: expected 6 generators");
}

void criterion7() {
  std::mt19937 rng(7);
  auto R = PolyRing::make(3, {"x", "y", "z"});
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gi, gj;
    for (int k = 0; k < 3; ++k) {
      gi.push_back(testing::random_monomial(R, rng, 3));
      gj.push_back(testing::random_monomial(R, rng, 3));
    }
    std::vector<Polynomial> mixed{testing::random_poly(R, rng, 3, 2),
                                  testing::random_poly(R, rng, 3, 2), gi[0]};
    for (const auto& gens : {gi, mixed}) {
      auto gb = groebner_basis(gens, MonomialOrder::grevlex());
      expect(is_groebner_basis(gb, MonomialOrder::grevlex()), "S-polynomial did not reduce to 0");
      for (const auto& g : gens)
        expect(normal_form(g, gb, MonomialOrder::grevlex()).is_zero(), "generator not reduced to 0");
      expect(groebner_basis(gens, MonomialOrder::grevlex()) == gb, "basis not deterministic");
      auto f = testing::random_poly(R, rng, 4, 3);
      auto nf = normal_form(f, gb, MonomialOrder::grevlex());
      expect(normal_form(nf, gb, MonomialOrder::grevlex()) == nf, "normal form not idempotent");
    }
    Ideal I(R, gi), J(R, gj);
    auto K = intersect(I, J);
    expect(I.contains(K) && J.contains(K) && K.contains(I * J), "intersection laws");
    expect(I.contains(quotient(I, J) * J), "quotient law");
  }

  std::vector<Presentation> fixtures{segre(2), segre(3), quartic(2), quartic(3), quadratic(3)};
  for (const auto& pres : fixtures) {
    auto res = integral_closure(pres);
    const auto& d = res.denominator;
    const std::uint32_t p = pres.characteristic();
    for (std::size_t e = 0; e < res.chain.size(); ++e) {
      auto U = with_p(pres, res.chain[e]);
      expect(U.contains(d), "D not in U_e");
      if (e > 0) {
        auto prev = with_p(pres, res.chain[e - 1]);
        expect(prev.contains(U), "chain not descending");
        auto modulus = pow(d, p - 1) * prev + pres.ideal();
        for (const auto& g : res.chain[e])
          expect(modulus.contains(frobenius_power(g)), "r^p not in D^(p-1) U_e");
      }
    }
    ClosureState last{res.iterations, res.closure_ideal,
                      pow(d, p - 1) * res.closure_ideal + pres.ideal()};
    expect(ideal_equals(closure_step(pres, d, last).U, res.closure_ideal), "not a fixed point");
    auto scaled = d * res.closure_ideal + pres.ideal();
    for (const auto& n : res.numerators)
      for (const auto& m : res.numerators) expect(scaled.contains(n * m), "not closed under products");
    std::uint64_t q = 1;
    for (std::size_t i = 0; i <= res.iterations; ++i, q *= p) {
      Ideal witness = Ideal(pres.ring(), {pow(d, q - 1)}) + pres.ideal();
      for (const auto& n : res.numerators)
        expect(witness.contains(pow(n, q)), "integrality witness fails");
    }
  }
}

void criterion8() {
  auto R = PolyRing::make(2, {"x", "y"});
  Presentation plane(R, {});
  expect(!principal_closure_member(plane, R->one(), 0, poly(R, "x^2"), poly(R, "x*y")),
         "xy in closure of (x^2)");
  expect(principal_closure_member(plane, R->one(), 0, poly(R, "x"), poly(R, "x^2")),
         "x^2 not in closure of (x)");
  auto seg2 = segre(2);
  auto S = seg2.ring();
  expect(principal_closure_member(seg2, poly(S, "x^2"), 2, poly(S, "x"), poly(S, "u*y")),
         "uy not in closure of (x)");
  expect(!principal_closure_member(seg2, poly(S, "x^2"), 2, poly(S, "x^2"), poly(S, "u*y")),
         "uy in closure of (x^2)");

  std::mt19937 rng(8);
  int rejected = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto T = PolyRing::make(p, {"x", "y", "z"});
    Presentation flat(T, {});
    for (int trial = 0; trial < 40; ++trial) {
      auto a = testing::random_poly(T, rng, 2, 2);
      auto r = testing::random_poly(T, rng, 3, 2);
      if (a.is_zero() || Ideal(T, {a}).contains(r)) continue;
      expect(!principal_closure_member(flat, T->one(), 0, a, r), "fuzz: non-member accepted");
      ++rejected;
    }
  }
  expect(rejected >= 30, "fuzz set too small");
}

void criterion9() {
  auto pres = segre(2);
  auto S = pres.ring();
  auto run = [&](const char* d) {
    ClosureOptions opts;
    opts.conductor = poly(S, d);
    return integral_closure(pres, opts);
  };
  auto a = run("x^2"), b = run("y^2");
  expect(same_fraction_module(pres.ideal(), a.denominator, a.closure_ideal, b.denominator,
                              b.closure_ideal),
         "D = x^2 and D = y^2 disagree");
}

void criterion10() {
  const fs::path fixtures = FROBNORM_FIXTURE_DIR, golden = FROBNORM_GOLDEN_DIR;
  auto call = [](std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    int code = cli::run(args, o, e);
    if (out) *out = o.str();
    return code;
  };
  auto slurp = [](const fs::path& path) {
    std::ifstream in(path);
    expect(bool(in), "missing " + path.string());
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  for (const char* name : {"segre_p2", "segre_p3", "smooth", "quartic_p2", "quartic_p3",
                           "quadratic_p3"}) {
    const std::string file = (fixtures / (std::string(name) + ".txt")).string();
    const fs::path stem = golden / name;
    std::string out;
    expect(call({"normalize", file}, &out) == 0 && out == slurp(stem.string() + ".out"),
           std::string(name) + ": text golden");
    expect(call({"normalize", file, "--trace"}, &out) == 0 &&
               out == slurp(stem.string() + ".trace.out"),
           std::string(name) + ": trace golden");
    expect(call({"normalize", file, "--json"}, &out) == 0, std::string(name) + ": json run");
    auto doc = nlohmann::json::parse(out);
    expect(doc["stats"].contains("wall_seconds") && doc["stats"].contains("gb_calls"),
           std::string(name) + ": json stats");
    doc.erase("stats");
    expect(doc == nlohmann::json::parse(slurp(stem.string() + ".json")),
           std::string(name) + ": json golden");
    expect(call({"normalize", file, "--verify"}) == 0, std::string(name) + ": verify");
    auto pf = parse_input(slurp(file));
    expect(parse_input(format_problem(pf)) == pf, std::string(name) + ": round trip");
  }

  const std::string seg2 = (fixtures / "segre_p2.txt").string();
  expect(call({}) == cli::kUsage, "usage exit code");
  expect(call({"normalize", "/nonexistent"}) == cli::kIo, "io exit code");
  expect(call({"normalize", seg2, "--max-iter", "1"}) ==
             static_cast<int>(ErrorCode::IterationLimitExceeded),
         "iteration limit exit code");
  expect(call({"normalize", seg2, "--conductor", "x^2*v + y^2*u"}) ==
             static_cast<int>(ErrorCode::ZeroConductor),
         "zero conductor exit code");

  std::string csv;
  expect(call({"bench", "--family", "segre", "--primes", "2,3,5,7"}, &csv) == 0, "bench run");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  expect(line == "family,p,iterations,generator_count,wall_seconds,status", "bench header");
  std::vector<double> times;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    expect(cells.size() == 6 && cells[0] == "segre" && cells[5] == "ok", "bench row: " + line);
    expect(cells[3] == "2", "bench generator count: " + line);
    times.push_back(std::stod(cells[4]));
  }
  expect(times.size() == 4, "bench row count");
  for (std::size_t i = 1; i < times.size(); ++i)
    expect(times[i] >= times[i - 1], "bench times not monotone in p: " + csv);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"segre cone p=2: chain and module", criterion1},
      {"segre family p=3,5,7 against saturation", criterion2},
      {"smooth input", criterion3},
      {"quartic p=2: five generators", criterion4},
      {"quartic p=3: R + tR", criterion5},
      {"quadratic p=3: p+1 generators", criterion6},
      {"property suites", criterion7},
      {"principal ideal closure", criterion8},
      {"conductor choice invariance", criterion9},
      {"cli goldens, exit codes, bench", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    std::string status = "PASS", why;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      status = "FAIL";
      why = f.why;
    } catch (const std::exception& e) {
      status = "FAIL";
      why = std::string("exception: ") + e.what();
    }
    failed += status == "FAIL";
    std::cout << status << "  C" << i + 1 << "  " << criteria[i].first << "  (" << std::fixed
              << std::setprecision(2) << seconds_since(start) << " s)";
    if (!why.empty()) std::cout << "  " << why;
    std::cout << std::endl;
  }
  std::cout << (failed ? "FAILED " : "all passed ") << criteria.size() - failed << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
