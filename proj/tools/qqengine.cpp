#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qqengine/exact_series.hpp"
#include "qqengine/fock_operators.hpp"
#include "qqengine/instanton.hpp"
#include "qqengine/verify.hpp"
#include "qqengine/vertex_networks.hpp"

using namespace qq;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kConfig = 2, kGenericity = 3 };

struct Options {
  int r = 1;
  int capQ = 2;
  int capA = 2;
  int capB = 2;
  int capM = -1;
  std::string direction = "h";
  std::vector<std::uint64_t> seeds;
  std::string out;
  std::string format = "json";
  int genericityBound = 0;
  std::string verifyId;
};

void addShared(CLI::App* sub, Options& o) {
  sub->add_option("--r", o.r, "rank r")->check(CLI::Range(1, 4));
  sub->add_option("--cap-q", o.capQ, "Q exponent cap")->check(CLI::NonNegativeNumber);
  sub->add_option("--cap-a", o.capA, "A exponent cap")->check(CLI::NonNegativeNumber);
  sub->add_option("--cap-b", o.capB, "cap for every B_i")->check(CLI::NonNegativeNumber);
  sub->add_option("--cap-m", o.capM, "m exponent cap (defaults to --cap-a)")->check(CLI::NonNegativeNumber);
  sub->add_option("--direction", o.direction, "preferred direction")->check(CLI::IsMember({"h", "v"}));
  sub->add_option("--seeds,--seed", o.seeds, "comma-separated parameter seeds")->delimiter(',');
  sub->add_option("--out", o.out, "output file (default stdout)");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--genericity-bound", o.genericityBound, "genericity bound G")->check(CLI::PositiveNumber);
}

// Rows prefixed by the seed when several seeds share one table.
std::string csvTable(const std::vector<std::pair<std::uint64_t, MultiSeries>>& rows) {
  if (rows.size() == 1) return toCsv(rows.front().second);
  std::ostringstream os;
  bool header = true;
  for (auto& [seed, s] : rows) {
    std::istringstream is(toCsv(s));
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
      if (first) {
        first = false;
        if (header) os << "seed," << line << "\n";
        header = false;
        continue;
      }
      os << seed << "," << line << "\n";
    }
  }
  return os.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
  f << text;
}

std::string dumpJson(const ojson& j) { return j.dump(2) + "\n"; }

int resolveBound(const Options& o, int need) {
  if (o.genericityBound == 0) return need;
  if (o.genericityBound < need)
    throw GenericityError("genericity bound " + std::to_string(o.genericityBound) + " below required " +
                          std::to_string(need));
  return o.genericityBound;
}

int cmdZr(const Options& o) {
  NetworkConfig cfg{o.r, o.direction == "v" ? Direction::Vertical : Direction::Horizontal, o.capQ, o.capA,
                    std::vector<int>(o.r - 1, o.capB), ParamPoint()};
  const int G = resolveBound(o, requiredGenericity(cfg));
  ojson results = ojson::array();
  std::vector<std::pair<std::uint64_t, MultiSeries>> rows;
  for (auto seed : o.seeds) {
    cfg.params = randomParamPoint(seed, o.r, G);
    validate(cfg);
    const MultiSeries raw = zrFull(cfg);
    const MultiSeries norm = normalizeByPerturbative(raw);
    results.push_back({{"seed", seed}, {"params", toJson(cfg.params)}, {"normalized", toJson(norm)}, {"raw", toJson(raw)}});
    rows.emplace_back(seed, norm);
  }
  if (o.format == "csv") {
    emit(o, csvTable(rows));
  } else {
    ojson caps = {{"Q", o.capQ}, {"A", o.capA}};
    if (o.r > 1) caps["B"] = o.capB;
    emit(o, dumpJson({{"command", "zr"},
                      {"r", o.r},
                      {"direction", o.direction},
                      {"caps", caps},
                      {"seeds", o.seeds},
                      {"genericityBound", G},
                      {"conventions", conventionRecord()},
                      {"results", results}}));
  }
  return kOk;
}

int cmdChiY(const Options& o) {
  const int capM = o.capM < 0 ? o.capA : o.capM;
  const int G = resolveBound(o, std::max(12, 4 * (2 * o.capQ + capM)));
  ojson results = ojson::array();
  std::vector<std::pair<std::uint64_t, MultiSeries>> rows;
  for (auto seed : o.seeds) {
    const ParamPoint p = randomParamPoint(seed, o.r, G);
    const MultiSeries g = chiYGenus(o.r, o.capQ, capM, p);
    results.push_back({{"seed", seed}, {"params", toJson(p)}, {"genus", toJson(g)}});
    rows.emplace_back(seed, g);
  }
  if (o.format == "csv") {
    emit(o, csvTable(rows));
  } else {
    emit(o, dumpJson({{"command", "chiy"},
                      {"r", o.r},
                      {"caps", {{"Q", o.capQ}, {"m", capM}}},
                      {"seeds", o.seeds},
                      {"genericityBound", G},
                      {"conventions", conventionRecord()},
                      {"results", results}}));
  }
  return kOk;
}

int cmdVerify(const Options& o) {
  VerifyOptions v;
  v.r = o.r;
  v.capQ = o.capQ;
  v.capA = o.capA;
  v.capB = o.capB;
  v.capM = o.capM;
  v.seeds = o.seeds;
  v.genericityBound = o.genericityBound;
  const VerifyReport rep = runVerify(o.verifyId, v);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "id,passed,checks,genericity_bound\n"
       << rep.id << "," << (rep.passed ? "true" : "false") << "," << rep.checks << "," << rep.genericityBound << "\n";
    emit(o, os.str());
  } else {
    emit(o, dumpJson(toJson(rep)));
  }
  if (!rep.passed && rep.firstMismatch)
    std::cerr << "mismatch: " << rep.firstMismatch->context << " at " << rep.firstMismatch->exponent << ": "
              << rep.firstMismatch->lhs << " != " << rep.firstMismatch->rhs << "\n";
  return rep.passed ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact refined vertex, chi_y genus and Fock operator engine"};
  app.require_subcommand(1);
  Options o;
  auto* zr = app.add_subcommand("zr", "network partition function Z_r");
  auto* chiy = app.add_subcommand("chiy", "chi_y genus series");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  for (auto* sub : {zr, chiy, verify}) addShared(sub, o);
  verify->add_option("id", o.verifyId, "suite id")->required()->check(CLI::IsMember(verifyIds()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }
  if (o.seeds.empty()) o.seeds = {1, 2, 3};

  try {
    if (zr->parsed()) return cmdZr(o);
    if (chiy->parsed()) return cmdChiY(o);
    return cmdVerify(o);
  } catch (const GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kGenericity;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
}
