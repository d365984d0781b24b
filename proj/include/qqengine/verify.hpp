#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qqengine/exact_series.hpp"

namespace qq {

struct VerifyOptions {
  int r = 1;
  int capQ = 2;
  int capA = 2;
  int capB = 2;
  int capM = -1;  // negative: follow capA
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int genericityBound = 0;  // 0: use the suite requirement
};

struct Mismatch {
  std::string context;
  std::string exponent;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string id;
  bool passed = true;
  long checks = 0;
  int genericityBound = 0;
  std::vector<std::uint64_t> seeds;
  nlohmann::ordered_json window = nlohmann::ordered_json::object();
  std::optional<Mismatch> firstMismatch;
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();

  // Coefficient-wise comparison over the union of supports.
  bool compare(const MultiSeries& lhs, const MultiSeries& rhs, const std::string& context);
  bool compare(const Rational& lhs, const Rational& rhs, const std::string& context);
  void fail(const std::string& context, const std::string& exponent, const std::string& lhs, const std::string& rhs);
};

const std::vector<std::string>& verifyIds();
// Smallest bound the suite accepts for these options.
int requiredBound(const std::string& id, const VerifyOptions& opt);
// Throws std::invalid_argument for bad options, GenericityError when the bound is too small.
VerifyReport runVerify(const std::string& id, const VerifyOptions& opt);

nlohmann::ordered_json conventionRecord();
nlohmann::ordered_json toJson(const VerifyReport& rep);


}  // namespace qq
