#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "netfunc/combinatorial.hpp"
#include "netfunc/experiments.hpp"
#include "netfunc/graph.hpp"
#include "netfunc/metric.hpp"
#include "netfunc/numeric.hpp"
#include "netfunc/topology.hpp"

namespace netfunc {

/// One entry of a report: a value of some exactness kind, or the reason
/// there is none.
struct FunctionalValue {
  enum class Status { Ok, Skipped, Undefined };
  enum class Kind { Rational, Real, Integer, BigInteger, IntegerVector };

  Status status = Status::Ok;
  Kind kind = Kind::Real;
  Rational rational;
  double real = 0.0;
  std::int64_t integer = 0;
  BigInt big;
  std::vector<std::uint64_t> integers;
  std::string reason;
  double millis = 0.0;
  /// Extra structured payload (e.g. the arboricity forest witness).
  nlohmann::json witness;

  static FunctionalValue of(const Rational& r);
  static FunctionalValue of(double r);
  static FunctionalValue of_integer(std::int64_t i);
  static FunctionalValue of(const BigInt& b);
  static FunctionalValue of(std::vector<std::uint64_t> v);
  static FunctionalValue skipped(std::string reason);
  static FunctionalValue undefined(std::string reason);
};

struct FunctionalReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t components = 0;
  std::vector<std::pair<std::string, FunctionalValue>> functionals;
  std::optional<LocalProfile> profile;

  const FunctionalValue* find(const std::string& name) const;
};

struct AnalyzeOptions {
  ExactCaps caps;
  /// Rethrow cap/budget errors instead of reporting them as skipped.
  bool strict = false;
  bool include_profile = false;
};

/// Every functional name analyze() understands, in report order.
const std::vector<std::string>& known_functionals();

/// Expands "all" and validates names; throws Error(UnknownFunctional).
std::vector<std::string> resolve_functionals(const std::vector<std::string>& names);

FunctionalReport analyze(const Graph& g, const std::vector<std::string>& functionals,
                         const AnalyzeOptions& options = {});

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json to_json(const FunctionalValue& v);
nlohmann::json to_json(const FunctionalReport& report);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const std::vector<BoundCheck>& checks);
nlohmann::json to_json(const ExtremalSearch& search);

/// functional,status,kind,value,reason
std::string to_csv(const FunctionalReport& report);

}  // namespace netfunc
