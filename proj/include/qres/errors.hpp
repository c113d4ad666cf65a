#pragma once

#include <stdexcept>
#include <string>

namespace qres {

// Domain errors. kind() is the stable name reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message) : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define QRES_ERROR(Name) \
  class Name : public Error { \
   public: \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

QRES_ERROR(InvalidType);
QRES_ERROR(NonEffectiveAction);
QRES_ERROR(NotNormalized);
QRES_ERROR(BadWeight);
QRES_ERROR(EmptySupport);
QRES_ERROR(NonInvariantCurve);
QRES_ERROR(DegenerateInput);
QRES_ERROR(MalformedGraph);
QRES_ERROR(SingularMatrix);
QRES_ERROR(SameBranch);
QRES_ERROR(DetachedBranch);
QRES_ERROR(NonCoprimeWeights);
QRES_ERROR(DivisibilityViolation);
QRES_ERROR(InconsistentData);
QRES_ERROR(BadFraction);
QRES_ERROR(IntegralityViolation);
QRES_ERROR(UnsupportedFactorShape);
QRES_ERROR(ParseError);

#undef QRES_ERROR

}  // namespace qres
