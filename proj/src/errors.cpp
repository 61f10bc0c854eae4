#include "simulroots/errors.hpp"

#include <sstream>

namespace simulroots {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::distinctness_violation: return "DistinctnessViolation";
    case ErrorKind::singular_denominator: return "SingularDenominator";
    case ErrorKind::shifted_collision: return "ShiftedCollision";
    case ErrorKind::domain_error: return "DomainError";
    case ErrorKind::negative_denominator: return "NegativeDenominator";
    case ErrorKind::inapplicable: return "Inapplicable";
    case ErrorKind::bracket_failure: return "BracketFailure";
    case ErrorKind::certificate_not_satisfied: return "CertificateNotSatisfied";
    case ErrorKind::certificate_degenerate: return "CertificateDegenerate";
    case ErrorKind::degenerate_bound: return "DegenerateBound";
    case ErrorKind::oracle_failure: return "OracleFailure";
    case ErrorKind::matching_ambiguous: return "MatchingAmbiguous";
    case ErrorKind::insufficient_data: return "InsufficientData";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {
std::string distinctness_message(std::size_t i, std::size_t j, double distance) {
  std::ostringstream os;
  os << "components " << i << " and " << j << " are " << distance << " apart";
  return os.str();
}
}  // namespace

DistinctnessViolation::DistinctnessViolation(std::size_t i, std::size_t j, double distance)
    : Error(ErrorKind::distinctness_violation, distinctness_message(i, j, distance)), i_(i), j_(j) {}

SingularDenominator::SingularDenominator(std::size_t component)
    : Error(ErrorKind::singular_denominator,
            "update denominator vanishes at component " + std::to_string(component)),
      component_(component) {}

ShiftedCollision::ShiftedCollision(std::size_t i, std::size_t j)
    : Error(ErrorKind::shifted_collision, "z_" + std::to_string(i) + " - z_" + std::to_string(j) +
                                              " - W_" + std::to_string(i) + " vanishes"),
      i_(i), j_(j) {}

}  // namespace simulroots
