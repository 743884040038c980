#pragma once

#include <stdexcept>
#include <string>

namespace topo {

// Domain errors. The CLI prints name() and exits with status 1.
class Error : public std::runtime_error {
 public:
  Error(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

#define TOPO_ERROR(Name)                                               \
  struct Name : Error {                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

TOPO_ERROR(CapExceeded)
TOPO_ERROR(UniverseMismatch)
TOPO_ERROR(NotATopology)
TOPO_ERROR(BaseCriterionViolation)
TOPO_ERROR(SubbaseCriterionViolation)
TOPO_ERROR(ClosedAxiomViolation)
TOPO_ERROR(FilterBaseViolation)
TOPO_ERROR(NotAFilter)
TOPO_ERROR(EmptyMeet)
TOPO_ERROR(NotSurjective)
TOPO_ERROR(NeighborhoodAxiomViolation)
TOPO_ERROR(SetMapAxiomViolation)
TOPO_ERROR(NotABase)
TOPO_ERROR(KuratowskiViolation)
TOPO_ERROR(InteriorAxiomViolation)
TOPO_ERROR(NotDirected)
TOPO_ERROR(ClusterPreconditionFailed)
TOPO_ERROR(UniverseCardinalityMismatch)
TOPO_ERROR(NotEquivalence)
TOPO_ERROR(NotPreorder)
TOPO_ERROR(NoFullField)
TOPO_ERROR(MissingFullDomain)
TOPO_ERROR(MissingFullRange)
TOPO_ERROR(InvalidMetric)
TOPO_ERROR(EmptyArgument)
TOPO_ERROR(IndexOutOfRange)
TOPO_ERROR(NonDyadicClosedForm)
TOPO_ERROR(BracketViolation)
TOPO_ERROR(LengthMismatch)

#undef TOPO_ERROR

// Malformed input (bad JSON, bits outside the carrier, non-dyadic literal).
// The CLI maps this to exit status 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace topo
