#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pentahole {

enum class Errc {
    DuplicatePoint,
    CollinearTriple,
    CoordinateOverflow,
    TooFewPoints,
    WitnessOnLine,
    NotEnoughPointsInRegion,
    SubsetNotInHost,
    PointNotInSet,
    PreconditionViolated,
    SizeMismatch,
    HullTooSmall,
    NoConvexHexagonFound,
    ParseError,
    Unsatisfiable,
    IoError,
    NotADoublingSize,
    BudgetExceeded,
};

const char* errc_name(Errc c);

// Invalid input or unmet precondition. `args` carries offending indices
// (input order for validation errors, 1-based source lines for parse errors).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg, std::vector<long long> args = {});
    Errc code() const { return code_; }
    const std::vector<long long>& args() const { return args_; }

private:
    Errc code_;
    std::vector<long long> args_;
};

// A guaranteed step failed. Always an implementation bug, never a property
// of the input.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

[[noreturn]] void fail(Errc code, const std::string& msg, std::vector<long long> args = {});

} // namespace pentahole
