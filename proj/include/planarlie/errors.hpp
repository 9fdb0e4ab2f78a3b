#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarlie {

/// Base for all recoverable domain errors. `name()` is the stable
/// machine-readable identifier used by the CLI (exit code 2).
class domain_error : public std::runtime_error {
public:
    domain_error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define PLANARLIE_ERROR(cls)                                              \
    class cls : public domain_error {                                     \
    public:                                                               \
        explicit cls(const std::string& what = "") : domain_error(#cls, what) {} \
    }

PLANARLIE_ERROR(DivisionByZero);
PLANARLIE_ERROR(DegreeCapExceeded);
PLANARLIE_ERROR(MultivariateInput);
PLANARLIE_ERROR(ZeroInput);
PLANARLIE_ERROR(ReducibleModulus);
PLANARLIE_ERROR(NonSquare);
PLANARLIE_ERROR(DimensionCapExceeded);
PLANARLIE_ERROR(NotInSpan);
PLANARLIE_ERROR(NotMember);
PLANARLIE_ERROR(NotIdeal);
PLANARLIE_ERROR(NotProportional);
PLANARLIE_ERROR(FactorMismatch);
PLANARLIE_ERROR(ConstantInput);
PLANARLIE_ERROR(NoWitness);
PLANARLIE_ERROR(BadParameters);
PLANARLIE_ERROR(NoMatchWithinFamily);
PLANARLIE_ERROR(NotInCatalog);
PLANARLIE_ERROR(NonRationalSpectrum);

#undef PLANARLIE_ERROR

/// Expression parse failure: carries the offset and the token set that
/// would have been accepted there. CLI exit code 1.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t pos, std::vector<std::string> expected, const std::string& found)
        : std::runtime_error(format(pos, expected, found)),
          pos_(pos), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return pos_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t pos, const std::vector<std::string>& exp,
                              const std::string& found) {
        std::string s = "SyntaxError at " + std::to_string(pos) + ": found " + found + ", expected ";
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (i) s += " | ";
            s += exp[i];
        }
        return s;
    }
    std::size_t pos_;
    std::vector<std::string> expected_;
};

} // namespace planarlie
