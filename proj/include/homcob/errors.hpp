#ifndef HOMCOB_ERRORS_HPP
#define HOMCOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homcob {

// Coarse class of a failure; the CLI maps these to exit codes
// (parse -> 2, domain -> 3, unknown name -> 4).
enum class ErrorClass { Parse, Domain, UnknownName };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg)
        : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

// Syntax failure with enough context for caret diagnostics.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, std::string expected, std::string found)
        : Error(ErrorClass::Parse,
                "parse error at position " + std::to_string(pos) +
                    ": expected " + expected + ", found " + found),
          pos(pos), expected(std::move(expected)), found(std::move(found)) {}

    std::size_t pos;
    std::string expected;
    std::string found;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(ErrorClass::Domain, msg) {}
};

#define HOMCOB_DOMAIN_ERROR(NAME)                                  \
    class NAME : public DomainError {                              \
    public:                                                        \
        explicit NAME(const std::string& msg) : DomainError(msg) {} \
    };

HOMCOB_DOMAIN_ERROR(SingularMatrix)
HOMCOB_DOMAIN_ERROR(UnsupportedBase)
HOMCOB_DOMAIN_ERROR(TwoTorsionPresent)
HOMCOB_DOMAIN_ERROR(NotRationalHomologySphere)
HOMCOB_DOMAIN_ERROR(NonZeroLinkingMatrix)
HOMCOB_DOMAIN_ERROR(MissingLinkData)
HOMCOB_DOMAIN_ERROR(MatrixNotDivisibleByP)
HOMCOB_DOMAIN_ERROR(EvenPrime)
HOMCOB_DOMAIN_ERROR(IndexOutOfRange)
HOMCOB_DOMAIN_ERROR(BadParameter)
HOMCOB_DOMAIN_ERROR(CutoffExceeded)

#undef HOMCOB_DOMAIN_ERROR

class UnknownCatalogName : public Error {
public:
    explicit UnknownCatalogName(const std::string& name)
        : Error(ErrorClass::UnknownName, "unknown link catalog name: " + name) {}
};

class UnknownExample : public Error {
public:
    explicit UnknownExample(const std::string& name)
        : Error(ErrorClass::UnknownName, "unknown example name: " + name) {}
};

} // namespace homcob

#endif
