#pragma once

#include <stdexcept>
#include <string>

namespace mmsim {

enum class ErrorClass { Config, Numeric, Io };

/// Base of every library error. The class maps onto the CLI exit-code contract.
class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string name, const std::string &what)
        : std::runtime_error(what), cls_(cls), name_(std::move(name)) {}

    ErrorClass error_class() const noexcept { return cls_; }
    const std::string &name() const noexcept { return name_; }

private:
    ErrorClass cls_;
    std::string name_;
};

class SingularAttitude : public Error {
public:
    explicit SingularAttitude(const std::string &what)
        : Error(ErrorClass::Numeric, "SingularAttitude", what) {}
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string &what)
        : Error(ErrorClass::Numeric, "NotPositiveDefinite", what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string &what)
        : Error(ErrorClass::Numeric, "Singular", what) {}
};

class InvalidAddedMass : public Error {
public:
    explicit InvalidAddedMass(const std::string &what)
        : Error(ErrorClass::Config, "InvalidAddedMass", what) {}
};

class NotNeutrallyBuoyant : public Error {
public:
    explicit NotNeutrallyBuoyant(const std::string &what)
        : Error(ErrorClass::Config, "NotNeutrallyBuoyant", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string &what)
        : Error(ErrorClass::Config, "ParseError", what) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string &what)
        : Error(ErrorClass::Config, "ValidationError", what) {}
};

class GridMismatch : public Error {
public:
    explicit GridMismatch(const std::string &what)
        : Error(ErrorClass::Numeric, "GridMismatch", what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string &what)
        : Error(ErrorClass::Io, "IoError", what) {}
};

} // namespace mmsim
