#pragma once

#include <stdexcept>
#include <string>

namespace codeconform {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

// Malformed input while reading a file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A record violated a structural rule; carries the offending id and rule name.
class ValidationError : public Error {
public:
    ValidationError(const std::string& id, const std::string& rule)
        : Error("validation failed for '" + id + "': " + rule), id_(id), rule_(rule) {}
    const std::string& id() const { return id_; }
    const std::string& rule() const { return rule_; }

private:
    std::string id_;
    std::string rule_;
};

class ChainError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Constraint sentence did not match any pattern for its type.
class UnrecognizedPhrasing : public Error {
public:
    UnrecognizedPhrasing(int type_id, const std::string& text)
        : Error("unrecognized phrasing for constraint type " + std::to_string(type_id) +
                ": \"" + text + "\""),
          type_id_(type_id) {}
    int type_id() const { return type_id_; }

private:
    int type_id_;
};

class UnsupportedLanguage : public Error {
public:
    using Error::Error;
};

class UndeterminedLanguage : public Error {
public:
    using Error::Error;
};

class ModeError : public Error {
public:
    using Error::Error;
};

class AmbiguousJudgeOutput : public Error {
public:
    using Error::Error;
};

class JudgeUnavailable : public Error {
public:
    using Error::Error;
};

class TransportError : public Error {
public:
    using Error::Error;
};

class TemplateError : public Error {
public:
    using Error::Error;
};

class ExtractionFailed : public Error {
public:
    using Error::Error;
};

class ExpansionFailed : public Error {
public:
    using Error::Error;
};

class ExpansionStopped : public Error {
public:
    using Error::Error;
};

class NothingToRepair : public Error {
public:
    using Error::Error;
};

class EmptyConstraintSet : public Error {
public:
    using Error::Error;
};

class EmptyRun : public Error {
public:
    using Error::Error;
};

} // namespace codeconform
