#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onto2cdm {

/// Base of every failure raised by the library. Findings about the content
/// of an ontology or model are reported as Diagnostic values instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(std::string name)
        : Error("unknown name: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class MalformedInput : public Error {
public:
    MalformedInput(std::size_t line, std::size_t column, std::string detail)
        : Error("malformed input at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                detail),
          line_(line),
          column_(column),
          detail_(std::move(detail)) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

class UnsupportedConstruct : public Error {
public:
    explicit UnsupportedConstruct(std::string construct)
        : Error("unsupported construct: " + construct), construct_(std::move(construct)) {}
    const std::string& construct() const noexcept { return construct_; }

private:
    std::string construct_;
};

class UnresolvedReference : public Error {
public:
    explicit UnresolvedReference(std::string name)
        : Error("unresolved reference: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class SchemaViolation : public Error {
public:
    SchemaViolation(std::string path, std::string detail)
        : Error("schema violation at " + path + ": " + detail),
          path_(std::move(path)),
          detail_(std::move(detail)) {}
    const std::string& path() const noexcept { return path_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string path_;
    std::string detail_;
};

class UnresolvedRoot : public Error {
public:
    explicit UnresolvedRoot(std::string name)
        : Error("unresolved root: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class InconsistentCardinalities : public Error {
public:
    explicit InconsistentCardinalities(std::string element)
        : Error("inconsistent cardinalities while merging " + element),
          element_(std::move(element)) {}
    const std::string& element() const noexcept { return element_; }

private:
    std::string element_;
};

class UnknownSubject : public Error {
public:
    explicit UnknownSubject(std::string name)
        : Error("repair refers to unknown subject: " + name), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class RepairConflict : public Error {
public:
    explicit RepairConflict(const std::string& detail) : Error("repair conflict: " + detail) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& detail) : Error("degenerate input: " + detail) {}
};

class LexiconUnavailable : public Error {
public:
    explicit LexiconUnavailable(std::string path)
        : Error("lexicon unavailable: " + path), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace onto2cdm
