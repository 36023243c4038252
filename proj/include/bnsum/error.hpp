#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bnsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidEncoding : public Error {
public:
    using Error::Error;
};

class IoFailure : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class EmptyCorpus : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class EmptyDocument : public Error {
public:
    using Error::Error;
};

/// Raised when one or more references contain no words. `doc_ids` lists every
/// offending entry so that a corpus run reports all of them at once.
class EmptyReference : public Error {
public:
    explicit EmptyReference(std::vector<std::string> doc_ids);

    const std::vector<std::string>& doc_ids() const noexcept { return doc_ids_; }

private:
    std::vector<std::string> doc_ids_;
};

}  // namespace bnsum
