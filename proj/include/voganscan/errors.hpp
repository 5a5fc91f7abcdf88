#pragma once

#include <stdexcept>
#include <string>

namespace voganscan {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "our" failures from std failures can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rank below the family minimum (A>=1, B>=2, C>=3, D>=4).
class InvalidRank : public Error {
public:
    using Error::Error;
};

/// Painted set empty, unsorted, duplicated or out of [1, rank].
class InvalidDiagram : public Error {
public:
    using Error::Error;
};

/// Vector length does not match the rank it is used with.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Position into the painted set outside 1..m.
class IndexError : public Error {
public:
    using Error::Error;
};

/// The two independent routes to xi inside the oracle disagree.
/// Always an implementation defect.
class OracleInconsistency : public Error {
public:
    using Error::Error;
};

/// A printed case formula cannot be evaluated as written for this input.
class AmbiguousBranch : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Odd xi value handed to the classifier.
class ParityError : public Error {
public:
    using Error::Error;
};

/// Rank exceeds the brute-force oracle cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, int rank, int cap)
        : Error(what), rank_(rank), cap_(cap) {}

    int rank() const noexcept { return rank_; }
    int cap() const noexcept { return cap_; }

private:
    int rank_;
    int cap_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Reading or writing an output stream failed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace voganscan
