#ifndef COLORLAB_ERRORS_HPP
#define COLORLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace colorlab {

// Invalid graph data: self-loops, duplicate edges, out-of-range ids,
// orderings that do not witness the declared bounds.
class GraphError : public std::invalid_argument {
public:
    explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact oracle was asked for an instance above its configured limit.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated an operation precondition (parameter ranges, set overlap, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A game strategy broke the move protocol (out-of-range index, resigning
// while a legal move exists, nondeterministic replay, ...).
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// File parsing / serialization problems.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A verification step failed (certificate does not check out, replay mismatch).
class VerifyError : public std::runtime_error {
public:
    explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace colorlab

#endif
