#pragma once

#include <stdexcept>
#include <string>

namespace nsymkit {

/// Input outside an operation's domain (bad part, index out of range, size mismatch).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation applied to an element carrying the wrong basis tag.
class BasisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two compositions that are not comparable in the reverse composition poset.
class OrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity that must always hold was violated.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace nsymkit
