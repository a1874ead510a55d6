#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace updom {

// Input violates a documented precondition (bad instance, over the brute-force
// cap, set bound to the wrong host, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A theorem-backed internal invariant failed. Indicates a bug (or an input that
// was proven impossible). The CLI maps this to exit code 1.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Rejection of a graph that is not 2K2-free; carries the violating vertices
// (a, b, c, d) with edges ab, cd and no edges between the pairs.
class TwoK2Error : public PreconditionError {
public:
    TwoK2Error(const std::string& what, std::array<int, 4> witness)
        : PreconditionError(what), witness_(witness) {}
    const std::array<int, 4>& witness() const { return witness_; }

private:
    std::array<int, 4> witness_;
};

}  // namespace updom
