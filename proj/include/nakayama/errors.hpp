#ifndef NAKAYAMA_ERRORS_HPP
#define NAKAYAMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nakayama {

/// Input text that cannot be read in the expected format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Step string contains a character outside {U,u,1,D,d,0}.
struct BadAlphabet : ParseError {
    using ParseError::ParseError;
};

/// Step word is unbalanced or some prefix dips below the axis.
struct NonLatticeWord : ParseError {
    using ParseError::ParseError;
};

/// Operation requires a non-empty path.
struct EmptyPath : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Permutation contains a descending subsequence of length three.
struct Not321Avoiding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested formula excludes the identity permutation.
struct IdentityNotCovered : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class KupischViolation {
    LastNotOne,      // c_n != 1
    EntryBelowTwo,   // c_i < 2 for some i < n
    DropTooSteep,    // c_{i+1} < c_i - 1
    OverhangsQuiver, // c_i + i > n + 1
};

const char* to_string(KupischViolation v);

/// Integer sequence is not a valid Kupisch series; `violation` names the
/// first constraint that failed.
struct InvalidKupisch : std::runtime_error {
    InvalidKupisch(KupischViolation v, const std::string& detail)
        : std::runtime_error(std::string(to_string(v)) + ": " + detail), violation(v) {}
    KupischViolation violation;
};

/// Module is not defined over the given algebra.
struct BadModule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation is undefined for the zero module.
struct ZeroModule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid two-row tableau shape.
struct BadShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nakayama

#endif
