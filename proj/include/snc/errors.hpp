#pragma once

#include <stdexcept>
#include <string>

namespace snc {

// Invalid values inside an operation's stated domain (non-coprime exponents,
// contracting a vertex that is not a (-1)-curve, ...). CLI exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed structures: references to missing vertices/edges, bad file
// contents, unknown flags. CLI exit code 2.
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariants; seeing one is a bug in this library.
// CLI exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond)
        throw domain_error(what);
}

inline void require_structure(bool cond, const std::string& what) {
    if (!cond)
        throw structural_error(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond)
        throw internal_error(what);
}

} // namespace snc
