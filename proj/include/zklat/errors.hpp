#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zklat {

// Malformed arguments: out-of-range residues, length or modulus mismatches.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically meaningless request (non-self-dual code handed to
// Construction A, k outside the proven range of the bound, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A negacirculant pair that violates AA^T + BB^T = -I.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration cap or node budget exhausted. `certified_floor` is a value b
// such that the caller may rely on "nothing of norm (or weight) < b exists";
// zero when nothing could be certified.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::int64_t certified_floor = 0)
        : std::runtime_error(what), certified_floor_(certified_floor) {}

    std::int64_t certified_floor() const noexcept { return certified_floor_; }

private:
    std::int64_t certified_floor_;
};

}  // namespace zklat
