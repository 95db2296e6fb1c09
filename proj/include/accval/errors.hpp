#pragma once

#include <stdexcept>

namespace accval {

// Malformed or incomplete input: unparseable files, unknown items, missing fields.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input outside a formula's domain (r <= g, zero book value, divergent LIM series).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace accval
