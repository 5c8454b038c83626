#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lck {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ExponentOverflow : public Error {
public:
    ExponentOverflow(std::string symbol, unsigned exponent, unsigned cap);
    std::string symbol;
    unsigned exponent;
    unsigned cap;
};

class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(std::string symbol);
    std::string symbol;
};

class ModuleMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class Unverified : public Error {
public:
    using Error::Error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

// Exponent cap per symbol. Initialized from LCK_MAX_DEGREE when set, else 64.
unsigned max_degree();
void set_max_degree(unsigned cap);

}  // namespace lck
