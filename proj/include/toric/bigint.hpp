#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All matrix entries, exponent vectors and kernel vectors are exact
// arbitrary-precision integers; distances are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

/// Malformed user input (files, CLI arguments, schemas).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A feasibility guard refused the computation (e.g. enumeration too large).
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int vec_sum(const IntVec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

inline IntVec zero_vec(std::size_t n) { return IntVec(n, 0); }

inline IntVec unit_vec(std::size_t n, std::size_t i) {
    IntVec v(n, 0);
    v.at(i) = 1;
    return v;
}

}  // namespace toric
