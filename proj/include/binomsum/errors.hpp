#pragma once

#include <stdexcept>
#include <string>

namespace binomsum {

// Base class for everything this library throws on its own behalf.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an operation's domain (zero denominator, alpha in {0,-1},
// non-half-integer gamma argument, parameter outside an identity's domain).
struct domain_error : error {
    using error::error;
};

// Gamma function evaluated at a nonpositive integer.
struct pole_error : error {
    using error::error;
};

// certify_poly_identity given fewer than degree_bound+1 distinct points.
struct insufficient_samples : error {
    using error::error;
};

// Closed form is 0/0 at this parameter point (e.g. Theorem 1 at m=n=0).
struct degenerate_error : error {
    using error::error;
};

// Registry lookup with an id that is not in the catalog.
struct unknown_identity : error {
    using error::error;
};

// Hypergeometric series with no nonpositive-integer upper parameter.
struct non_terminating : error {
    using error::error;
};

// A lower parameter makes a Pochhammer denominator vanish before the
// series terminates.
struct lower_param_pole : error {
    using error::error;
};

// A denominator inside the second-proof pipeline vanished; the message
// names the offending factor.
struct pipeline_pole : error {
    using error::error;
};

} // namespace binomsum
