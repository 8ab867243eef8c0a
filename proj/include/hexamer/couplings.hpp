#pragma once

// Parameter records for the dimeric hexagonal complex.
//
// A CouplingSet holds the reduced model parameters: on-site energy e0,
// intra-dimer hop dd, hexagon-edge hop dh, inner-triangle hop ds, and the
// flux phase phi carried by the hexagon edges.  A DecayLaw turns geometric
// distance into a hopping amplitude.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexamer {

struct CouplingSet {
    double e0 = 0.0;
    double dd = 0.0;
    double dh = 0.0;
    double ds = 0.0;
    double phi = 0.0;  // radians, restricted to (-pi, pi]

    void validate() const {
        if (!std::isfinite(e0) || !std::isfinite(dd) || !std::isfinite(dh) ||
            !std::isfinite(ds) || !std::isfinite(phi))
            throw std::invalid_argument("CouplingSet: non-finite parameter");
        if (dd < 0.0 || dh < 0.0 || ds < 0.0)
            throw std::invalid_argument("CouplingSet: negative coupling amplitude");
        if (phi <= -std::numbers::pi || phi > std::numbers::pi)
            throw std::invalid_argument("CouplingSet: phi outside (-pi, pi]");
    }

    bool operator==(const CouplingSet&) const = default;
};

// Exponential distance decay delta(r) = delta0 * exp(-r / lambda).
struct DecayLaw {
    double delta0 = 1.0;
    double lambda = 1.0;

    void validate() const {
        if (!std::isfinite(delta0) || delta0 <= 0.0)
            throw std::invalid_argument("DecayLaw: delta0 must be positive and finite");
        if (!std::isfinite(lambda) || lambda <= 0.0)
            throw std::invalid_argument("DecayLaw: lambda must be positive and finite");
    }

    double coupling(double r) const {
        if (!std::isfinite(r) || r < 0.0)
            throw std::invalid_argument("DecayLaw: distance must be non-negative");
        return delta0 * std::exp(-r / lambda);
    }
};

}  // namespace hexamer
