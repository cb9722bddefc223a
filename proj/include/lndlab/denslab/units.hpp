#pragma once

#include "lndlab/fields/lnd.hpp"

namespace lnd::denslab {

/// True iff f*g = 1 in C[X] and f is not constant: a nontrivial morphism X -> C*.
bool verify_unit_witness(const fields::AffineVariety& x, const fields::RingElement& f, const fields::RingElement& g);

/// True iff D(f) = 0 for a unit f (flow curves of D lie in the fibres of f).
/// Throws PreconditionViolation unless f*g = 1; constant units pass trivially.
bool lnd_annihilates_units(const fields::Lnd& d, const fields::RingElement& f, const fields::RingElement& g);

}  // namespace lnd::denslab
