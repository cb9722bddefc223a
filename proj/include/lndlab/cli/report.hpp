#pragma once

#include <complex>
#include <string>
#include <vector>

#include "json.hpp"
#include "lndlab/denslab/compat.hpp"
#include "lndlab/denslab/saturate.hpp"
#include "lndlab/denslab/tangent.hpp"
#include "lndlab/fields/lnd.hpp"
#include "lndlab/tame/jvdk.hpp"

// JSON renderings of library results. Polynomials and coefficients are
// written in the text grammar so they parse back.
namespace lnd::cli {

using nlohmann::json;

json coeff_json(const polyalg::Coeff& c);
json complex_json(std::complex<double> z);
json point_json(std::span<const polyalg::Coeff> p);
json complex_vector_json(std::span<const std::complex<double>> v);

/// {"variety": name, "images": {var: poly}}.
json derivation_json(const fields::Derivation& d);
/// {var: index}.
json certificate_json(const fields::Lnd& l);

json factor_list_json(const tame::FactorList& list);
/// Inverse of factor_list_json over the given ring. Throws std::invalid_argument.
tame::FactorList factor_list_from_json(const json& j, const polyalg::Ring& ring);

json saturation_json(const denslab::SaturationReport& r);
json pair_json(const denslab::PairReport& r);
json flex_json(const denslab::FlexReport& r);

/// "x: 1, y: 2".
std::string certificate_text(const fields::Lnd& l);
std::string point_text(std::span<const polyalg::Coeff> p);
std::string complex_text(std::complex<double> z);

}  // namespace lnd::cli
