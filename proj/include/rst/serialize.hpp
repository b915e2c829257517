#ifndef RST_SERIALIZE_HPP
#define RST_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "rst/hochschild.hpp"
#include "rst/spectral_triple.hpp"

namespace rst {

/// Triple document: {version, hilbert_dim, metric_dim?, claimed_label?,
/// algebra: [{label, matrix}], D, J: {linear_part}, chi?, probe_subspace?,
/// meta?}. Complex scalars are two-element [re, im] arrays; matrices are
/// nested row-major arrays of them. Round trips are bit-exact.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json triple_to_json(const RealSpectralTriple& t);
/// Throws ParseError on malformed documents and InvariantViolationError when
/// the decoded data fails the type invariants.
RealSpectralTriple triple_from_json(const nlohmann::json& j);

void save_triple(const RealSpectralTriple& t, const std::string& path);
RealSpectralTriple load_triple(const std::string& path);

/// Chain document: {degree, terms: [{coeff, a0_left, a0_right, legs: [...]}]}
/// with each slot either a matrix or a generator label resolved against the
/// triple the chain is evaluated on.
nlohmann::json chain_to_json(const HochschildChain& c);
HochschildChain chain_from_json(const nlohmann::json& j,
                                const RealSpectralTriple* resolve = nullptr);

}  // namespace rst

#endif  // RST_SERIALIZE_HPP
