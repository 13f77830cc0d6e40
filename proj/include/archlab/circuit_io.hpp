#pragma once

#include <string>
#include <string_view>

#include "archlab/circuit.hpp"

namespace archlab {

/// Parses a circuit description. The document is a JSON object
///
///   {"suppl_input": <nat>,
///    "neurons": [{"id": <nat>, "tau": "<rational>", "leak": "<rational>",
///                 "weights": {"<source-id>": "<rational>", ...}}, ...]}
///
/// Rationals are always strings so values stay exact. Omitted weight entries
/// are 0. The result is an initial circuit. Throws SyntaxError (with byte
/// position), SchemaError, or ConstraintError naming the violated record
/// constraint.
NeuroCircuit parse_circuit(std::string_view text);

/// Canonical serialization: neurons ordered by id, weight keys ascending,
/// rationals canonical, zero weights omitted. Only the static features are
/// written, so parse(serialize(c)) is an initial circuit with features
/// equivalent to c's. Byte-deterministic.
std::string serialize_circuit(const NeuroCircuit& c);

/// Parses the boundary input format: time steps separated by ';', each step
/// exactly suppl_input characters from {0,1} ordered by external id, first
/// step = time 1. The ';' may be omitted when suppl_input is 1. Returns the
/// reverse-chronological input sequence. Throws SchemaError on wrong arity
/// or characters.
ExternalInputs parse_input_string(std::string_view text,
                                  std::size_t suppl_input,
                                  std::size_t first_external_id);

/// Inverse of parse_input_string (chronological text).
std::string format_input_string(const ExternalInputs& inps,
                                std::size_t suppl_input,
                                std::size_t first_external_id);

}  // namespace archlab
