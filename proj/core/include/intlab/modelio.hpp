#ifndef INTLAB_MODELIO_HPP
#define INTLAB_MODELIO_HPP

#include "intlab/model.hpp"

#include <string>

namespace intlab {

/// Parses a model from JSON text. Schema:
///   {
///     "sorts":    [{"id": "w", "indices": ["w1", ...], "edges": [["w1","w2"], ...]}, ...],
///     "entities": ["ann", ...],
///     "constants": [{"name": "phi", "type": "<s,t>", "intension": ...}, ...]
///   }
/// A constant's type may be written "<s,TYPE>" (s is the compound index) or
/// just "TYPE". The intension is a table nested per sort in declaration order
/// and keyed by index labels; a non-object value is rigid (the same extension
/// at every index). Function values are objects keyed by the argument
/// (entity/index label, or "0"/"1" for truth values).
/// The result is validated; throws ModelError on any defect.
IntensionalModel parse_model_text(const std::string& json_text);

/// Reads and parses a model file.
IntensionalModel load_model(const std::string& path);

/// FNV-1a 64-bit content hash, hex-encoded (used to stamp reports).
std::string content_hash_hex(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace intlab

#endif  // INTLAB_MODELIO_HPP
