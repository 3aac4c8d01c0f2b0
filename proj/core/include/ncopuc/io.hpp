#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ncopuc/matrix_tuple.hpp"
#include "ncopuc/moments.hpp"
#include "ncopuc/polynomial.hpp"
#include "ncopuc/verblunsky.hpp"
#include "ncopuc/word.hpp"

// JSON file formats. Words are arrays of letters ([] for the empty word);
// scalars are written as {"word": [...], "re": x, "im": y}. Every parse
// failure is reported as FormatError.
namespace ncopuc::io {

using Json = nlohmann::json;

/// Compact JSON with every floating-point number printed to 17 significant
/// digits, so equal data always gives byte-identical text.
std::string dump(const Json& j);
std::string format_real(Real x);

Json to_json(const Word& w);
Word word_from_json(const Json& j, int alphabet);

/// {"d", "horizon", "moments": [...]}; absent entries are omitted.
Json to_json(const MomentFamily& m);
/// Absent words stay absent (an error on read) unless the file sets
/// "fill_zero": true or `fill_zero` is passed.
MomentFamily moments_from_json(const Json& j, bool fill_zero = false);

/// {"d", "horizon", "gamma": [...]}; the empty word is implicit.
Json to_json(const VerblunskyFamily& g);
/// The horizon is `horizon` if given, else the file's "horizon", else the
/// shortlex-largest listed word. Missing words inside it are an error unless
/// filled with zero.
VerblunskyFamily gamma_from_json(const Json& j, std::optional<Word> horizon = std::nullopt,
                                 bool fill_zero = false);

/// {"d", "coeffs": [...]}.
Json to_json(const NcPolynomial& p);
NcPolynomial polynomial_from_json(const Json& j);

/// {"k", "d", "components": [[[re, im], ...] x k rows] x d}.
Json to_json(const MatrixTuple& z);
MatrixTuple tuple_from_json(const Json& j);

Json parse(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ncopuc::io
