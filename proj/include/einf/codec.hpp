#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "einf/chains_e.hpp"
#include "einf/complex_x.hpp"
#include "einf/filtration.hpp"
#include "einf/foundations.hpp"
#include "einf/prisms.hpp"

namespace einf {

// Text encodings:
//   permutation / surjection / word   "1,2,3,1,2"
//   simplex                           "1,2,3;2,3,1;3,1,2"
//   chain                             "1,2,1 - 2*1,2,1,2 + ..."   ("0" for zero)
// Chain terms always print in the basis order.

std::string encode(const Word& w);
std::string encode(const Permutation& w);
std::string encode(const Surjection& u);
std::string encode(const Simplex& s);
std::string encode(const EChain& c);
std::string encode(const XChain& c);
std::string encode(const VertexCoord& x);
std::string encode(const LatticePath& p);

/// Comma-separated integer list. Throws ParseError.
Word decode_word(std::string_view text);
Permutation decode_permutation(std::string_view text);
/// Arity defaults to the largest letter.
Surjection decode_surjection(std::string_view text, std::optional<int> arity = std::nullopt);
/// Degenerate tuples decode fine; callers needing a basis element check.
Simplex decode_simplex(std::string_view text);
/// Degenerate basis elements are rejected with ErrorCode::degenerate.
EChain decode_echain(std::string_view text);
XChain decode_xchain(std::string_view text, std::optional<int> arity = std::nullopt);

// JSON records. Chains: {"arity", "degree", "terms": [{"coefficient", "basis"}]}.
nlohmann::json to_json(const EChain& c);
nlohmann::json to_json(const XChain& c);
nlohmann::json to_json(const ComplexityMatrix& m);  // [{"i", "j", "c"}]
nlohmann::json to_json(const CellDescriptor& cell);
EChain echain_from_json(const nlohmann::json& j);
XChain xchain_from_json(const nlohmann::json& j);

}  // namespace einf
