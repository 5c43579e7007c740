#pragma once

// JSON reading and writing for signatures, coalgebras and terms.

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "thincoalg/coalgebra.hpp"
#include "thincoalg/term.hpp"

namespace thincoalg {

using Json = nlohmann::json;

/// Parses a file; syntax errors become Error(parse).
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

// {"ops":[{"id":str,"arity":int,"generators":[[int,...],...]}]}
Json signature_to_json(const Signature& sig);
SignatureSpec signature_spec_from_json(const Json& j);
SignaturePtr signature_from_json(const Json& j);

/// Resolves a "signature" member: an inline object, or a path relative to `base_dir`.
SignaturePtr resolve_signature(const Json& j, const std::filesystem::path& base_dir);

struct LoadedCoalgebra {
    Coalgebra coalg;
    std::optional<StateId> root;

    PointedCoalgebra pointed(std::optional<StateId> override_root = std::nullopt) const;
};

// {"signature":..., "states":int, "transitions":[{"op":str,"tuple":[int,...]}], "root":int}
Json coalgebra_to_json(const Coalgebra& c, std::optional<StateId> root = std::nullopt);
/// `fallback` is used when the document has no "signature" member.
LoadedCoalgebra coalgebra_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                                    SignaturePtr fallback = nullptr);

// Nodes: {"f":{"op":str,"children":[...]}} and {"g":{"prefix":[ctx...],"period":[ctx...]}},
// ctx = {"op":str,"hole":int,"sides":[...]}.
Json term_to_json(const Signature& sig, const Term& t);
Term term_from_json(const Signature& sig, const Json& j);

struct LoadedTerm {
    SignaturePtr sig;
    Term term;
};

/// {"signature":..., "term": node}, or a bare node when `fallback` supplies the signature.
Json term_file_to_json(const Signature& sig, const Term& t);
LoadedTerm term_file_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                               SignaturePtr fallback = nullptr);

/// Compact human-readable rendering, e.g. "op2(op0, (op1(_))^ω)".
std::string format_term(const Signature& sig, const Term& t);

} // namespace thincoalg
