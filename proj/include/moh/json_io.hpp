#pragma once

#include "moh/forge.hpp"

#include <string>
#include <string_view>

namespace moh {

/// Document form of a GeneratorSet as carried by the JSON interface. All
/// coefficients are "num/den" strings; no floating point anywhere.
struct GeneratorDocument {
    std::int64_t n = 0;
    std::int64_t lambda = 0;
    std::vector<Polynomial> generators;   // canonical primitive forms
    std::vector<Polynomial> sigma_parts;  // internal scale
    std::vector<Polynomial> tails;        // internal scale
    CoefficientTables tables;

    friend bool operator==(const GeneratorDocument&, const GeneratorDocument&);
};

GeneratorDocument to_document(const GeneratorSet& G);

std::string emit_json(const GeneratorDocument& doc);

/// Parses emit_json output. Throws ParseError on malformed documents.
GeneratorDocument parse_json(std::string_view text);

}  // namespace moh
