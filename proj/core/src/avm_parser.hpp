#pragma once

#include "lexer.hpp"
#include "tfsdisc/feature_structure.hpp"

namespace tfsdisc::detail {

// Parses one AVM starting at the lexer's current token and leaves the lexer
// on the token after it.
FeatureStructure parse_avm_from(const TypeHierarchy& h, Lexer& lex);

}  // namespace tfsdisc::detail
