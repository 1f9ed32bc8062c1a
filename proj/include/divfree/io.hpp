#pragma once

#include <string>
#include <variant>

#include "divfree/modules.hpp"

namespace divfree {

/// Canonical expression text.  Terms follow the internal key order;
/// coefficients are printed in lowest terms with explicit sign.
std::string print(const AlgebraElement& a);
std::string print(const WittElement& w);
std::string print(const ModuleElement& v);
std::string print(const Weight& w);
std::string print(const MultiIndex& i);

using ParsedValue = std::variant<AlgebraElement, WittElement, ModuleElement>;

/// Everything the concrete syntax needs to resolve symbols.
struct ParseEnv {
  ContextPtr ctx;
  GroupElement rho;             // substituted into D(p,q; ...)
  ModuleDescriptor module_desc;  // the module v{...}[...] vectors live in
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset;
};

/// Parses a sum-of-terms expression; see docs/grammar.ebnf.
ParsedValue parse_expression(const std::string& input, const ParseEnv& env);

AlgebraElement parse_algebra(const std::string& input, const ParseEnv& env);
WittElement parse_witt(const std::string& input, const ParseEnv& env);
ModuleElement parse_module(const std::string& input, const ParseEnv& env);

/// Parses a bare multi-index literal "[i1,...,in]".
MultiIndex parse_multi_index(const std::string& input, int expected_len);

}  // namespace divfree
