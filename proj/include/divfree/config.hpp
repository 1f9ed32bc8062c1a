#pragma once

#include <string>

#include "divfree/lattice.hpp"
#include "divfree/modules.hpp"
#include "divfree/witt.hpp"

namespace divfree {

/// Runtime configuration: signature, group generators, default weight, the
/// twist rho (group coordinates), and window parameters.  Loaded from JSON;
/// rationals are written as strings "p/q" so no floats are involved.
struct Config {
  Signature sig;
  std::vector<std::vector<Rational>> generators;  // rows, length l2+l3
  Weight mu;                                      // length l, first l1 zero
  GroupElement rho;                               // group coordinates
  Window window;
  long max_terms = 0;  // safety cap on parsed expression size; 0 = none

  ContextPtr make_context() const;
};

/// Throws std::runtime_error with a readable message on malformed input.
Config load_config(const std::string& path);
Config config_from_json_text(const std::string& text);

}  // namespace divfree
