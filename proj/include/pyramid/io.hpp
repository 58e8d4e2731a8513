#pragma once

#include <optional>
#include <string>

#include "pyramid/dominators.hpp"
#include "pyramid/instance.hpp"
#include "pyramid/solvers.hpp"

namespace pyramid {

// Instance files:
//   vertex <id> demand <int>
//   edge <id> <id> cost <int or p/q>
//   root <id>
// '#' starts a comment. Vertices get labels 0, 1, ... in declaration order.
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

// Routing files: one `path <v0> ... <vk>` line per path, v0 the root.
Routing parse_routing(const std::string& text, const Instance& inst);
std::string emit_routing(const Instance& inst, const Routing& rt);

// Certificate files: `tree lambda <p/q>` blocks of path lines, then `target-cost <p/q>`.
struct CertificateFile {
  Certificate cert;
  std::optional<Rational> target_cost;
};

CertificateFile parse_certificate(const std::string& text, const Instance& inst);
std::string emit_certificate(const Instance& inst, const Certificate& cert, const Routing* target = nullptr);

std::string emit_report(const SearchReport& rep);

std::string read_file(const std::string& path);

}  // namespace pyramid
