#pragma once

#include "mmchaos/finite_set.hpp"
#include "mmchaos/multimap.hpp"
#include "mmchaos/region.hpp"

#include <string>
#include <vector>

namespace mmchaos {

// Text forms used by the CLI, config files and reports.
//
//   scalar      1/3, 0.25, 2^-10
//   point       interval: a scalar; symbol: 0*, 1*, u, u@7, 101~1*, 10~u@2
//   set         {0/1, 1/2, 1/1}
//   region      interval: (1/4,1/2)|[0,1/8)   symbol: [10111]|[0]
//   map         pwl:[(0,0),(1/2,1),(1,0)]  const:1/2  shift  const-seq:0*
//   system      fixture name, or map descriptors joined by ';'

Scalar parse_scalar(const std::string& text, Scalar::Kind kind);

SymbolPoint parse_symbol_point(const std::string& text);
Point parse_point(const std::string& text, Space space, Scalar::Kind kind);

FiniteSet parse_set(const std::string& text, Space space, Scalar::Kind kind);

OpenRegion parse_region(const std::string& text, Space space, Scalar::Kind kind);

MapPtr parse_map(const std::string& text);
MultiMap parse_system(const std::string& text);

} // namespace mmchaos
