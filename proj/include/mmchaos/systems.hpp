#pragma once

#include "mmchaos/multimap.hpp"

#include <string>
#include <vector>

namespace mmchaos {

// Built-in interval fixtures, all with exact dyadic breakpoints:
//   example1       {const 0, tent}
//   example2       {2x then plateau 1, plateau 1 then 2-2x}
//   example3       {tent, reflected tent}
//   tent           {tent}
//   identity       {identity}
//   const:<value>  {constant map}
// Unknown names raise a config error listing the catalog.
MultiMap fixture(const std::string& name);

std::vector<std::string> fixture_names();

} // namespace mmchaos
