#pragma once

#include "hvol/cohomology.hpp"
#include "hvol/cyclotomic.hpp"
#include "hvol/homology.hpp"
#include "hvol/magnus.hpp"
#include "hvol/numeric.hpp"
#include "hvol/parallel.hpp"
#include "hvol/periods.hpp"
#include "hvol/smith.hpp"
#include "hvol/tensor.hpp"

namespace hvol {
inline constexpr const char* kVersion = "0.1.0";
}
