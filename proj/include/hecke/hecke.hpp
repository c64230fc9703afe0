#pragma once

// Umbrella header.

#include "arith.hpp"    // IWYU pragma: export
#include "belyi.hpp"    // IWYU pragma: export
#include "cusps.hpp"    // IWYU pragma: export
#include "dessin.hpp"   // IWYU pragma: export
#include "errors.hpp"   // IWYU pragma: export
#include "poly.hpp"     // IWYU pragma: export
#include "projline.hpp" // IWYU pragma: export
#include "serialize.hpp" // IWYU pragma: export
