#pragma once

#include "omc/arrangement.hpp"
#include "omc/bits.hpp"
#include "omc/blocking.hpp"
#include "omc/committee.hpp"
#include "omc/counting.hpp"
#include "omc/error.hpp"
#include "omc/inclusion_exclusion.hpp"
#include "omc/instances.hpp"
#include "omc/integer.hpp"
#include "omc/reorientation.hpp"
#include "omc/subfamily.hpp"
#include "omc/tope.hpp"
#include "omc/tope_io.hpp"

namespace omc {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace omc
