#pragma once

// umbrella header

#include "centroid.hpp"
#include "field.hpp"
#include "freelie.hpp"
#include "io.hpp"
#include "jordan.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "pi.hpp"
#include "radical.hpp"
#include "rational.hpp"
#include "tkk.hpp"
