#pragma once

// Convenience header pulling in the whole library: exact finite ring
// tables, ideal arithmetic, ring constructions, the condition deciders,
// and the verification harness.

#include "build.hpp"
#include "config.hpp"
#include "content.hpp"
#include "deciders.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "harness.hpp"
#include "ideal.hpp"
#include "isomorphism.hpp"
#include "localize.hpp"
#include "multipoly.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "ring_spec.hpp"
#include "search.hpp"
#include "table_ring.hpp"
#include "trivial_extension.hpp"
