#pragma once

// Umbrella header for the exact engine. The JSON report layer lives in
// qplane/report_json.hpp and additionally needs nlohmann/json.

#include "qplane/scalar.hpp"
#include "qplane/poly.hpp"
#include "qplane/finite_algebra.hpp"
#include "qplane/doubling.hpp"
#include "qplane/linalg.hpp"
#include "qplane/calculus.hpp"
#include "qplane/metric.hpp"
#include "qplane/field_theory.hpp"
#include "qplane/expr.hpp"
#include "qplane/report.hpp"
