// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header.

#pragma once

#include "stemsize/algebra.hpp"
#include "stemsize/algebra_spec.hpp"
#include "stemsize/arith.hpp"
#include "stemsize/asymptotics.hpp"
#include "stemsize/dsl.hpp"
#include "stemsize/ehp.hpp"
#include "stemsize/error.hpp"
#include "stemsize/expr.hpp"
#include "stemsize/presets.hpp"
#include "stemsize/series.hpp"
#include "stemsize/series_io.hpp"
#include "stemsize/torsion.hpp"
#include "stemsize/verify.hpp"
