//
// Project nmcg - Copyright 2026 the nmcg authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "nmcg/bench.hpp"
#include "nmcg/direction.hpp"
#include "nmcg/io.hpp"
#include "nmcg/nmf.hpp"
#include "nmcg/nonmonotone.hpp"
#include "nmcg/problem.hpp"
#include "nmcg/problems.hpp"
#include "nmcg/solver.hpp"
#include "nmcg/stepsize.hpp"
