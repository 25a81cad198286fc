// SPDX-License-Identifier: MIT
#pragma once

#include "symbreak/automorphism.hpp"
#include "symbreak/cnf.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/predicate.hpp"
#include "symbreak/sbp.hpp"
#include "symbreak/solver.hpp"
