// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sfband/baseline.hpp"
#include "sfband/errors.hpp"
#include "sfband/experiment.hpp"
#include "sfband/io.hpp"
#include "sfband/kernel.hpp"
#include "sfband/metrics.hpp"
#include "sfband/quadrature.hpp"
#include "sfband/reconstruct.hpp"
#include "sfband/rng.hpp"
#include "sfband/scenario.hpp"
#include "sfband/selftest.hpp"
#include "sfband/solver.hpp"
#include "sfband/spectrum.hpp"
#include "sfband/specfun.hpp"
