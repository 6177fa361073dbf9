#pragma once

#include "knotslope/diagram.hpp"
#include "knotslope/error.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/oracles.hpp"
#include "knotslope/pd_code.hpp"
#include "knotslope/random_diagram.hpp"
#include "knotslope/report.hpp"
#include "knotslope/signature.hpp"
#include "knotslope/state_sum.hpp"
#include "knotslope/surfaces.hpp"
#include "knotslope/table.hpp"
#include "knotslope/verify.hpp"
