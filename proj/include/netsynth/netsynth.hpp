#pragma once

#include "netsynth/admittance.hpp"
#include "netsynth/analysis.hpp"
#include "netsynth/enumerate.hpp"
#include "netsynth/errors.hpp"
#include "netsynth/fit.hpp"
#include "netsynth/netlist.hpp"
#include "netsynth/oracle.hpp"
#include "netsynth/parse.hpp"
#include "netsynth/poly.hpp"
#include "netsynth/ratfunc.hpp"
#include "netsynth/sampling.hpp"
#include "netsynth/scalars.hpp"
#include "netsynth/synthesis.hpp"
#include "netsynth/topologies.hpp"
