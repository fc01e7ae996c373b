#pragma once

#include "dnflogic/dnf_compiler.hpp"
#include "dnflogic/error.hpp"
#include "dnflogic/expr.hpp"
#include "dnflogic/fuzzification.hpp"
#include "dnflogic/logic_core.hpp"
#include "dnflogic/logic_table.hpp"
#include "dnflogic/number_format.hpp"
#include "dnflogic/table_spec.hpp"
#include "dnflogic/soccer/brain.hpp"
#include "dnflogic/soccer/sim.hpp"
#include "dnflogic/soccer/world.hpp"
