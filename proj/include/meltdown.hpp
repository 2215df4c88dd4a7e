#pragma once

#include "meltdown/arith.hpp"
#include "meltdown/dyadic.hpp"
#include "meltdown/e_discovery.hpp"
#include "meltdown/error.hpp"
#include "meltdown/format.hpp"
#include "meltdown/log_engine.hpp"
#include "meltdown/numeral.hpp"
#include "meltdown/root_ladder.hpp"
#include "meltdown/tables.hpp"
