#pragma once

#include "acolcs/checks.hpp"
#include "acolcs/colony.hpp"
#include "acolcs/config.hpp"
#include "acolcs/construction.hpp"
#include "acolcs/deposit.hpp"
#include "acolcs/dual.hpp"
#include "acolcs/errors.hpp"
#include "acolcs/generators.hpp"
#include "acolcs/instance.hpp"
#include "acolcs/instance_io.hpp"
#include "acolcs/local_search.hpp"
#include "acolcs/merge.hpp"
#include "acolcs/model_search.hpp"
#include "acolcs/oracles.hpp"
#include "acolcs/pheromone.hpp"
#include "acolcs/result_io.hpp"
#include "acolcs/rng.hpp"
#include "acolcs/solver.hpp"
