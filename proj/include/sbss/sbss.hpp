#pragma once

#include <sbss/connectivity.hpp>
#include <sbss/digraph.hpp>
#include <sbss/error.hpp>
#include <sbss/exact.hpp>
#include <sbss/instances.hpp>
#include <sbss/random.hpp>
#include <sbss/solvers.hpp>
