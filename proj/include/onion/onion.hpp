#pragma once

#include "onion/crossing.hpp"
#include "onion/digraph.hpp"
#include "onion/duality.hpp"
#include "onion/errors.hpp"
#include "onion/extremal.hpp"
#include "onion/flow.hpp"
#include "onion/generate.hpp"
#include "onion/harvest.hpp"
#include "onion/io.hpp"
#include "onion/oracle.hpp"
