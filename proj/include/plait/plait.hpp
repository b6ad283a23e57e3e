#pragma once

#include "plait/bounds.hpp"
#include "plait/braid.hpp"
#include "plait/catalog.hpp"
#include "plait/error.hpp"
#include "plait/foliation.hpp"
#include "plait/levelgraph.hpp"
#include "plait/morse.hpp"
#include "plait/satellite.hpp"
#include "plait/search.hpp"
#include "plait/wordgen.hpp"
