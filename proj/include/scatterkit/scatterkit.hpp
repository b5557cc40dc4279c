#pragma once

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"
#include "scatterkit/mpx.hpp"
#include "scatterkit/scheme_general.hpp"
#include "scatterkit/tree.hpp"
#include "scatterkit/chordal.hpp"
#include "scatterkit/cactus.hpp"
#include "scatterkit/spd.hpp"
#include "scatterkit/euclidean.hpp"
#include "scatterkit/covers.hpp"
#include "scatterkit/spr.hpp"
#include "scatterkit/generators.hpp"
