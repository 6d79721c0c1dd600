#pragma once

#include "bits.hpp"
#include "blocks.hpp"
#include "congruence.hpp"
#include "construct.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "group_graph.hpp"
#include "io.hpp"
#include "iso.hpp"
#include "lattice.hpp"
#include "poset.hpp"
#include "representation.hpp"
#include "search.hpp"
#include "symmetry.hpp"
