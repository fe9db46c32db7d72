#ifndef ARTKERNEL_ARTKERNEL_HPP
#define ARTKERNEL_ARTKERNEL_HPP

#include "artkernel/blockgraph.hpp"
#include "artkernel/character.hpp"
#include "artkernel/chordal.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/graph_of_groups.hpp"
#include "artkernel/group.hpp"
#include "artkernel/io.hpp"
#include "artkernel/oracle.hpp"
#include "artkernel/rational.hpp"
#include "artkernel/splitting.hpp"
#include "artkernel/sweep.hpp"

#endif  // ARTKERNEL_ARTKERNEL_HPP
