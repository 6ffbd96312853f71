#ifndef DELTAGRAPH_DELTAGRAPH_HPP
#define DELTAGRAPH_DELTAGRAPH_HPP

#include "blocks.hpp"
#include "chordal.hpp"
#include "commands.hpp"
#include "delta.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "json_io.hpp"
#include "msr.hpp"
#include "ortho_rep.hpp"
#include "rational.hpp"

#endif // DELTAGRAPH_DELTAGRAPH_HPP
