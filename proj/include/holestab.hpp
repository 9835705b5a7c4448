#pragma once

// Everything in one include; the CLI layer (commands.hpp, report.hpp) also
// needs the vendored nlohmann json header on the include path.

#include "holestab/audit.hpp"
#include "holestab/boolean_recognizer.hpp"
#include "holestab/codes.hpp"
#include "holestab/error.hpp"
#include "holestab/gallery.hpp"
#include "holestab/hole_stabilizer.hpp"
#include "holestab/hypergraph.hpp"
#include "holestab/moves.hpp"
#include "holestab/perm_group.hpp"
#include "holestab/permutation.hpp"
#include "holestab/stabilizer_chain.hpp"
