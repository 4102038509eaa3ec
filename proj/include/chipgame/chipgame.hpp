#pragma once

#include "chipgame/bipartite.hpp"
#include "chipgame/bounds.hpp"
#include "chipgame/bricks.hpp"
#include "chipgame/closure_file.hpp"
#include "chipgame/core.hpp"
#include "chipgame/moves.hpp"
#include "chipgame/oracle.hpp"
#include "chipgame/order.hpp"
#include "chipgame/solver.hpp"
#include "chipgame/symmetric.hpp"
#include "chipgame/verifier.hpp"
