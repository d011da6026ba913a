#ifndef MSTINT_MSTINT_HPP
#define MSTINT_MSTINT_HPP

#include "mstint/quantity.hpp"
#include "mstint/union_find.hpp"
#include "mstint/graph.hpp"
#include "mstint/instance_io.hpp"
#include "mstint/flow.hpp"
#include "mstint/mst.hpp"
#include "mstint/solution.hpp"
#include "mstint/eps_increase.hpp"
#include "mstint/relaxation.hpp"
#include "mstint/greedy_scan.hpp"
#include "mstint/budget.hpp"
#include "mstint/profit.hpp"
#include "mstint/protection.hpp"
#include "mstint/oracle.hpp"
#include "mstint/generators.hpp"
#include "mstint/bench.hpp"

#endif  // MSTINT_MSTINT_HPP
