#ifndef CLIQUECOVER_CLIQUECOVER_HPP
#define CLIQUECOVER_CLIQUECOVER_HPP

#include "cliquecover/dimacs.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/generate.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/matching.hpp"
#include "cliquecover/oracle.hpp"
#include "cliquecover/report.hpp"
#include "cliquecover/solver.hpp"
#include "cliquecover/structure.hpp"

#endif  // CLIQUECOVER_CLIQUECOVER_HPP
