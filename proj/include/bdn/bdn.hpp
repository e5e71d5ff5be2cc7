#pragma once

#include "bdn/error.hpp"
#include "bdn/vertex_set.hpp"
#include "bdn/graph.hpp"
#include "bdn/coloring.hpp"
#include "bdn/aux_graph.hpp"
#include "bdn/matching.hpp"
#include "bdn/reduction.hpp"
#include "bdn/certificate.hpp"
#include "bdn/oracle.hpp"
#include "bdn/solver.hpp"
#include "bdn/generators.hpp"
#include "bdn/io.hpp"
#include "bdn/sweep.hpp"
