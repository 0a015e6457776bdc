#ifndef DIOSOLVE_DIOSOLVE_HPP
#define DIOSOLVE_DIOSOLVE_HPP

#include "diosolve/bench.hpp"
#include "diosolve/equation.hpp"
#include "diosolve/json_io.hpp"
#include "diosolve/oracle.hpp"
#include "diosolve/parse.hpp"
#include "diosolve/solver.hpp"
#include "diosolve/trace.hpp"

#endif // DIOSOLVE_DIOSOLVE_HPP
