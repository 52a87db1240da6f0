#pragma once

#include "heredenum/class_spec.hpp"
#include "heredenum/cks.hpp"
#include "heredenum/dispatch.hpp"
#include "heredenum/enumerator.hpp"
#include "heredenum/errors.hpp"
#include "heredenum/extend.hpp"
#include "heredenum/graph.hpp"
#include "heredenum/io.hpp"
#include "heredenum/lift.hpp"
#include "heredenum/next.hpp"
#include "heredenum/oracle.hpp"
#include "heredenum/recognition.hpp"
#include "heredenum/reductions.hpp"
#include "heredenum/restricted_solvers.hpp"
#include "heredenum/small_graphs.hpp"
#include "heredenum/solution_map.hpp"
#include "heredenum/steps.hpp"
#include "heredenum/succ_interval.hpp"
#include "heredenum/succ_tp.hpp"
#include "heredenum/vertex_set.hpp"
