#pragma once

#include "hhnum/errors.hpp"
#include "hhnum/graph.hpp"
#include "hhnum/graph_io.hpp"
#include "hhnum/pseudoordering.hpp"
#include "hhnum/random.hpp"
#include "hhnum/tree_transform.hpp"
#include "hhnum/verify.hpp"
