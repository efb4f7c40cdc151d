#pragma once

#include "forcing_lab/constructions.hpp"
#include "forcing_lab/critical.hpp"
#include "forcing_lab/digraph.hpp"
#include "forcing_lab/errors.hpp"
#include "forcing_lab/exact_rank.hpp"
#include "forcing_lab/families.hpp"
#include "forcing_lab/io.hpp"
#include "forcing_lab/isomorphism.hpp"
#include "forcing_lab/line.hpp"
#include "forcing_lab/propagation.hpp"
#include "forcing_lab/random.hpp"
#include "forcing_lab/solvers.hpp"
#include "forcing_lab/vertex_set.hpp"
