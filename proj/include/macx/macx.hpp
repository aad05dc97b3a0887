#pragma once

#include "macx/vertex_set.hpp"
#include "macx/graph.hpp"
#include "macx/simplicial_complex.hpp"
#include "macx/star_condition.hpp"
#include "macx/complex_io.hpp"
#include "macx/smith.hpp"
#include "macx/homology.hpp"
#include "macx/classifier.hpp"
#include "macx/generators.hpp"
#include "macx/loop_algebra.hpp"
#include "macx/enumeration.hpp"
#include "macx/report.hpp"
