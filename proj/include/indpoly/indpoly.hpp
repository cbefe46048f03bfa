#pragma once

/**
 * @file indpoly.hpp
 * @brief Umbrella header: the whole independence-polynomial toolkit.
 */

#include "indpoly/analysis.hpp"
#include "indpoly/builders.hpp"
#include "indpoly/corpus.hpp"
#include "indpoly/count.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/parse.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/sweep.hpp"
#include "indpoly/transform.hpp"
