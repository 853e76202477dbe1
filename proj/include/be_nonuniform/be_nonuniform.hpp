#pragma once

#include "be_nonuniform/bounds.hpp"
#include "be_nonuniform/distributions.hpp"
#include "be_nonuniform/errors.hpp"
#include "be_nonuniform/fractions.hpp"
#include "be_nonuniform/gclass.hpp"
#include "be_nonuniform/minorants.hpp"
#include "be_nonuniform/normal.hpp"
#include "be_nonuniform/optimize.hpp"
#include "be_nonuniform/scalar_search.hpp"
#include "be_nonuniform/random_suite.hpp"
#include "be_nonuniform/parallel.hpp"
#include "be_nonuniform/suites.hpp"
#include "be_nonuniform/io.hpp"
#include "be_nonuniform/commands.hpp"
