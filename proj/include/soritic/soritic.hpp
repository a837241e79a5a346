#pragma once

#include "soritic/error.hpp"
#include "soritic/rational.hpp"
#include "soritic/eps_series.hpp"
#include "soritic/neutrix.hpp"
#include "soritic/external_number.hpp"
#include "soritic/expression.hpp"
#include "soritic/formula.hpp"
#include "soritic/formula_parser.hpp"
#include "soritic/truth.hpp"
#include "soritic/evaluate.hpp"
#include "soritic/sorites.hpp"
#include "soritic/random.hpp"
#include "soritic/laws.hpp"
#include "soritic/tables.hpp"
#include "soritic/scenario_io.hpp"
#include "soritic/version.hpp"
