#pragma once

#include "zetastrip/errors.hpp"
#include "zetastrip/complex_point.hpp"
#include "zetastrip/special_functions.hpp"
#include "zetastrip/chi_factor.hpp"
#include "zetastrip/lemma_inequalities.hpp"
#include "zetastrip/parallel.hpp"
#include "zetastrip/lemma_suite.hpp"
#include "zetastrip/strip_verifier.hpp"
#include "zetastrip/report_json.hpp"
