#pragma once

#include "pertinent/binary_matrix.hpp"
#include "pertinent/coefficient_table.hpp"
#include "pertinent/digraph.hpp"
#include "pertinent/discrete.hpp"
#include "pertinent/enumeration.hpp"
#include "pertinent/errors.hpp"
#include "pertinent/family_curves.hpp"
#include "pertinent/genfunc.hpp"
#include "pertinent/json_io.hpp"
#include "pertinent/numeric.hpp"
#include "pertinent/parallel.hpp"
#include "pertinent/permanent.hpp"
#include "pertinent/polynomial.hpp"
#include "pertinent/probability.hpp"
#include "pertinent/rational_matrix.hpp"
#include "pertinent/reference.hpp"
#include "pertinent/report.hpp"
#include "pertinent/type_spec.hpp"
#include "pertinent/verify.hpp"
