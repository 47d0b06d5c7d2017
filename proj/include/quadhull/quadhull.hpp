#pragma once

#include "quadhull/algebra.hpp"
#include "quadhull/bcode.hpp"
#include "quadhull/evalinterp.hpp"
#include "quadhull/fq.hpp"
#include "quadhull/hull.hpp"
#include "quadhull/linalg.hpp"
#include "quadhull/multred.hpp"
#include "quadhull/search.hpp"
#include "quadhull/symmetric.hpp"
#include "quadhull/tables.hpp"
