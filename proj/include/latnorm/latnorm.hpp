#pragma once

// Exact-arithmetic toolkit for lattice and rational polytopes: integral
// closedness and normality certificates, translate-cover checks for dilates,
// corner parallelepiped covers, Hilbert bases of corner cones, and the
// edge-length threshold recursions tying them together.

#include "latnorm/bounds.hpp"
#include "latnorm/cn.hpp"
#include "latnorm/corner.hpp"
#include "latnorm/cover.hpp"
#include "latnorm/dd.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/fixtures.hpp"
#include "latnorm/fm.hpp"
#include "latnorm/fuzz.hpp"
#include "latnorm/hilbert.hpp"
#include "latnorm/intlinalg.hpp"
#include "latnorm/io.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/lp.hpp"
#include "latnorm/matrix.hpp"
#include "latnorm/normality.hpp"
#include "latnorm/polytope.hpp"
#include "latnorm/region.hpp"
#include "latnorm/report.hpp"
#include "latnorm/scalar.hpp"
#include "latnorm/vec.hpp"
