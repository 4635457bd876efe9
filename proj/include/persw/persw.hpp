#pragma once

#include "persw/bit_matrix.hpp"
#include "persw/cech.hpp"
#include "persw/cochain.hpp"
#include "persw/cohomologous.hpp"
#include "persw/complex_io.hpp"
#include "persw/filtered_complex.hpp"
#include "persw/meb.hpp"
#include "persw/ops.hpp"
#include "persw/persistence.hpp"
#include "persw/plot.hpp"
#include "persw/point_cloud.hpp"
#include "persw/simplex.hpp"
#include "persw/synthetic.hpp"
#include "persw/triangulations.hpp"
#include "persw/wu.hpp"
