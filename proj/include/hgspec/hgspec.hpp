#pragma once

#include "hgspec/numeric_types.hpp"
#include "hgspec/hypergraph.hpp"
#include "hgspec/hg_format.hpp"
#include "hgspec/matrix_ops.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/polynomial.hpp"
#include "hgspec/structure.hpp"
#include "hgspec/closed_forms.hpp"
