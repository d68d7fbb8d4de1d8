#pragma once

#include "fermitrap/analysis.hpp"
#include "fermitrap/bcs_model.hpp"
#include "fermitrap/csv.hpp"
#include "fermitrap/entanglement.hpp"
#include "fermitrap/errors.hpp"
#include "fermitrap/oracle.hpp"
#include "fermitrap/oscillator_basis.hpp"
#include "fermitrap/pair_correlations.hpp"
#include "fermitrap/spin_density.hpp"
