#pragma once

#include "psl/algebra.hpp"
#include "psl/error.hpp"
#include "psl/field.hpp"
#include "psl/hopf.hpp"
#include "psl/instances.hpp"
#include "psl/lattice.hpp"
#include "psl/linalg.hpp"
#include "psl/paction.hpp"
#include "psl/pmod.hpp"
#include "psl/radicals.hpp"
#include "psl/report.hpp"
#include "psl/smash.hpp"
