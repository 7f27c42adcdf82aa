#pragma once

#include "cpslice/diophantine.hpp"
#include "cpslice/embedder.hpp"
#include "cpslice/hnf.hpp"
#include "cpslice/integers.hpp"
#include "cpslice/knotspec.hpp"
#include "cpslice/lattice.hpp"
#include "cpslice/laurent.hpp"
#include "cpslice/plumbing.hpp"
#include "cpslice/report.hpp"
#include "cpslice/reproduce.hpp"
#include "cpslice/seifert.hpp"
#include "cpslice/upperbound.hpp"
