#pragma once

// Umbrella header: the whole library in one include.

#include "fracstefan/caputo.hpp"
#include "fracstefan/equivalence.hpp"
#include "fracstefan/errors.hpp"
#include "fracstefan/special.hpp"
#include "fracstefan/stefan.hpp"
#include "fracstefan/verification.hpp"
