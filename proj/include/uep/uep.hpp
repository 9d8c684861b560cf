#pragma once

#include "uep/asymptotic.hpp"
#include "uep/bounds.hpp"
#include "uep/code.hpp"
#include "uep/combinatorics.hpp"
#include "uep/construction.hpp"
#include "uep/count.hpp"
#include "uep/error.hpp"
#include "uep/exhaustive.hpp"
#include "uep/luep.hpp"
#include "uep/params.hpp"
#include "uep/space.hpp"
#include "uep/sweep.hpp"
#include "uep/reference_lengths.hpp"
#include "uep/word.hpp"
