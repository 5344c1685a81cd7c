#ifndef NDSORT_NDSORT_HPP
#define NDSORT_NDSORT_HPP

#include "ndsort/baselines.hpp"
#include "ndsort/bench.hpp"
#include "ndsort/core.hpp"
#include "ndsort/datagen.hpp"
#include "ndsort/dominance_set.hpp"
#include "ndsort/io.hpp"
#include "ndsort/merge_sort.hpp"
#include "ndsort/mnds.hpp"

#endif
