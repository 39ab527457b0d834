#pragma once

#include "fusion/catalog.hpp"
#include "fusion/cohomology_oracle.hpp"
#include "fusion/document.hpp"
#include "fusion/error.hpp"
#include "fusion/extender.hpp"
#include "fusion/grading.hpp"
#include "fusion/graphs.hpp"
#include "fusion/homalg.hpp"
#include "fusion/integer.hpp"
#include "fusion/obstruction.hpp"
#include "fusion/ring.hpp"
