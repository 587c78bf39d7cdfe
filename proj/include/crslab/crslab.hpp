#pragma once

#include "crslab/error.hpp"
#include "crslab/labels.hpp"
#include "crslab/graph.hpp"
#include "crslab/distance.hpp"
#include "crslab/graph6.hpp"
#include "crslab/resolving.hpp"
#include "crslab/families.hpp"
#include "crslab/extremal.hpp"
#include "crslab/json_io.hpp"
#include "crslab/suites.hpp"
