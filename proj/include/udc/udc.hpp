// udc/udc.hpp - umbrella header for the whole library.

#pragma once

#include "udc/chart.hpp"
#include "udc/ingest.hpp"
#include "udc/notation.hpp"
#include "udc/ontogeny.hpp"
#include "udc/serialize.hpp"
#include "udc/stats.hpp"
#include "udc/text.hpp"
