#pragma once

// Everything except the report I/O, which needs nlohmann_json.
#include "rmtlab/config.hpp"
#include "rmtlab/edgestats.hpp"
#include "rmtlab/ensemble.hpp"
#include "rmtlab/errors.hpp"
#include "rmtlab/experiments.hpp"
#include "rmtlab/greencmp.hpp"
#include "rmtlab/lawcheck.hpp"
#include "rmtlab/momentcmp.hpp"
#include "rmtlab/mplaw.hpp"
#include "rmtlab/parallel.hpp"
#include "rmtlab/random.hpp"
#include "rmtlab/spectra.hpp"
#include "rmtlab/stats.hpp"
