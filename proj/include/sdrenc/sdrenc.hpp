#pragma once

#include "sdrenc/category.hpp"
#include "sdrenc/composite.hpp"
#include "sdrenc/config.hpp"
#include "sdrenc/csv.hpp"
#include "sdrenc/errors.hpp"
#include "sdrenc/expression.hpp"
#include "sdrenc/geospatial.hpp"
#include "sdrenc/hash.hpp"
#include "sdrenc/pipeline.hpp"
#include "sdrenc/quality.hpp"
#include "sdrenc/scalar.hpp"
#include "sdrenc/sdr.hpp"
#include "sdrenc/validation.hpp"
