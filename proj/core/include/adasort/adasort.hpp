// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "adasort/census.hpp"
#include "adasort/errors.hpp"
#include "adasort/generators.hpp"
#include "adasort/item.hpp"
#include "adasort/measures.hpp"
#include "adasort/meter.hpp"
#include "adasort/selection.hpp"
#include "adasort/sequence_io.hpp"
#include "adasort/sorters.hpp"
#include "adasort/verify.hpp"
