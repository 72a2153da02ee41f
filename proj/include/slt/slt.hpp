#pragma once

#include "slt/cleaning.hpp"
#include "slt/corpus.hpp"
#include "slt/error.hpp"
#include "slt/frameplan.hpp"
#include "slt/itn.hpp"
#include "slt/metrics.hpp"
#include "slt/normalize.hpp"
#include "slt/numbers_de.hpp"
#include "slt/stats.hpp"
#include "slt/stoplist.hpp"
#include "slt/unicode.hpp"
