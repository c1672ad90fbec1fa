#pragma once

#include "wordlen/annotate.hpp"
#include "wordlen/deviation.hpp"
#include "wordlen/length_distribution.hpp"
#include "wordlen/lexicon.hpp"
#include "wordlen/lineation.hpp"
#include "wordlen/match_table.hpp"
#include "wordlen/number_words.hpp"
#include "wordlen/power_series.hpp"
#include "wordlen/random_model.hpp"
#include "wordlen/reports.hpp"
#include "wordlen/text.hpp"
#include "wordlen/tokenize.hpp"
#include "wordlen/types.hpp"
