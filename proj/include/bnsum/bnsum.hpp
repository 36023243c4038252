#pragma once

#include "bnsum/corpus.hpp"
#include "bnsum/error.hpp"
#include "bnsum/evaluator.hpp"
#include "bnsum/io.hpp"
#include "bnsum/ranker.hpp"
#include "bnsum/summarizer.hpp"
#include "bnsum/textproc.hpp"
#include "bnsum/tuner.hpp"
