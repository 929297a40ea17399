#ifndef FPGT_FPGT_HPP
#define FPGT_FPGT_HPP

// Umbrella header: single-scan closed frequent itemset mining over a
// sliding window of transactions.

#include "fpgt/ingest.hpp"
#include "fpgt/miner.hpp"
#include "fpgt/oracle.hpp"
#include "fpgt/pipeline.hpp"
#include "fpgt/ternary.hpp"
#include "fpgt/window.hpp"

#endif  // FPGT_FPGT_HPP
