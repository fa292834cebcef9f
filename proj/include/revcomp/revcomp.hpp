#pragma once

#include "circuit.hpp"
#include "compare.hpp"
#include "compressor.hpp"
#include "error.hpp"
#include "gate.hpp"
#include "netlist.hpp"
#include "quantum.hpp"
#include "truth_table.hpp"
