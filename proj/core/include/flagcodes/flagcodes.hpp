#pragma once

#include "flagcodes/cdc.hpp"
#include "flagcodes/channel.hpp"
#include "flagcodes/codefile.hpp"
#include "flagcodes/decoder.hpp"
#include "flagcodes/errors.hpp"
#include "flagcodes/experiment.hpp"
#include "flagcodes/field.hpp"
#include "flagcodes/flag.hpp"
#include "flagcodes/flag_code.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/subspace.hpp"
