#pragma once

#include "qschubert/classical.hpp"
#include "qschubert/conformal_blocks.hpp"
#include "qschubert/littlewood_richardson.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/quantum.hpp"
#include "qschubert/text.hpp"
