// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lyndon/binary_rle.hpp"
#include "lyndon/border.hpp"
#include "lyndon/check.hpp"
#include "lyndon/factorization.hpp"
#include "lyndon/lyndon_border_array.hpp"
#include "lyndon/lyndon_word.hpp"
#include "lyndon/oracle.hpp"
#include "lyndon/snlbfp.hpp"
#include "lyndon/suffix_index.hpp"
#include "lyndon/text.hpp"
