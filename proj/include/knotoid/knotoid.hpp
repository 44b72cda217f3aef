#pragma once

#include "knotoid/chord.hpp"
#include "knotoid/closure.hpp"
#include "knotoid/codec.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/laurent.hpp"
#include "knotoid/moves.hpp"
