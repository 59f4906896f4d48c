#pragma once

#include "core.hpp"
#include "fintype.hpp"
#include "pstore.hpp"
#include "witnesses.hpp"
#include "funlist.hpp"
#include "free.hpp"
#include "optics.hpp"
#include "container.hpp"
#include "laws.hpp"
#include "zoo.hpp"
#include "roundtrip.hpp"
#include "teletype.hpp"
