#pragma once

// Umbrella header for the no-signaling box toolkit.

#include "nsbox/behavior.hpp"
#include "nsbox/catalog.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/distill.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/pqdetect.hpp"
#include "nsbox/quantum.hpp"
#include "nsbox/relabel.hpp"
#include "nsbox/sampling.hpp"
#include "nsbox/vertices.hpp"
#include "nsbox/wiring.hpp"
