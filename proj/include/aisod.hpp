#ifndef AISOD_AISOD_HPP
#define AISOD_AISOD_HPP

// Umbrella header: AIS decoding through origin-destination matrices.

#include "aisod/bits.hpp"
#include "aisod/cleaning.hpp"
#include "aisod/csv.hpp"
#include "aisod/decoder.hpp"
#include "aisod/error.hpp"
#include "aisod/export.hpp"
#include "aisod/fleet.hpp"
#include "aisod/geo.hpp"
#include "aisod/messages.hpp"
#include "aisod/mid.hpp"
#include "aisod/nmea.hpp"
#include "aisod/od.hpp"
#include "aisod/parallel.hpp"
#include "aisod/pipeline.hpp"
#include "aisod/ports.hpp"
#include "aisod/time.hpp"
#include "aisod/track.hpp"

#endif  // AISOD_AISOD_HPP
