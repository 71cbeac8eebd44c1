#pragma once

// Umbrella header: exact factorial-ratio and q-analogue toolkit.

#include "qrious/cyclotomic.hpp"
#include "qrious/families.hpp"
#include "qrious/g2.hpp"
#include "qrious/int_poly.hpp"
#include "qrious/integer.hpp"
#include "qrious/integrality.hpp"
#include "qrious/laurent.hpp"
#include "qrious/parallel.hpp"
#include "qrious/parse.hpp"
#include "qrious/q_ratio.hpp"
#include "qrious/ratio_spec.hpp"
#include "qrious/report.hpp"
#include "qrious/search.hpp"
