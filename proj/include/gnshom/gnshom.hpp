#pragma once

#include "gnshom/assembly.hpp"
#include "gnshom/bignat.hpp"
#include "gnshom/gamma.hpp"
#include "gnshom/modular_forms.hpp"
#include "gnshom/partition.hpp"
#include "gnshom/pattern_gallery.hpp"
#include "gnshom/rep_ring.hpp"
