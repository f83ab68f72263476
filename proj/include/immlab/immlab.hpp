#pragma once

#include "immlab/characters.hpp"
#include "immlab/config.hpp"
#include "immlab/error.hpp"
#include "immlab/gadgets.hpp"
#include "immlab/identities.hpp"
#include "immlab/immanant.hpp"
#include "immlab/io.hpp"
#include "immlab/matrix.hpp"
#include "immlab/partition.hpp"
#include "immlab/permanent.hpp"
#include "immlab/permutation.hpp"
#include "immlab/random.hpp"
#include "immlab/rational.hpp"
#include "immlab/sparse_poly.hpp"
