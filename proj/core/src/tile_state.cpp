#include "hexweave/tile_state.hpp"
