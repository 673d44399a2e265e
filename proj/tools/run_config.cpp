#include "run_config.hpp"
